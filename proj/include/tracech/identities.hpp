#pragma once

#include "tracech/invariants.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tracech {

enum class Branch { AboveN, AtMostN };

inline std::string to_string(Branch b) { return b == Branch::AboveN ? "AboveN" : "AtMostN"; }

/// One trace identity instance: the labeled terms, their sum, and whether
/// the sum canonicalizes to ring zero.
struct IdentityReport {
    int n = 0;
    int r = 0;
    Branch branch = Branch::AtMostN;
    std::vector<std::pair<std::string, RingElement>> terms;
    RingElement lhs;
    bool holds = false;
};

/// Integer multiple via r-fold addition, valid over any commutative ring.
inline RingElement repeated_add(const RingElement& x, int times) {
    RingElement acc;
    for (int i = 0; i < times; ++i) acc += x;
    return acc;
}

/// Combinatorial left-hand side. For r > n this is
/// c_r + c_{r-1} l_1 + ... + c_{r-n} l_n; for 1 <= r <= n it is
/// c_r + c_{r-1} l_1 + ... + c_1 l_{r-1} + r l_r. Every quantity comes from
/// walk and subdigraph enumeration.
inline IdentityReport trace_ch_lhs(const WeightedDigraph& g, int r) {
    if (r < 1) throw std::invalid_argument("identity index must be >= 1");
    const int n = g.order();
    IdentityReport rep;
    rep.n = n;
    rep.r = r;
    rep.branch = r > n ? Branch::AboveN : Branch::AtMostN;
    rep.terms.emplace_back("c_" + std::to_string(r), c_walks(g, r));
    const int upto = r > n ? n : r - 1;
    for (int k = 1; k <= upto; ++k)
        rep.terms.emplace_back("c_" + std::to_string(r - k) + "*l_" + std::to_string(k),
                               c_walks(g, r - k) * ell(g, k));
    if (r <= n)
        rep.terms.emplace_back(std::to_string(r) + "*l_" + std::to_string(r),
                               repeated_add(ell(g, r), r));
    for (const auto& [label, value] : rep.terms) rep.lhs += value;
    rep.holds = rep.lhs.is_zero();
    return rep;
}

/// Matrix restatement of the same sums: traces of powers in place of walk
/// sums and Leibniz characteristic coefficients in place of subdigraph
/// sums. Fully independent of the enumeration paths.
inline IdentityReport trace_ch_matrix_form(const Matrix& a, int r) {
    if (r < 1) throw std::invalid_argument("identity index must be >= 1");
    require_square(a);
    const int n = static_cast<int>(a.size());
    const CharPoly cp = char_poly_oracle(a);
    IdentityReport rep;
    rep.n = n;
    rep.r = r;
    rep.branch = r > n ? Branch::AboveN : Branch::AtMostN;
    rep.terms.emplace_back("Tr(A^" + std::to_string(r) + ")", trace_power_oracle(a, r));
    const int upto = r > n ? n : r - 1;
    for (int k = 1; k <= upto; ++k)
        rep.terms.emplace_back("Tr(A^" + std::to_string(r - k) + ")*d_" + std::to_string(k),
                               trace_power_oracle(a, r - k) * cp.d(k));
    if (r <= n)
        rep.terms.emplace_back(std::to_string(r) + "*d_" + std::to_string(r),
                               repeated_add(cp.d(r), r));
    for (const auto& [label, value] : rep.terms) rep.lhs += value;
    rep.holds = rep.lhs.is_zero();
    return rep;
}

/// Batch run over r = 1..r_max. Each r yields the combinatorial report and
/// the matrix-form report; forms_agree records termwise equality of the
/// two term lists at every r.
struct SuiteResult {
    std::vector<IdentityReport> reports;
    bool all_hold = true;
    bool forms_agree = true;
};

inline SuiteResult verify_suite(const WeightedDigraph& g, int r_max) {
    if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
    const Matrix a = g.to_matrix();
    SuiteResult res;
    for (int r = 1; r <= r_max; ++r) {
        IdentityReport comb = trace_ch_lhs(g, r);
        IdentityReport mat = trace_ch_matrix_form(a, r);
        if (comb.terms.size() != mat.terms.size()) {
            res.forms_agree = false;
        } else {
            for (std::size_t i = 0; i < comb.terms.size(); ++i)
                if (!(comb.terms[i].second == mat.terms[i].second)) res.forms_agree = false;
        }
        res.all_hold = res.all_hold && comb.holds && mat.holds;
        res.reports.push_back(std::move(comb));
        res.reports.push_back(std::move(mat));
    }
    return res;
}

}  // namespace tracech
