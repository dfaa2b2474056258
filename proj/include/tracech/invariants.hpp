#pragma once

#include "tracech/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracech {

/// Monic characteristic polynomial lambda^n + d_1 lambda^{n-1} + ... + d_n,
/// stored as the coefficient sequence d_1..d_n (the leading 1 is implicit).
struct CharPoly {
    int n = 0;
    std::vector<RingElement> coeffs;

    const RingElement& d(int i) const { return coeffs.at(static_cast<std::size_t>(i) - 1); }

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Sign-weighted subdigraph sum over all linear subdigraphs of length r:
/// sum of (-1)^{c(gamma)} w(gamma). By convention the value at r = 0 is 1
/// (only the empty subdigraph contributes).
inline RingElement ell(const WeightedDigraph& g, int r) {
    RingElement sum;
    for_each_lsd(g, r, [&](const LinearSubdigraph& s, const RingElement& w) {
        if (s.cycle_count() % 2 == 0)
            sum += w;
        else
            sum -= w;
    });
    return sum;
}

/// Sum of all order-i principal minors, as the subdigraph sum of
/// (-1)^{i - c(gamma)} w(gamma) over subdigraphs on i vertices.
inline RingElement f_minor_sum(const WeightedDigraph& g, int i) {
    if (i < 1 || i > g.order())
        throw std::out_of_range("minor order must be in [1, n], got " + std::to_string(i));
    RingElement sum;
    for_each_lsd(g, i, [&](const LinearSubdigraph& s, const RingElement& w) {
        if ((i - s.cycle_count()) % 2 == 0)
            sum += w;
        else
            sum -= w;
    });
    return sum;
}

/// Determinant as the sign-weighted sum over spanning linear subdigraphs.
inline RingElement det_via_lsd(const WeightedDigraph& g) {
    const int n = g.order();
    RingElement sum;
    for_each_lsd(g, n, [&](const LinearSubdigraph& s, const RingElement& w) {
        if ((n - s.cycle_count()) % 2 == 0)
            sum += w;
        else
            sum -= w;
    });
    return sum;
}

/// Characteristic polynomial with every coefficient computed as a
/// subdigraph sum: d_i = ell(g, i).
inline CharPoly char_poly(const WeightedDigraph& g) {
    CharPoly cp{g.order(), {}};
    for (int i = 1; i <= g.order(); ++i) cp.coeffs.push_back(ell(g, i));
    return cp;
}

/// Total weight of all closed walks of length k.
inline RingElement c_walks(const WeightedDigraph& g, int k) {
    RingElement sum;
    for_each_closed_walk(g, k, [&](const std::vector<int>&, const RingElement& w) { sum += w; });
    return sum;
}

/// Sum of the weights of all length-k walks from vertex i to vertex j.
inline RingElement walk_entry_sum(const WeightedDigraph& g, int i, int j, int k) {
    RingElement sum;
    for_each_walk(g, i, j, k, [&](const std::vector<int>&, const RingElement& w) { sum += w; });
    return sum;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_square(a);
    require_square(b);
    if (a.size() != b.size()) throw std::invalid_argument("matrix orders differ");
    const std::size_t n = a.size();
    Matrix out(n, std::vector<RingElement>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline Matrix mat_power(const Matrix& a, int k) {
    if (k < 1) throw std::invalid_argument("matrix power must be >= 1");
    Matrix out = a;
    for (int i = 1; i < k; ++i) out = mat_mul(out, a);
    return out;
}

inline RingElement mat_trace(const Matrix& a) {
    require_square(a);
    RingElement t;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

/// Trace of A^k by exact repeated matrix multiplication. Independent of
/// every digraph enumeration path.
inline RingElement trace_power_oracle(const Matrix& a, int k) {
    return mat_trace(mat_power(a, k));
}

namespace detail {

inline int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Dense univariate polynomial in lambda, coefficients ascending by power.
using LambdaPoly = std::vector<RingElement>;

inline LambdaPoly lambda_mul(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace detail

/// Leibniz permutation expansion of det(lambda I - A). Factorial cost,
/// capped at n <= 8. Independent of every digraph enumeration path.
inline CharPoly char_poly_oracle(const Matrix& a) {
    require_square(a);
    const int n = static_cast<int>(a.size());
    if (n > 8) throw std::invalid_argument("order cap exceeded for the Leibniz oracle (n <= 8)");
    detail::LambdaPoly acc(n + 1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const int sign = detail::permutation_sign(perm);
        detail::LambdaPoly prod{RingElement(1)};
        for (int i = 0; i < n; ++i) {
            if (perm[i] == i)
                prod = detail::lambda_mul(prod, {-a[i][i], RingElement(1)});
            else
                prod = detail::lambda_mul(prod, {-a[i][perm[i]]});
        }
        for (std::size_t p = 0; p < prod.size(); ++p) {
            if (sign > 0)
                acc[p] += prod[p];
            else
                acc[p] -= prod[p];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CharPoly cp{n, {}};
    for (int i = 1; i <= n; ++i) cp.coeffs.push_back(acc[static_cast<std::size_t>(n - i)]);
    return cp;
}

}  // namespace tracech
