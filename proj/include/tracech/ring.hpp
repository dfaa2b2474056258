#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tracech {

/// Exact integer type used for every coefficient and integer matrix entry.
using Int = boost::multiprecision::cpp_int;

/// Names the matrix-entry indeterminate a_{i,j}. Indices are 1-based.
struct VarId {
    int i = 0;
    int j = 0;
    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

inline std::string var_name(VarId v) {
    return "a_" + std::to_string(v.i) + "_" + std::to_string(v.j);
}

/// Single-letter name for orders up to 3, assigned row-major, so that a 2x2
/// matrix reads a, b, c, d. Falls back to the full name when out of range.
inline std::string var_alias(VarId v, int n) {
    if (n >= 1 && n <= 3 && v.i >= 1 && v.i <= n && v.j >= 1 && v.j <= n)
        return std::string(1, static_cast<char>('a' + (v.i - 1) * n + (v.j - 1)));
    return var_name(v);
}

/// Power product of indeterminates. Factors are kept sorted by variable id
/// with strictly positive exponents; the empty product is the constant
/// monomial, so equality is structural.
class Monomial {
public:
    using Factor = std::pair<VarId, unsigned>;

    Monomial() = default;

    static Monomial one() { return {}; }

    static Monomial var(VarId v, unsigned exp = 1) {
        Monomial m;
        if (exp > 0) m.factors_.emplace_back(v, exp);
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_constant() const { return factors_.empty(); }

    unsigned long degree() const {
        unsigned long d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        auto ia = a.factors_.begin(), ea = a.factors_.end();
        auto ib = b.factors_.begin(), eb = b.factors_.end();
        while (ia != ea || ib != eb) {
            if (ib == eb || (ia != ea && ia->first < ib->first)) {
                out.factors_.push_back(*ia++);
            } else if (ia == ea || ib->first < ia->first) {
                out.factors_.push_back(*ib++);
            } else {
                out.factors_.emplace_back(ia->first, ia->second + ib->second);
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Graded-lexicographic three-way comparison: higher total degree wins;
/// among equal degrees, the monomial with the larger exponent on the
/// earliest differing variable is the larger one.
inline int grlex_compare(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea && ib != eb) {
        if (ia->first < ib->first) return 1;   // a holds the earlier variable
        if (ib->first < ia->first) return -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

/// Orders term maps so that iteration starts at the leading term.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_compare(a, b) > 0;
    }
};

/// Element of Z or of Z[a_{i,j}]. Held in canonical form: term maps never
/// contain a zero coefficient, and a polynomial without variables collapses
/// to the Integer alternative, so structural equality is ring equality.
/// Values are immutable in spirit; all operators return fresh elements.
class RingElement {
public:
    using TermMap = std::map<Monomial, Int, GrlexDescending>;

    RingElement() : value_(Int(0)) {}
    RingElement(Int v) : value_(std::move(v)) {}
    RingElement(long long v) : value_(Int(v)) {}
    RingElement(int v) : value_(Int(v)) {}

    static RingElement variable(VarId v) {
        TermMap t;
        t.emplace(Monomial::var(v), Int(1));
        return RingElement(std::move(t));
    }

    static RingElement from_terms(TermMap terms) { return RingElement(std::move(terms)); }

    bool is_integer() const { return std::holds_alternative<Int>(value_); }
    bool is_zero() const { return is_integer() && as_integer() == 0; }
    bool is_one() const { return is_integer() && as_integer() == 1; }

    const Int& as_integer() const { return std::get<Int>(value_); }
    const TermMap& terms() const { return std::get<TermMap>(value_); }

    RingElement& operator+=(const RingElement& rhs) {
        if (is_integer() && rhs.is_integer()) {
            std::get<Int>(value_) += rhs.as_integer();
            return *this;
        }
        TermMap t = take_terms();
        if (rhs.is_integer()) {
            add_term(t, Monomial::one(), rhs.as_integer());
        } else {
            for (const auto& [m, c] : rhs.terms()) add_term(t, m, c);
        }
        assign_normalized(std::move(t));
        return *this;
    }

    RingElement& operator-=(const RingElement& rhs) { return *this += -rhs; }

    RingElement& operator*=(const RingElement& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend RingElement operator+(RingElement a, const RingElement& b) {
        a += b;
        return a;
    }

    friend RingElement operator-(RingElement a, const RingElement& b) {
        a -= b;
        return a;
    }

    RingElement operator-() const {
        if (is_integer()) return RingElement(Int(-as_integer()));
        TermMap t;
        for (const auto& [m, c] : terms()) t.emplace(m, -c);
        return RingElement(std::move(t));
    }

    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        if (a.is_integer() && b.is_integer()) return RingElement(a.as_integer() * b.as_integer());
        if (a.is_zero() || b.is_zero()) return RingElement();
        TermMap t;
        if (a.is_integer()) {
            for (const auto& [m, c] : b.terms()) t.emplace(m, a.as_integer() * c);
        } else if (b.is_integer()) {
            for (const auto& [m, c] : a.terms()) t.emplace(m, c * b.as_integer());
        } else {
            for (const auto& [ma, ca] : a.terms())
                for (const auto& [mb, cb] : b.terms()) add_term(t, ma * mb, ca * cb);
        }
        return RingElement(std::move(t));
    }

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    explicit RingElement(TermMap t) { assign_normalized(std::move(t)); }

    static void add_term(TermMap& t, const Monomial& m, const Int& c) {
        auto [it, inserted] = t.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        } else if (it->second == 0) {
            t.erase(it);
        }
    }

    TermMap take_terms() {
        if (is_integer()) {
            TermMap t;
            if (as_integer() != 0) t.emplace(Monomial::one(), as_integer());
            return t;
        }
        return std::move(std::get<TermMap>(value_));
    }

    void assign_normalized(TermMap t) {
        for (auto it = t.begin(); it != t.end();) {
            if (it->second == 0)
                it = t.erase(it);
            else
                ++it;
        }
        if (t.empty()) {
            value_ = Int(0);
        } else if (t.size() == 1 && t.begin()->first.is_constant()) {
            value_ = t.begin()->second;
        } else {
            value_ = std::move(t);
        }
    }

    std::variant<Int, TermMap> value_;
};

inline RingElement pow(const RingElement& base, unsigned exp) {
    RingElement out(1);
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

struct FormatOptions {
    /// 1..3 prints single-letter aliases for that matrix order; 0 prints a_i_j.
    int alias_n = 0;
};

inline std::string format_monomial(const Monomial& m, const FormatOptions& opt = {}) {
    std::string out;
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first && opt.alias_n == 0) out += "*";
        out += opt.alias_n ? var_alias(v, opt.alias_n) : var_name(v);
        if (e > 1) out += "^" + std::to_string(e);
        first = false;
    }
    return out;
}

/// Canonical text form: terms in descending graded-lex order, explicit
/// coefficients, "^" for powers. Reparses to an equal element.
inline std::string to_string(const RingElement& x, FormatOptions opt = {}) {
    if (x.is_integer()) return x.as_integer().str();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        const bool neg = c < 0;
        const Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (m.is_constant()) {
            out += mag.str();
        } else if (mag == 1) {
            out += format_monomial(m, opt);
        } else {
            out += mag.str();
            if (opt.alias_n == 0) out += "*";
            out += format_monomial(m, opt);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const RingElement& x) {
    return os << to_string(x);
}

}  // namespace tracech
