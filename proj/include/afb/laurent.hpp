/**
 * @file laurent.hpp
 * @brief Laurent polynomials in one variable over an exact coefficient ring.
 *
 * LaurentPoly is the carrier for Cech cocycles, bundle transition data and
 * vector-field components. Terms are stored in a sorted exponent -> coefficient
 * map with no zero coefficients, so equality is map equality and every
 * arithmetic result is independent of term insertion order.
 */
#pragma once

#include "rational.hpp"

#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace afb {

template <class Coeff>
class LaurentPoly {
public:
    using coeff_type = Coeff;
    using term_map   = std::map<int, Coeff>;

    LaurentPoly() : var_("u") {}
    explicit LaurentPoly(std::string var) : var_(std::move(var)) {}

    static LaurentPoly zero(std::string var = "u") { return LaurentPoly(std::move(var)); }

    static LaurentPoly monomial(const Coeff& c, int exponent, std::string var = "u")
    {
        LaurentPoly p(std::move(var));
        p.add_term(exponent, c);
        return p;
    }

    static LaurentPoly constant(const Coeff& c, std::string var = "u")
    {
        return monomial(c, 0, std::move(var));
    }

    // Dense constructor from coefficients of u^0, u^1, ...
    static LaurentPoly from_coeffs(const std::vector<Coeff>& coeffs, std::string var = "u")
    {
        LaurentPoly p(std::move(var));
        for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
            p.add_term(i, coeffs[static_cast<size_t>(i)]);
        return p;
    }

    const std::string& variable() const { return var_; }
    const term_map& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    // Single nonzero term; units of O*(U_01) on the two-chart cover are
    // exactly these.
    bool is_monomial() const { return terms_.size() == 1; }

    int min_exponent() const
    {
        require_nonzero("min_exponent");
        return terms_.begin()->first;
    }

    int max_exponent() const
    {
        require_nonzero("max_exponent");
        return terms_.rbegin()->first;
    }

    // Degree of the polynomial part; -1 stands for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

    Coeff coeff(int exponent) const
    {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    void add_term(int exponent, const Coeff& c)
    {
        if (c == Coeff{})
            return;
        auto [it, inserted] = terms_.emplace(exponent, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second == Coeff{})
                terms_.erase(it);
        }
    }

    LaurentPoly operator-() const
    {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
    {
        a.check_compatible(b, "+");
        LaurentPoly r = a;
        if (r.terms_.empty())
            r.var_ = b.var_;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        a.check_compatible(b, "*");
        LaurentPoly r(a.terms_.empty() ? b.var_ : a.var_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend LaurentPoly operator*(const Coeff& s, const LaurentPoly& p)
    {
        LaurentPoly r(p.var_);
        for (const auto& [e, c] : p.terms_)
            r.add_term(e, s * c);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.terms_ != b.terms_)
            return false;
        return a.var_ == b.var_ || a.is_constant();
    }

    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly shifted(int delta) const
    {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e + delta, c);
        return r;
    }

    // Substitute u -> 1/u, renaming the variable (chart swap).
    LaurentPoly inverted(std::string new_var) const
    {
        LaurentPoly r(std::move(new_var));
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(-e, c);
        return r;
    }

    // Retains exactly the terms with exponent in [lo, hi].
    LaurentPoly band(int lo, int hi) const
    {
        if (lo > hi)
            throw std::invalid_argument("LaurentPoly::band: lo > hi");
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_)
            if (lo <= e && e <= hi)
                r.terms_.emplace(e, c);
        return r;
    }

    LaurentPoly truncate_below(int lo) const
    {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_)
            if (e >= lo)
                r.terms_.emplace(e, c);
        return r;
    }

    LaurentPoly truncate_above(int hi) const
    {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_)
            if (e <= hi)
                r.terms_.emplace(e, c);
        return r;
    }

    LaurentPoly derivative() const
    {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_) {
            if (e == 0)
                continue;
            r.add_term(e - 1, c * coeff_from_int(e));
        }
        return r;
    }

    Coeff evaluate(const Coeff& x) const
    {
        Coeff acc{};
        for (const auto& [e, c] : terms_)
            acc = acc + c * power_of(x, e);
        return acc;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first)
                os << " + ";
            first = false;
            const std::string cs = coeff_str(c);
            const bool composite = cs.find_first_of("+ ") != std::string::npos;
            const std::string wrapped = composite ? "(" + cs + ")" : cs;
            if (e == 0) {
                os << wrapped;
                continue;
            }
            const std::string var_part =
                e == 1 ? var_ : var_ + "^" + std::to_string(e);
            if (cs == "1")
                os << var_part;
            else if (cs == "-1")
                os << "-" << var_part;
            else
                os << wrapped << "*" << var_part;
        }
        return os.str();
    }

private:
    static Coeff coeff_from_int(long n)
    {
        if constexpr (std::is_same_v<Coeff, Rational>)
            return Rational(n);
        else
            return Coeff::from_int(n);
    }

    static Coeff power_of(const Coeff& x, int e)
    {
        if (e < 0) {
            if constexpr (std::is_same_v<Coeff, Rational>) {
                if (afb::is_zero(x))
                    throw std::domain_error("LaurentPoly::evaluate: 0 raised to negative power");
                return power_of(Rational(1) / x, -e);
            } else {
                throw std::domain_error("LaurentPoly::evaluate: negative exponent needs a field");
            }
        }
        Coeff acc = coeff_from_int(1);
        for (int i = 0; i < e; ++i)
            acc = acc * x;
        return acc;
    }

    static std::string coeff_str(const Coeff& c)
    {
        if constexpr (std::is_same_v<Coeff, Rational>)
            return to_string(c);
        else
            return c.str();
    }

    void require_nonzero(const char* who) const
    {
        if (terms_.empty())
            throw std::domain_error(std::string("LaurentPoly::") + who + ": zero polynomial");
    }

    void check_compatible(const LaurentPoly& other, const char* op) const
    {
        if (terms_.empty() || other.terms_.empty())
            return;
        if (is_constant() || other.is_constant())
            return;
        if (var_ != other.var_)
            throw std::invalid_argument(std::string("LaurentPoly: variable mismatch in '") + op +
                                        "': " + var_ + " vs " + other.var_);
    }

    std::string var_;
    term_map terms_;
};

using QLaurent = LaurentPoly<Rational>;

inline QLaurent q_monomial(long num, long den, int exponent, std::string var = "u")
{
    return QLaurent::monomial(rational_from(num, den), exponent, std::move(var));
}

inline QLaurent q_poly(std::initializer_list<long> coeffs, std::string var = "u")
{
    QLaurent p(std::move(var));
    int e = 0;
    for (long c : coeffs)
        p.add_term(e++, Rational(c));
    return p;
}

enum class LaurentOp { add, mul };

// Exact ring operation with normalization; the inputs must live on the same
// chart variable.
template <class Coeff>
LaurentPoly<Coeff> laurent_arith(const LaurentPoly<Coeff>& p, const LaurentPoly<Coeff>& q,
                                 LaurentOp op)
{
    return op == LaurentOp::add ? p + q : p * q;
}

template <class Coeff>
LaurentPoly<Coeff> laurent_band(const LaurentPoly<Coeff>& p, int lo, int hi)
{
    return p.band(lo, hi);
}

// --- polynomial helpers over the rationals (gcd / multiplicity machinery) ---

// Quotient and remainder for genuine polynomials (no negative exponents).
inline std::pair<QLaurent, QLaurent> poly_divmod(const QLaurent& a, const QLaurent& b)
{
    if (!a.is_polynomial() || !b.is_polynomial())
        throw std::invalid_argument("poly_divmod: inputs must be polynomials");
    if (b.is_zero())
        throw std::domain_error("poly_divmod: division by zero");
    QLaurent quotient(a.variable());
    QLaurent rem = a;
    const int db = b.degree();
    const Rational lead = b.coeff(db);
    while (!rem.is_zero() && rem.degree() >= db) {
        const int k = rem.degree() - db;
        const Rational c = rem.coeff(rem.degree()) / lead;
        QLaurent t = QLaurent::monomial(c, k, rem.variable());
        quotient = quotient + t;
        rem = rem - t * b;
    }
    return {quotient, rem};
}

inline QLaurent poly_mod(const QLaurent& a, const QLaurent& b) { return poly_divmod(a, b).second; }

inline QLaurent make_monic(const QLaurent& p)
{
    if (p.is_zero())
        return p;
    const Rational lead = p.coeff(p.degree());
    return (Rational(1) / lead) * p;
}

// Monic gcd by the Euclidean algorithm.
inline QLaurent poly_gcd(QLaurent a, QLaurent b)
{
    if (!a.is_polynomial() || !b.is_polynomial())
        throw std::invalid_argument("poly_gcd: inputs must be polynomials");
    while (!b.is_zero()) {
        QLaurent r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return make_monic(a);
}

inline QLaurent poly_div_exact(const QLaurent& a, const QLaurent& b)
{
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero())
        throw std::domain_error("poly_div_exact: division is not exact");
    return q;
}

// Root multiplicity profile over the algebraic closure, computed from the
// gcd chain a_{i+1} = gcd(a_i, a_i'): the number of distinct roots of
// multiplicity exactly m is (deg a_{m-1} - deg a_m) - (deg a_m - deg a_{m+1}).
// Roots are never extracted, so irrational multiplicities are exact.
inline std::vector<int> root_multiplicities(const QLaurent& q)
{
    if (q.is_zero())
        throw std::invalid_argument("root_multiplicities: zero polynomial");
    std::vector<int> degs; // degrees of the gcd chain
    QLaurent a = make_monic(q);
    while (a.degree() > 0) {
        degs.push_back(a.degree());
        a = poly_gcd(a, a.derivative());
    }
    degs.push_back(0);
    std::vector<int> profile;
    // roots with multiplicity >= m: degs[m-1] - degs[m]
    for (size_t m = 1; m + 1 <= degs.size(); ++m) {
        const int ge_m   = degs[m - 1] - (m < degs.size() ? degs[m] : 0);
        const int ge_m1  = m < degs.size() - 1 ? degs[m] - degs[m + 1] : 0;
        const int exactly = ge_m - ge_m1;
        for (int i = 0; i < exactly; ++i)
            profile.push_back(static_cast<int>(m));
    }
    return profile;
}

} // namespace afb
