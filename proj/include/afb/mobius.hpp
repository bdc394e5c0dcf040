/**
 * @file mobius.hpp
 * @brief Reduced rational maps in one variable and exact Mobius
 *        transformations of the base CP^1.
 *
 * The canonical form of a RationalMap keeps the denominator a monic
 * polynomial with nonzero constant term; the numerator is a Laurent
 * polynomial carrying the leftover monomial factor and scale. Numerator and
 * denominator are coprime.
 */
#pragma once

#include "laurent.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace afb {

class RationalMap {
public:
    RationalMap() : num_(QLaurent::zero()), den_(QLaurent::constant(Rational(1))) {}

    RationalMap(QLaurent numerator, QLaurent denominator)
        : num_(std::move(numerator)), den_(std::move(denominator))
    {
        if (den_.is_zero())
            throw std::domain_error("RationalMap: zero denominator");
        canonicalize();
    }

    explicit RationalMap(const QLaurent& p)
        : num_(p), den_(QLaurent::constant(Rational(1), p.variable()))
    {
    }

    static RationalMap constant(const Rational& c, std::string var = "u")
    {
        return RationalMap(QLaurent::constant(c, std::move(var)));
    }

    const QLaurent& numerator() const { return num_; }
    const QLaurent& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool is_laurent() const { return den_.is_constant(); }

    const std::string& variable() const
    {
        return num_.is_zero() ? den_.variable() : num_.variable();
    }

    friend RationalMap operator+(const RationalMap& a, const RationalMap& b)
    {
        return RationalMap(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalMap operator-(const RationalMap& a, const RationalMap& b)
    {
        return RationalMap(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalMap operator*(const RationalMap& a, const RationalMap& b)
    {
        return RationalMap(a.num_ * b.num_, a.den_ * b.den_);
    }

    RationalMap reciprocal() const
    {
        if (num_.is_zero())
            throw std::domain_error("RationalMap::reciprocal: zero map");
        return RationalMap(den_, num_);
    }

    RationalMap pow(int e) const
    {
        if (e < 0)
            return reciprocal().pow(-e);
        RationalMap acc = constant(Rational(1), variable());
        for (int i = 0; i < e; ++i)
            acc = acc * (*this);
        return acc;
    }

    friend bool operator==(const RationalMap& a, const RationalMap& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator!=(const RationalMap& a, const RationalMap& b) { return !(a == b); }

    Rational evaluate(const Rational& x) const
    {
        const Rational d = den_.evaluate(x);
        if (afb::is_zero(d))
            throw std::domain_error("RationalMap::evaluate: pole");
        return num_.evaluate(x) / d;
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    void canonicalize()
    {
        if (num_.is_zero()) {
            den_ = QLaurent::constant(Rational(1), den_.variable());
            return;
        }
        // Shift both parts into genuine polynomials with nonzero constant
        // term, then divide by the monic gcd; the net monomial goes to the
        // numerator.
        const int shift_num = num_.min_exponent();
        const int shift_den = den_.min_exponent();
        QLaurent n = num_.shifted(-shift_num);
        QLaurent d = den_.shifted(-shift_den);
        const QLaurent g = poly_gcd(n, d);
        if (g.degree() > 0) {
            n = poly_div_exact(n, g);
            d = poly_div_exact(d, g);
        }
        const Rational lead = d.coeff(d.degree());
        n = (Rational(1) / lead) * n;
        d = (Rational(1) / lead) * d;
        num_ = n.shifted(shift_num - shift_den);
        den_ = d;
    }

    QLaurent num_;
    QLaurent den_;
};

// u |-> (alpha*u + beta) / (gamma*u + delta), det != 0.
class MobiusMap {
public:
    MobiusMap(Rational alpha, Rational beta, Rational gamma, Rational delta)
        : a_(std::move(alpha)), b_(std::move(beta)), c_(std::move(gamma)), d_(std::move(delta))
    {
        if (is_zero(determinant()))
            throw std::domain_error("MobiusMap: zero determinant");
    }

    static MobiusMap identity() { return MobiusMap(1, 0, 0, 1); }
    static MobiusMap scaling(const Rational& lambda) { return MobiusMap(lambda, 0, 0, 1); }
    static MobiusMap inversion() { return MobiusMap(0, 1, 1, 0); }
    // The normal-crossing gluing map u |-> -a/u.
    static MobiusMap glue(const Rational& a) { return MobiusMap(0, -a, 1, 0); }

    const Rational& alpha() const { return a_; }
    const Rational& beta() const { return b_; }
    const Rational& gamma() const { return c_; }
    const Rational& delta() const { return d_; }

    Rational determinant() const { return a_ * d_ - b_ * c_; }

    // (m1 * m2)(u) = m1(m2(u)).
    friend MobiusMap operator*(const MobiusMap& m1, const MobiusMap& m2)
    {
        return MobiusMap(m1.a_ * m2.a_ + m1.b_ * m2.c_, m1.a_ * m2.b_ + m1.b_ * m2.d_,
                         m1.c_ * m2.a_ + m1.d_ * m2.c_, m1.c_ * m2.b_ + m1.d_ * m2.d_);
    }

    MobiusMap inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

    bool is_identity() const
    {
        return is_zero(b_) && is_zero(c_) && !is_zero(a_) && a_ == d_;
    }

    // u |-> lambda*u or lambda/u; the maps that preserve the standard
    // two-chart configuration {0, infinity}.
    bool is_monomial_map() const
    {
        return (is_zero(b_) && is_zero(c_)) || (is_zero(a_) && is_zero(d_));
    }

    RationalMap as_rational_map(const std::string& var = "u") const
    {
        QLaurent num(var), den(var);
        num.add_term(1, a_);
        num.add_term(0, b_);
        den.add_term(1, c_);
        den.add_term(0, d_);
        return RationalMap(num, den);
    }

    Rational apply(const Rational& x) const
    {
        const Rational d = c_ * x + d_;
        if (is_zero(d))
            throw std::domain_error("MobiusMap::apply: pole");
        return (a_ * x + b_) / d;
    }

    friend bool operator==(const MobiusMap& m1, const MobiusMap& m2)
    {
        // projective equality
        return m1.a_ * m2.b_ == m2.a_ * m1.b_ && m1.a_ * m2.c_ == m2.a_ * m1.c_ &&
               m1.a_ * m2.d_ == m2.a_ * m1.d_ && m1.b_ * m2.c_ == m2.b_ * m1.c_ &&
               m1.b_ * m2.d_ == m2.b_ * m1.d_ && m1.c_ * m2.d_ == m2.c_ * m1.d_;
    }

private:
    Rational a_, b_, c_, d_;
};

// Exact composition p o m as a reduced rational map.
inline RationalMap substitute(const QLaurent& p, const MobiusMap& m)
{
    const std::string& var = p.variable();
    const RationalMap mm = m.as_rational_map(var);
    RationalMap acc = RationalMap(QLaurent::zero(var));
    for (const auto& [e, c] : p.terms()) {
        RationalMap term = mm.pow(e);
        acc = acc + RationalMap(QLaurent::constant(c, var)) * term;
    }
    return acc;
}

inline RationalMap substitute(const RationalMap& p, const MobiusMap& m)
{
    RationalMap num = substitute(p.numerator(), m);
    RationalMap den = substitute(p.denominator(), m);
    return RationalMap(num.numerator() * den.denominator(),
                       num.denominator() * den.numerator());
}

// Pushforward of the degree-<=2 polynomial field w(u) d/du along m; the
// result is again a degree-<=2 polynomial field on CP^1.
inline QLaurent pushforward_p1_field(const MobiusMap& m, const QLaurent& w)
{
    if (!w.is_zero() && (w.min_exponent() < 0 || w.degree() > 2))
        throw std::invalid_argument("pushforward_p1_field: field must be a quadratic polynomial");
    const std::string var = w.is_zero() ? std::string("u") : w.variable();
    const MobiusMap inv = m.inverse();
    const RationalMap z = inv.as_rational_map(var); // m^{-1}(u)
    // m'(z) = det / (gamma*z + delta)^2
    RationalMap gz = RationalMap(QLaurent::monomial(m.gamma(), 0, var)) * z +
                     RationalMap(QLaurent::constant(m.delta(), var));
    RationalMap dm = RationalMap(QLaurent::constant(m.determinant(), var)) *
                     (gz * gz).reciprocal();
    // w(z)
    RationalMap wz = RationalMap(QLaurent::zero(var));
    for (const auto& [e, c] : w.terms())
        wz = wz + RationalMap(QLaurent::constant(c, var)) * z.pow(e);
    const RationalMap result = wz * dm;
    if (!result.is_laurent())
        throw std::logic_error("pushforward_p1_field: pushforward is not polynomial");
    QLaurent out = result.numerator();
    if (!result.denominator().is_constant())
        throw std::logic_error("pushforward_p1_field: nontrivial denominator");
    const Rational dc = result.denominator().coeff(0);
    out = (Rational(1) / dc) * out;
    if (!out.is_zero() && (out.min_exponent() < 0 || out.degree() > 2))
        throw std::logic_error("pushforward_p1_field: result leaves the quadratic space");
    return out;
}

} // namespace afb
