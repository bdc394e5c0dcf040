/**
 * @file affine_bundle.hpp
 * @brief Classification and coordinate calculus for affine C-bundles over
 *        CP^1 on the standard two-chart cover.
 *
 * A cocycle is a pair (a, b) of Laurent polynomials on U_01 with a a unit
 * (single term), representing the transition zeta_0 = a(u) zeta_1 + b(u).
 * The canonical form of a degree -n bundle (n >= 2) is
 *
 *     zeta_0 = u^{-n} zeta_1 + sum_{l=1}^{n-1} t_l u^{-l},
 *
 * and (n, t) classifies the bundle up to isomorphisms covering the identity,
 * with t defined up to one overall nonzero scalar. Bundles of degree >= -1
 * have no affine moduli and collapse to the line bundle of that degree.
 */
#pragma once

#include "cech.hpp"
#include "laurent.hpp"
#include "mobius.hpp"
#include "section_curve.hpp"
#include "sympoly.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace afb {

template <class Coeff>
Coeff coeff_one()
{
    if constexpr (std::is_same_v<Coeff, Rational>)
        return Rational(1);
    else
        return Coeff::from_int(1);
}

inline Rational coeff_inverse(const Rational& c)
{
    if (is_zero(c))
        throw std::domain_error("coeff_inverse: zero");
    return Rational(1) / c;
}

inline SymPoly coeff_inverse(const SymPoly& c)
{
    if (!c.is_rational_constant())
        throw std::domain_error("coeff_inverse: only constant fiber scalings are invertible "
                                "over a polynomial coefficient ring");
    const Rational val = c.rational_constant();
    if (is_zero(val))
        throw std::domain_error("coeff_inverse: zero");
    return SymPoly::from_rational(Rational(1) / val);
}

template <class Coeff>
struct AffineBundleCocycleT {
    LaurentPoly<Coeff> a; // unit: exactly one nonzero term
    LaurentPoly<Coeff> b;

    AffineBundleCocycleT(LaurentPoly<Coeff> a_in, LaurentPoly<Coeff> b_in)
        : a(std::move(a_in)), b(std::move(b_in))
    {
        if (!a.is_monomial())
            throw std::invalid_argument("AffineBundleCocycle: a must be a unit (single term)");
    }
};

using AffineBundleCocycle = AffineBundleCocycleT<Rational>;

// Degree of the affine bundle: the image of the cocycle class in
// H^1(CP^1, O^*) = Z, read off as the exponent of the unit a. Equals minus
// the self-intersection of the section at infinity of the natural
// compactification.
template <class Coeff>
int degree(const AffineBundleCocycleT<Coeff>& c)
{
    return c.a.min_exponent();
}

template <class Coeff>
struct CanonicalAffineBundleT {
    int n = 2;                // the bundle has degree -n, n >= 2
    std::vector<Coeff> t;     // t_1 .. t_{n-1}

    CanonicalAffineBundleT(int n_in, std::vector<Coeff> t_in) : n(n_in), t(std::move(t_in))
    {
        if (n < 2)
            throw std::invalid_argument("CanonicalAffineBundle: requires n >= 2");
        if (static_cast<int>(t.size()) != n - 1)
            throw std::invalid_argument("CanonicalAffineBundle: t must have n-1 entries");
    }

    bool is_line_bundle() const
    {
        for (const auto& c : t)
            if (!(c == Coeff{}))
                return false;
        return true;
    }

    LaurentPoly<Coeff> transition_b() const
    {
        LaurentPoly<Coeff> b("u");
        for (int l = 1; l <= n - 1; ++l)
            b.add_term(-l, t[static_cast<size_t>(l - 1)]);
        return b;
    }

    AffineBundleCocycleT<Coeff> cocycle() const
    {
        return AffineBundleCocycleT<Coeff>(
            LaurentPoly<Coeff>::monomial(coeff_one<Coeff>(), -n, "u"), transition_b());
    }
};

using CanonicalAffineBundle = CanonicalAffineBundleT<Rational>;

struct LineBundleReport {
    int degree = 0;
};

template <class Coeff>
struct NormalizeResultT {
    std::optional<CanonicalAffineBundleT<Coeff>> canonical; // degree <= -2
    std::optional<LineBundleReport> line_bundle;            // degree >= -1

    bool is_line_bundle_point() const { return line_bundle.has_value(); }
};

using NormalizeResult = NormalizeResultT<Rational>;

// Rescale a to u^{-n} by a constant fiber change on chart 1 (b unchanged),
// then reduce b modulo coboundaries at degree d = -n. For degree >= -1 the
// representative band is empty and the bundle is the unique line bundle of
// that degree.
template <class Coeff>
NormalizeResultT<Coeff> normalize(const AffineBundleCocycleT<Coeff>& c)
{
    const int d = degree(c);
    NormalizeResultT<Coeff> result;
    if (d >= -1) {
        result.line_bundle = LineBundleReport{d};
        return result;
    }
    const int n = -d;
    const LaurentPoly<Coeff> canonical_b = reduce_to_canonical(c.b, d).representative;
    std::vector<Coeff> t;
    for (int l = 1; l <= n - 1; ++l)
        t.push_back(canonical_b.coeff(-l));
    result.canonical = CanonicalAffineBundleT<Coeff>(n, std::move(t));
    return result;
}

// Fiber coordinate change zeta_i -> phi_i zeta_i + psi_i. phi_i must be a
// nonzero constant: on the affine charts the only algebraic units are
// constants, which is also exactly what the normal form needs. psi_0 is a
// polynomial in u, psi_1 a polynomial in v.
template <class Coeff>
struct CoordinateChangeT {
    LaurentPoly<Coeff> phi0, phi1; // constants, validated
    LaurentPoly<Coeff> psi0;       // holomorphic on U_0 (variable u)
    LaurentPoly<Coeff> psi1;       // holomorphic on U_1 (variable v)

    CoordinateChangeT(LaurentPoly<Coeff> phi0_in, LaurentPoly<Coeff> phi1_in,
                      LaurentPoly<Coeff> psi0_in, LaurentPoly<Coeff> psi1_in)
        : phi0(std::move(phi0_in)), phi1(std::move(phi1_in)), psi0(std::move(psi0_in)),
          psi1(std::move(psi1_in))
    {
        if (!phi0.is_monomial() || phi0.min_exponent() != 0)
            throw std::invalid_argument("CoordinateChange: phi_0 must be a nonzero constant "
                                        "(the units of O*(U_0) are constants)");
        if (!phi1.is_monomial() || phi1.min_exponent() != 0)
            throw std::invalid_argument("CoordinateChange: phi_1 must be a nonzero constant");
        if (!psi0.is_polynomial())
            throw std::invalid_argument("CoordinateChange: psi_0 must be holomorphic on U_0");
        if (!psi1.is_polynomial())
            throw std::invalid_argument("CoordinateChange: psi_1 must be holomorphic on U_1");
    }

    static CoordinateChangeT identity()
    {
        return CoordinateChangeT(LaurentPoly<Coeff>::constant(coeff_one<Coeff>()),
                                 LaurentPoly<Coeff>::constant(coeff_one<Coeff>()),
                                 LaurentPoly<Coeff>::zero("u"), LaurentPoly<Coeff>::zero("v"));
    }
};

using CoordinateChange = CoordinateChangeT<Rational>;

// New cocycle after the fiber change:
//   a~ = (phi_0/phi_1) a,   b~ = phi_0 b + psi_0 - (phi_0/phi_1) psi_1 a.
template <class Coeff>
AffineBundleCocycleT<Coeff> apply_change(const AffineBundleCocycleT<Coeff>& c,
                                         const CoordinateChangeT<Coeff>& ch)
{
    const Coeff p0 = ch.phi0.coeff(0);
    const Coeff p1_inv = coeff_inverse(ch.phi1.coeff(0));
    const Coeff ratio = p0 * p1_inv;
    LaurentPoly<Coeff> new_a = ratio * c.a;
    const LaurentPoly<Coeff> psi1_on_overlap = ch.psi1.inverted("u");
    LaurentPoly<Coeff> new_b = p0 * c.b + ch.psi0 - ratio * (psi1_on_overlap * c.a);
    return AffineBundleCocycleT<Coeff>(std::move(new_a), std::move(new_b));
}

// t-vectors are proportional by one nonzero scalar. Division-free so it also
// works over polynomial coefficient rings.
template <class Coeff>
bool proportional(const std::vector<Coeff>& x, const std::vector<Coeff>& y)
{
    if (x.size() != y.size())
        return false;
    bool x_zero = true, y_zero = true;
    for (const auto& c : x)
        if (!(c == Coeff{}))
            x_zero = false;
    for (const auto& c : y)
        if (!(c == Coeff{}))
            y_zero = false;
    if (x_zero || y_zero)
        return x_zero == y_zero;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (!(x[i] * y[j] == x[j] * y[i]))
                return false;
    // same support direction: a zero entry on one side forces it on the other
    for (size_t i = 0; i < x.size(); ++i)
        if ((x[i] == Coeff{}) != (y[i] == Coeff{}))
            return false;
    return true;
}

// Isomorphism as affine bundles covering the identity of CP^1: same degree
// and equal points of H^1/C^*.
template <class Coeff>
bool is_isomorphic(const CanonicalAffineBundleT<Coeff>& A, const CanonicalAffineBundleT<Coeff>& B)
{
    return A.n == B.n && proportional(A.t, B.t);
}

// Pullback of the transition data along a base Mobius map that preserves the
// standard chart configuration {0, infinity}, i.e. u -> lambda u or
// u -> lambda / u. Other maps would require re-trivializing over moved
// charts, which leaves the Laurent cocycle model; they are reported, not
// silently mangled.
inline CanonicalAffineBundle mobius_pullback(const CanonicalAffineBundle& A, const MobiusMap& m)
{
    if (!m.is_monomial_map())
        throw std::invalid_argument(
            "mobius_pullback: only maps preserving {0, infinity} (u -> c u, u -> c/u) keep the "
            "standard two-chart trivialization; re-trivializing a general pullback is "
            "unsupported");
    const QLaurent a0 = QLaurent::monomial(Rational(1), -A.n);
    const QLaurent b0 = A.transition_b();

    auto subst_monomial = [](const QLaurent& p, const Rational& lambda, bool invert) {
        QLaurent r(p.variable());
        for (const auto& [e, c] : p.terms()) {
            Rational scale(1);
            for (int i = 0; i < (e < 0 ? -e : e); ++i)
                scale *= lambda;
            if (e < 0)
                scale = Rational(1) / scale;
            r.add_term(invert ? -e : e, c * scale);
        }
        return r;
    };

    QLaurent new_a("u"), new_b("u");
    if (is_zero(m.gamma())) { // u -> lambda u with lambda = alpha/delta
        const Rational lambda = m.alpha() / m.delta();
        new_a = subst_monomial(a0, lambda, false);
        new_b = subst_monomial(b0, lambda, false);
    } else { // u -> lambda / u with lambda = beta/gamma: the charts swap
        const Rational lambda = m.beta() / m.gamma();
        const QLaurent am = subst_monomial(a0, lambda, true);
        const QLaurent bm = subst_monomial(b0, lambda, true);
        // zeta^_0 = a(m(u))^{-1} zeta^_1 - b(m(u))/a(m(u))
        const Rational lead = am.coeff(am.min_exponent());
        new_a = QLaurent::monomial(Rational(1) / lead, -am.min_exponent());
        new_b = -(bm * new_a);
    }
    auto result = normalize(AffineBundleCocycle(new_a, new_b));
    if (!result.canonical)
        throw std::logic_error("mobius_pullback: degree changed under pullback");
    return *result.canonical;
}

struct TorusWeight {
    int w1 = 0, w2 = 0;
    friend bool operator==(const TorusWeight& a, const TorusWeight& b)
    {
        return a.w1 == b.w1 && a.w2 == b.w2;
    }
};

// Verifies symbolically that (u, zeta_0, zeta_1) -> (s1 u, s2 zeta_0,
// s1^n s2 zeta_1) carries the canonical transition relation with parameters
// t_l to the relation with parameters s1^l s2 t_l, and returns the weight
// (l, 1) of each t_l.
inline std::vector<TorusWeight> torus_weights(int n)
{
    if (n < 2)
        throw std::invalid_argument("torus_weights: requires n >= 2");
    std::vector<std::string> names = {"u", "zeta0", "zeta1", "s1", "s2"};
    for (int l = 1; l <= n - 1; ++l)
        names.push_back("t" + std::to_string(l));
    auto table = make_symbols(names);

    auto sym = [&](const std::string& name, int power = 1) {
        return SymPoly::symbol(name, table, power);
    };

    // R_t(u, zeta0, zeta1) = zeta0 - u^{-n} zeta1 - sum t_l u^{-l}
    SymPoly relation = sym("zeta0") - sym("u", -n) * sym("zeta1");
    for (int l = 1; l <= n - 1; ++l)
        relation = relation - sym("t" + std::to_string(l)) * sym("u", -l);

    // R_{t'} evaluated on the transformed coordinates, t'_l = s1^l s2 t_l
    SymPoly transformed = sym("s2") * sym("zeta0") -
                          (sym("s1", -n) * sym("u", -n)) * (sym("s1", n) * sym("s2") * sym("zeta1"));
    for (int l = 1; l <= n - 1; ++l)
        transformed = transformed - (sym("s1", l) * sym("s2") * sym("t" + std::to_string(l))) *
                                        (sym("s1", -l) * sym("u", -l));

    if (!(transformed == sym("s2") * relation))
        throw std::logic_error("torus_weights: the torus action does not preserve the canonical "
                               "transition relation (internal inconsistency)");

    std::vector<TorusWeight> weights;
    for (int l = 1; l <= n - 1; ++l)
        weights.push_back(TorusWeight{l, 1});
    return weights;
}

// Rational map in symbolic form; witness data for axis_compactification_type.
struct SymRationalMap {
    SymPoly num, den;
    std::string str() const { return "(" + num.str() + ") / (" + den.str() + ")"; }
};

struct AxisCompactification {
    int m = 0;                   // the ruled surface over the t_l axis is F_m
    SymRationalMap witness0;     // zeta~_0 in terms of (u, zeta_0, t)
    SymRationalMap witness1;     // zeta~_1 in terms of (v, zeta_1, t), written in u
};

// On the t_l-axis of the degree -n family the re-trivialization
//   zeta~_0 = (u^l zeta_0 - t) / (t zeta_0),
//   zeta~_1 = zeta_1 / (t v^{n-l} zeta_1 + t^2)
// satisfies zeta~_0 = v^{n-2l} zeta~_1 identically modulo the canonical
// transition relation; hence the compactified bundle is F_{|n-2l|} away from
// the central fiber. The identity is checked symbolically, exactly.
inline AxisCompactification axis_compactification_type(int n, int l)
{
    if (n < 2 || l < 1 || l > n - 1)
        throw std::invalid_argument("axis_compactification_type: need n >= 2, 1 <= l <= n-1");
    auto table = make_symbols({"u", "zeta1", "t"});
    auto sym = [&](const std::string& name, int power = 1) {
        return SymPoly::symbol(name, table, power);
    };

    // substitute zeta_0 = u^{-n} zeta_1 + t u^{-l}
    const SymPoly zeta0 = sym("u", -n) * sym("zeta1") + sym("t") * sym("u", -l);

    // zeta~_0 = (u^l zeta0 - t) / (t zeta0)
    const SymPoly lhs_num = sym("u", l) * zeta0 - sym("t");
    const SymPoly lhs_den = sym("t") * zeta0;

    // v^{n-2l} zeta~_1 = u^{2l-n} zeta1 / (t u^{l-n} zeta1 + t^2)
    const SymPoly rhs_num = sym("u", 2 * l - n) * sym("zeta1");
    const SymPoly rhs_den = sym("t") * sym("u", l - n) * sym("zeta1") + sym("t", 2);

    if (!(lhs_num * rhs_den == rhs_num * lhs_den))
        throw std::logic_error("axis_compactification_type: the axis coordinate change fails "
                               "the transition identity (internal inconsistency)");

    AxisCompactification out;
    out.m = n - 2 * l >= 0 ? n - 2 * l : 2 * l - n;
    auto full = make_symbols({"u", "zeta0", "zeta1", "t"});
    auto fsym = [&](const std::string& name, int power = 1) {
        return SymPoly::symbol(name, full, power);
    };
    out.witness0 = SymRationalMap{fsym("u", l) * fsym("zeta0") - fsym("t"),
                                  fsym("t") * fsym("zeta0")};
    out.witness1 = SymRationalMap{fsym("zeta1"),
                                  fsym("t") * fsym("u", l - n) * fsym("zeta1") + fsym("t", 2)};
    return out;
}

// F_n \ L as an affine bundle over CP^1 on the standard cover, for sections
// in torus-adapted position: L meets Gamma_inf only over u = infinity and
// Gamma_0 only over u = 0, i.e. zeta = c u^l (or L = Gamma_inf itself).
// New fiber coordinates: 1/(zeta - c u^l) on chart 0 and, on chart 1,
// f eta/(f - eta) with f = eta|_L; eliminating eta gives
//   zeta~_0 = -(1/c^2) u^{-(n+2l)} zeta~_1 - (1/c) u^{-l},
// an affine cocycle of degree -(n + 2l).
inline AffineBundleCocycle complement_to_affine_bundle(int n, const SectionCurve& L)
{
    if (L.ambient_n() != n)
        throw std::invalid_argument("complement_to_affine_bundle: ambient mismatch");
    if (L.is_infinity_section())
        return AffineBundleCocycle(QLaurent::monomial(Rational(1), -n), QLaurent::zero("u"));
    if (!L.s().is_constant())
        throw std::invalid_argument(
            "complement_to_affine_bundle: unsupported section position: L meets Gamma_inf over "
            "finite base points (s non-constant); the complement cannot be trivialized over the "
            "standard two charts in Laurent form");
    if (!L.q().is_monomial())
        throw std::invalid_argument(
            "complement_to_affine_bundle: unsupported section position: L meets Gamma_0 away "
            "from u = 0 (q has several terms); the complement cannot be trivialized over the "
            "standard two charts in Laurent form");
    const Rational c = L.q().coeff(L.q().min_exponent()) / L.s().coeff(0);
    const int l = L.q().min_exponent();
    QLaurent a = QLaurent::monomial(-Rational(1) / (c * c), -(n + 2 * l));
    QLaurent b = QLaurent::monomial(-Rational(1) / c, -l);
    return AffineBundleCocycle(std::move(a), std::move(b));
}

} // namespace afb
