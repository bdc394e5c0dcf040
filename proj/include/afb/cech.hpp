/**
 * @file cech.hpp
 * @brief Cech cohomology of line bundles on CP^1 for the standard two-chart
 *        cover U_0 = C(u), U_1 = C(v), v = 1/u.
 *
 * The transition convention is zeta_0 = u^d zeta_1 for the bundle of degree
 * d, fixed once for the whole library. Cocycles on U_01 are Laurent
 * polynomials in u; coboundaries are psi_0(u) - psi_1(1/u) u^d with psi_0
 * holomorphic on U_0 and psi_1 holomorphic on U_1. The canonical H^1
 * representative is therefore the Laurent band [d+1, -1].
 */
#pragma once

#include "laurent.hpp"

#include <stdexcept>
#include <vector>

namespace afb {

struct LineBundleP1 {
    int degree = 0;
};

// H^1 class in canonical band form; the band is empty iff degree >= -1.
template <class Coeff>
struct H1ClassT {
    int degree = 0;
    LaurentPoly<Coeff> representative;

    friend bool operator==(const H1ClassT& a, const H1ClassT& b)
    {
        return a.degree == b.degree && a.representative == b.representative;
    }
};

using H1Class = H1ClassT<Rational>;

// Basis {1, u, ..., u^d} of H^0(CP^1, O(d)); empty for d < 0. Each element
// s_0(u) pairs with s_1(v) = v^d s_0(1/v), holomorphic on U_1.
inline std::vector<QLaurent> h0_basis(int d)
{
    std::vector<QLaurent> basis;
    for (int k = 0; k <= d; ++k)
        basis.push_back(QLaurent::monomial(Rational(1), k));
    return basis;
}

// Basis {u^{-1}, ..., u^{d+1}} of H^1(CP^1, O(d)); empty for d >= -1.
inline std::vector<QLaurent> h1_basis(int d)
{
    std::vector<QLaurent> basis;
    for (int k = -1; k >= d + 1; --k)
        basis.push_back(QLaurent::monomial(Rational(1), k));
    return basis;
}

inline int h0_dim(int d) { return d >= 0 ? d + 1 : 0; }
inline int h1_dim(int d) { return d <= -2 ? -d - 1 : 0; }

template <class Coeff>
struct CoboundarySplit {
    LaurentPoly<Coeff> psi0;      // holomorphic on U_0, in the variable u
    LaurentPoly<Coeff> psi1;      // holomorphic on U_1, in the variable v
    LaurentPoly<Coeff> canonical; // band [d+1, -1] representative
};

// Unique decomposition c = canonical + psi_0 - psi_1(1/u) u^d of a cocycle
// on U_01 for the degree-d bundle. For d >= -1 the band is empty and the
// negative-exponent part goes to psi_1 wholesale.
template <class Coeff>
CoboundarySplit<Coeff> coboundary_decompose(const LaurentPoly<Coeff>& c, int d)
{
    CoboundarySplit<Coeff> split;
    split.psi0 = c.truncate_below(0);
    const int cut = d <= -2 ? d : -1;
    const LaurentPoly<Coeff> low = c.truncate_above(cut);
    // -psi_1(1/u) u^d = low  =>  psi_1(v) = -(low shifted by -d, inverted)
    split.psi1 = (-low.shifted(-d)).inverted("v");
    if (d + 1 <= -1)
        split.canonical = c.band(d + 1, -1);
    else
        split.canonical = LaurentPoly<Coeff>::zero(c.variable());
    return split;
}

template <class Coeff>
H1ClassT<Coeff> reduce_to_canonical(const LaurentPoly<Coeff>& c, int d)
{
    return H1ClassT<Coeff>{d, coboundary_decompose(c, d).canonical};
}

// Reassemble c from a split; the identity every decomposition test asserts.
template <class Coeff>
LaurentPoly<Coeff> coboundary_reassemble(const CoboundarySplit<Coeff>& split, int d)
{
    const LaurentPoly<Coeff> psi1_on_overlap = split.psi1.inverted(split.psi0.variable());
    return split.canonical + split.psi0 - psi1_on_overlap.shifted(d);
}

} // namespace afb
