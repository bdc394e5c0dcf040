/**
 * @file section_curve.hpp
 * @brief Sections of F_n -> CP^1 in the class Gamma_0 + (n+l)f, given by
 *        coprime polynomial graph data zeta = q(u)/s(u).
 *
 * Conventions (fixed library-wide): F_n \ Gamma_inf is the line bundle of
 * degree -n with chart-0 fiber coordinate zeta and chart-1 coordinate
 * eta = u^n zeta; Gamma_0 = {zeta = 0}, Gamma_inf = {zeta = infinity}.
 *
 * Membership in the declared class is validated exactly: the intersection
 * numbers with Gamma_0 and Gamma_inf computed from the graph data (finite
 * root multiplicities plus the contribution over u = infinity) must equal l
 * and n + l. Multiplicities at non-rational points come from the gcd chain,
 * never from numeric root finding.
 */
#pragma once

#include "laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace afb {

class SectionCurve {
public:
    // Graph section zeta = q/s.
    SectionCurve(int n, int l, QLaurent s, QLaurent q)
        : n_(n), l_(l), s_(std::move(s)), q_(std::move(q)), at_infinity_(false)
    {
        validate();
    }

    // The l-tangent section zeta = u^l through (0,0); the C^*-invariant
    // representative of its class.
    static SectionCurve canonical(int n, int l)
    {
        return SectionCurve(n, l, QLaurent::constant(Rational(1)),
                            QLaurent::monomial(Rational(1), l));
    }

    // Gamma_inf itself (zeta = infinity), the unique l = 0 section avoiding
    // the finite fiber chart entirely.
    static SectionCurve infinity_section(int n)
    {
        SectionCurve c;
        c.n_ = n;
        c.l_ = 0;
        c.at_infinity_ = true;
        return c;
    }

    int ambient_n() const { return n_; }
    int l() const { return l_; }
    bool is_infinity_section() const { return at_infinity_; }

    const QLaurent& s() const
    {
        require_graph();
        return s_;
    }
    const QLaurent& q() const
    {
        require_graph();
        return q_;
    }

    // Intersection multiplicities with Gamma_0, largest first, including the
    // contribution over u = infinity. The sum is l.
    std::vector<int> tangency_profile() const
    {
        std::vector<int> profile;
        if (at_infinity_)
            return profile;
        if (q_.degree() >= 1)
            profile = root_multiplicities(q_);
        const int at_inf = infinity_order();
        if (at_inf > 0)
            profile.push_back(at_inf);
        std::sort(profile.rbegin(), profile.rend());
        return profile;
    }

    // True when Gamma_0 is met at a single point with full multiplicity l.
    bool full_tangency() const
    {
        const auto profile = tangency_profile();
        return profile.size() == 1 && profile.front() == l_;
    }

    std::string str() const
    {
        if (at_infinity_)
            return "zeta = infinity";
        if (s_.is_constant() && s_.coeff(0) == Rational(1))
            return "zeta = " + q_.str();
        return "zeta = (" + q_.str() + ") / (" + s_.str() + ")";
    }

private:
    SectionCurve() = default;

    void require_graph() const
    {
        if (at_infinity_)
            throw std::domain_error("SectionCurve: the infinity section has no graph data");
    }

    // ord of eta|_L at v = 0: positive values are Gamma_0 multiplicity over
    // u = infinity, negative values are -1 times the Gamma_inf multiplicity.
    int infinity_order() const { return s_.degree() - q_.degree() - n_; }

    void validate()
    {
        if (n_ < 0)
            throw std::invalid_argument("SectionCurve: ambient n must be >= 0");
        if (l_ < 0)
            throw std::invalid_argument("SectionCurve: l must be >= 0");
        if (s_.is_zero())
            throw std::invalid_argument("SectionCurve: s = 0 does not define a graph");
        if (q_.is_zero())
            throw std::invalid_argument("SectionCurve: q = 0 (the curve Gamma_0) is not a "
                                        "section of positive class");
        if (!s_.is_polynomial() || !q_.is_polynomial())
            throw std::invalid_argument("SectionCurve: s and q must be polynomials in u");
        if (s_.degree() > n_ + l_ || q_.degree() > n_ + l_)
            throw std::invalid_argument("SectionCurve: degree bound deg <= n+l violated");
        if (poly_gcd(s_, q_).degree() != 0)
            throw std::invalid_argument("SectionCurve: s and q must be coprime");

        // class consistency: L.Gamma_0 = l and L.Gamma_inf = n + l
        const int ord_inf = infinity_order();
        const int gamma0 = q_.degree() + std::max(0, ord_inf);
        const int gammainf = s_.degree() + std::max(0, -ord_inf);
        if (gamma0 != l_)
            throw std::invalid_argument("SectionCurve: graph data meets Gamma_0 with total "
                                        "multiplicity " +
                                        std::to_string(gamma0) + ", expected l = " +
                                        std::to_string(l_));
        if (gammainf != n_ + l_)
            throw std::invalid_argument("SectionCurve: graph data meets Gamma_inf with total "
                                        "multiplicity " +
                                        std::to_string(gammainf) + ", expected n + l = " +
                                        std::to_string(n_ + l_));
    }

    int n_ = 0;
    int l_ = 0;
    QLaurent s_;
    QLaurent q_;
    bool at_infinity_ = false;
};

} // namespace afb
