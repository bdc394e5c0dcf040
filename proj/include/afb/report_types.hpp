/**
 * @file report_types.hpp
 * @brief Verification-report records and the citation registry.
 *
 * Every numeric claim a report emits carries either a citation string naming
 * the established result it reproduces, or the marker "derived" for values
 * fixed by an independent oracle computation. The registry is the single
 * place citation text lives, so wording drift is a one-file fix.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace afb {

inline const std::map<std::string, std::string>& citation_registry()
{
    static const std::map<std::string, std::string> registry = {
        {"cp1.h1-basis",
         "Cech cohomology of O(d) on CP^1 over the two-chart cover: h^1(O(-n)) = n-1 with "
         "canonical basis {u^-1, ..., u^(1-n)} (classical; Atiyah 1955 setting)"},
        {"cp1.riemann-roch", "h^0(O(d)) - h^1(O(d)) = d + 1 on CP^1"},
        {"family.af5",
         "degree -n affine C-bundles over CP^1 are classified by the transition law "
         "zeta_0 = u^-n zeta_1 + sum_l t_l u^-l with t in H^1(O(-n)), up to one overall "
         "scalar (Atiyah 1955)"},
        {"family.single-point",
         "for degree >= -1 the fiber of the classification over the degree is a single "
         "point, the line bundle itself"},
        {"family.scaling",
         "A_t and A_ct are isomorphic for every nonzero scalar c (the transition law is "
         "linear in zeta_0, zeta_1, t)"},
        {"family.axis",
         "over the t_l coordinate axis the compactified family is the Hirzebruch surface "
         "F_(n-2l) away from the central fiber, via the explicit fiber coordinate change"},
        {"family.taction",
         "the two-torus acts on the family by (u, zeta_0, t_l) -> (s1 u, s2 zeta_0, "
         "s1^l s2 t_l); the weight of t_l is (l, 1)"},
        {"surface.numerology",
         "Pic F_n = Z[Gamma_0] + Z[f] with Gamma_0^2 = -n, Gamma_0.f = 1, f^2 = 0; "
         "-K = 2 Gamma_0 + (n+2) f; h^0(O(Gamma_0 + (n+l) f)) = n + 2l + 2"},
        {"surface.inter",
         "(L, Gamma_0) = 1 and (L, Gamma_0 + n f) = n + 1 for L in |Gamma_0 + (n+1) f|"},
        {"hirzebruch.theta",
         "h^0(Theta_F_n) = n + 5, h^1(Theta_F_n) = n - 1, h^2(Theta_F_n) = 0 "
         "(Morrow-Kodaira, Complex Manifolds, pp. 43-44)"},
        {"pair.l0",
         "for any (+n)-section L: h^0(Theta_F_n,L) = 4, h^1 = n - 1, h^2 = 0, independent "
         "of the choice of L; Aut_0(F_n, L) = GL(2,C)/Z_n"},
        {"pair.l1",
         "for any L in |Gamma_0 + (n+1) f|: h^0(Theta_F_n,L) = 2, h^1 = n - 1, h^2 = 0; "
         "Aut_0(F_n, L) is the PGL(2,C) stabilizer of a base point, i.e. Af(C)"},
        {"pair.lg1",
         "for L in |Gamma_0 + (n+l) f| with l > 1: (h^0, h^1) = (1, n + 2l - 4) when L "
         "meets Gamma_0 at one point with full multiplicity (Aut_0 = C^*), and "
         "(0, n + 2l - 5) otherwise (Aut_0 trivial); h^2 = 0"},
        {"double.fd2",
         "the glued double F_n u_l F_n-bar has (h^0, h^1, h^2) of Theta equal to "
         "(5, 2(n-1), 0) for l = 0 and (1, 2(n+2l-3), 0) for l >= 1"},
        {"double.parameter",
         "the dimensions of the glued double do not depend on the gluing parameter; "
         "varying the anti-holomorphic identification is absorbed in the C^*-action"},
        {"forget.n-prime",
         "the cokernel sheaf of pair-tangent fields inside all fields restricts on each "
         "component of the glued divisor to O(-(n-2) f); its h^0 vanishes for n >= 3 and "
         "is 1-dimensional for n = 2"},
        {"twistor.h1-theta-z",
         "cited: h^1(Theta_Z) = 4(n-2) and h^2(Theta_Z) = 0 for the compactified twistor "
         "space of the ALE scalar-flat-Kahler metric on O(-n)"},
        {"twistor.index",
         "cited: the index of the ASD deformation complex on the conformal "
         "compactification of O(-n) is 12 - 4n (Viaclovsky)"},
        {"twistor.h1-twisted",
         "cited: h^1(Theta_Z(-D - D-bar)) = 1, all other degrees vanish"},
        {"twistor.pair-isom",
         "cited: natural isomorphism between first-order locally trivial deformations of "
         "the pair (Z, D u D-bar) and of the glued divisor D u D-bar; the ALE "
         "scalar-flat-Kahler moduli near the LeBrun metric is real 2(n-1)-dimensional"},
        {"metric.existence",
         "cited consequence, not computed: every affine C-bundle over CP^1 of negative "
         "degree carries an ALE scalar-flat-Kahler metric; metric existence statements "
         "are imported analytic results"},
    };
    return registry;
}

inline const std::string& citation(const std::string& id)
{
    const auto& reg = citation_registry();
    auto it = reg.find(id);
    if (it == reg.end())
        throw std::invalid_argument("citation: unknown id '" + id + "'");
    return it->second;
}

inline const std::string& derived_marker()
{
    static const std::string marker = "derived";
    return marker;
}

struct ReportRecord {
    std::string id;
    std::string inputs;
    std::string computed;
    std::string expected;
    std::string citation; // citation text or the "derived" marker
    bool pass = false;

    static ReportRecord check(std::string id, std::string inputs, std::string computed,
                              std::string expected, std::string citation_text)
    {
        ReportRecord r;
        r.id = std::move(id);
        r.inputs = std::move(inputs);
        r.computed = std::move(computed);
        r.expected = std::move(expected);
        r.citation = std::move(citation_text);
        r.pass = r.computed == r.expected;
        return r;
    }

    static ReportRecord cited(std::string id, std::string inputs, std::string value,
                              std::string citation_text)
    {
        ReportRecord r;
        r.id = std::move(id);
        r.inputs = std::move(inputs);
        r.computed = value;
        r.expected = std::move(value);
        r.citation = std::move(citation_text);
        r.pass = true;
        return r;
    }
};

struct VerificationReport {
    int n_min = 2, n_max = 8;
    int l_min = 0, l_max = 3;
    std::vector<ReportRecord> records;

    int failures() const
    {
        int f = 0;
        for (const auto& r : records)
            if (!r.pass)
                ++f;
        return f;
    }

    bool pass() const { return failures() == 0; }
};

} // namespace afb
