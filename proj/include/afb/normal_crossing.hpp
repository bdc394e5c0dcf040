/**
 * @file normal_crossing.hpp
 * @brief The glued double F_n u_l F_n-bar: two copies of the canonical
 *        C^*-invariant pair (F_n, L), L the l-tangent section, identified
 *        along L by the fixed-point-free gluing u -> -a/u (a > 0).
 *
 * Only the holomorphic shadow of the anti-holomorphic identification enters:
 * all target quantities are complex dimensions, which are conjugation
 * invariant, and conjugation acts as the identity on rational coefficients.
 * The second component carries an independent copy of the same Q-basis. The
 * fixed-point freeness of tau(u) = -a/u-bar for a > 0 (|u|^2 = -a has no
 * solution) is a recorded fact about the model, not a computation.
 */
#pragma once

#include "hirzebruch.hpp"
#include "mobius.hpp"
#include "report_types.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace afb {

struct GluedDouble {
    int n = 1;
    int l = 0;
    Rational a = 1; // gluing parameter, positive

    GluedDouble(int n_in, int l_in, Rational a_in = Rational(1))
        : n(n_in), l(l_in), a(std::move(a_in))
    {
        if (n < 1)
            throw std::invalid_argument("GluedDouble: requires n >= 1");
        if (l < 0)
            throw std::invalid_argument("GluedDouble: requires l >= 0");
        if (!(a > 0))
            throw std::invalid_argument("GluedDouble: the gluing parameter must be positive "
                                        "(fixed-point freeness of the involution)");
    }

    SectionCurve section() const { return SectionCurve::canonical(n, l); }
    MobiusMap gluing_map() const { return MobiusMap::glue(a); }
};

// The field on L = {zeta = u^l} induced by a tangent field theta, written in
// L's coordinate u (the base coordinate restricts to a coordinate on L since
// L is a section). Errors when theta is not tangent.
inline QLaurent restriction_to_L(int n, int l, const GlobalVectorField& theta)
{
    const SectionCurve L = SectionCurve::canonical(n, l);
    if (!deviation_polynomial(theta, L).is_zero())
        throw std::invalid_argument("restriction_to_L: field is not tangent to the section");
    (void)n;
    return theta.g;
}

struct GluedFieldSpace {
    int dim = 0;
    // Pairs (theta, theta-bar) whose restrictions to L match under the
    // pushforward along the gluing map.
    std::vector<std::pair<GlobalVectorField, GlobalVectorField>> basis;
    int image_dim_in_theta_l = 0; // rank of the restriction-difference map
};

// H^0 of the glued tangent sheaf as the kernel of the difference map
//   (theta, theta-bar) -> restr(theta) - phi_* restr(theta-bar)
// into the 3-dimensional space of fields on L.
inline GluedFieldSpace glued_h0(const GluedDouble& d)
{
    const SectionCurve L = d.section();
    const auto tangent = tangent_fields_to_section(d.n, L);
    const size_t k = tangent.fields.size();

    // Restriction matrix R: 3 x k over the monomial basis {1, u, u^2}.
    std::vector<std::vector<Rational>> r_cols;
    for (const auto& f : tangent.fields) {
        const QLaurent w = restriction_to_L(d.n, d.l, f);
        std::vector<Rational> col(3, Rational(0));
        for (int e = 0; e <= 2; ++e)
            col[static_cast<size_t>(e)] = w.coeff(e);
        r_cols.push_back(std::move(col));
    }
    // Pushforward matrix P of phi_* on {1, u, u^2}.
    const MobiusMap phi = d.gluing_map();
    std::vector<std::vector<Rational>> p_cols;
    for (int e = 0; e <= 2; ++e) {
        const QLaurent w = pushforward_p1_field(phi, QLaurent::monomial(Rational(1), e));
        std::vector<Rational> col(3, Rational(0));
        for (int j = 0; j <= 2; ++j)
            col[static_cast<size_t>(j)] = w.coeff(j);
        p_cols.push_back(std::move(col));
    }
    const ExactMatrix P = ExactMatrix::from_columns(p_cols);

    // Difference map D: (x, y) -> R x - P R y, a 3 x 2k matrix.
    ExactMatrix D(3, 2 * k);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < 3; ++i)
            D.at(i, j) = r_cols[j][i];
    for (size_t j = 0; j < k; ++j) {
        const std::vector<Rational> pr = P.apply(r_cols[j]);
        for (size_t i = 0; i < 3; ++i)
            D.at(i, k + j) = -pr[i];
    }

    GluedFieldSpace out;
    const auto null_basis = D.kernel();
    out.dim = static_cast<int>(null_basis.size());
    out.image_dim_in_theta_l = static_cast<int>(D.rank());
    for (const auto& v : null_basis) {
        GlobalVectorField f1, f2;
        f1.g = f1.A = f1.B = f1.C = QLaurent("u");
        f2.g = f2.A = f2.B = f2.C = QLaurent("u");
        for (size_t j = 0; j < k; ++j) {
            f1.g = f1.g + v[j] * tangent.fields[j].g;
            f1.B = f1.B + v[j] * tangent.fields[j].B;
            f1.C = f1.C + v[j] * tangent.fields[j].C;
            f2.g = f2.g + v[k + j] * tangent.fields[j].g;
            f2.B = f2.B + v[k + j] * tangent.fields[j].B;
            f2.C = f2.C + v[k + j] * tangent.fields[j].C;
        }
        out.basis.emplace_back(std::move(f1), std::move(f2));
    }
    return out;
}

struct GluedLedger {
    HTriple h;
    int image_dim = 0; // rank of the difference map in H^0(Theta_L)
    CohomologyLedger ledger;
};

// Dimension table of the glued double via the Mayer-Vietoris style sequence
//   0 -> Theta_glued -> Theta_{F_n,L} + Theta_{F_n,L}-bar -> Theta_L -> 0:
// h^1 = 2 h^1(pair) + coker of the restriction-difference map, h^2 = 0.
inline GluedLedger glued_ledger(const GluedDouble& d)
{
    const SectionCurve L = d.section();
    const PairLedger pair = tangent_pair_ledger(d.n, L);
    const GluedFieldSpace matched = glued_h0(d);

    GluedLedger out;
    out.image_dim = matched.image_dim_in_theta_l;
    out.h.h0 = matched.dim;
    out.h.h1 = 2 * pair.h.h1 + (3 - matched.image_dim_in_theta_l);
    out.h.h2 = 0;

    out.ledger.add_entry("Theta_{F_n,L}", pair.h, {"pair case " + pair_case_name(pair.kind)});
    out.ledger.add_entry("Theta_L = O(2) on L", HTriple{3, 0, 0});
    out.ledger.add_entry("Theta on F_n u_l F_n-bar", out.h,
                         {"difference-map rank " + std::to_string(out.image_dim) +
                          " in H^0(Theta_L)"});
    out.ledger.add_sequence("0 -> Theta_glued -> Theta_pair + Theta_pair-bar -> Theta_L -> 0",
                            out.h.chi(), 2 * pair.h.chi(), 3);
    return out;
}

// The glued dimensions do not depend on the gluing parameter: the effect of
// varying it is absorbed in the C^*-action.
inline bool gluing_parameter_independence(int n, int l, const std::vector<Rational>& samples)
{
    if (samples.empty())
        throw std::invalid_argument("gluing_parameter_independence: no samples");
    const GluedLedger first = glued_ledger(GluedDouble(n, l, samples.front()));
    for (size_t i = 1; i < samples.size(); ++i) {
        const GluedLedger g = glued_ledger(GluedDouble(n, l, samples[i]));
        if (!(g.h == first.h) || g.image_dim != first.image_dim)
            return false;
    }
    return true;
}

// ----------------------------------------------------------- moduli report

struct ModuliReport {
    int n = 0;
    bool remark_path = false; // n = 2: the forgetting map has a 1-dim kernel

    // computed quantities
    int glued_h1_l0 = 0;      // h^1(Theta) of F_n u_0 F_n-bar = 2(n-1)
    int moduli_real_dim = 0;  // real dimension of the ALE-SFK deformation space
    ForgetCokernel forget;    // h^0 of -(n-2)f and injectivity of (forget)
    std::vector<TorusWeight> weights;

    // cited constants, each with its citation; reported, never derived here
    std::vector<ReportRecord> cited;

    bool forget_surjective = false; // n = 3 coincidence 2(n-1) = 4(n-2)
    int kahler_locus_codim = 0;     // 4(n-2) - 2(n-1) for n >= 3
};

// Assembles the deformation bookkeeping for the degree -n model: the
// computed glued-double dimension 2(n-1) is, through the cited isomorphism
// between pair deformations of the twistor compactification and deformations
// of the glued divisor, the real dimension of the ALE scalar-flat-Kahler
// deformation space. Twistor-side constants are cited, not derived.
inline ModuliReport moduli_dimension_report(int n)
{
    if (n < 2)
        throw std::invalid_argument("moduli_dimension_report: requires n >= 2");
    ModuliReport out;
    out.n = n;
    out.remark_path = n == 2;
    out.glued_h1_l0 = glued_ledger(GluedDouble(n, 0)).h.h1;
    out.moduli_real_dim = out.glued_h1_l0;
    out.forget = forget_cokernel_h0(n, section_class(n, 0));
    out.weights = torus_weights(n);

    const int h1_theta_z = 4 * (n - 2);
    out.cited.push_back(ReportRecord::cited(
        "twistor.h1-theta-z", "h^1(Theta_Z) of the compactified twistor space",
        std::to_string(h1_theta_z), citation("twistor.h1-theta-z")));
    out.cited.push_back(ReportRecord::cited("twistor.index", "ASD deformation complex index",
                                            std::to_string(12 - 4 * n),
                                            citation("twistor.index")));
    out.cited.push_back(ReportRecord::cited(
        "twistor.h1-twisted", "h^1(Theta_Z(-D-D-bar))", "1", citation("twistor.h1-twisted")));
    out.cited.push_back(ReportRecord::cited(
        "twistor.pair-isom", "pair deformations = glued-divisor deformations",
        "dim " + std::to_string(out.glued_h1_l0), citation("twistor.pair-isom")));

    if (n >= 3) {
        out.forget_surjective = out.glued_h1_l0 == h1_theta_z;
        out.kahler_locus_codim = h1_theta_z - out.glued_h1_l0;
    }
    return out;
}

} // namespace afb
