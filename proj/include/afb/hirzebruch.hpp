/**
 * @file hirzebruch.hpp
 * @brief Divisor calculus on F_n, line-bundle cohomology via pushforward to
 *        CP^1, global holomorphic vector fields by chart-gluing kernel
 *        computation, tangency to sections, and the exact-sequence dimension
 *        ledger for pairs (F_n, L).
 *
 * Chart conventions: F_n \ Gamma_inf is the total space of the degree -n
 * line bundle with coordinates (u, zeta) on chart 0 and (v, eta) =
 * (1/u, u^n zeta) on chart 1. A global vector field is written on chart 0 as
 *
 *     theta = g(u) d/du + (A(u) + B(u) zeta + C(u) zeta^2) d/dzeta,
 *
 * and theta is global iff the chart-1 components
 *
 *     -g(1/v) v^2,   A(1/v) v^{-n},   n g(1/v) v + B(1/v),   C(1/v) v^n
 *
 * are all polynomial in v. The kernel of the negative-tail extraction map on
 * truncated coefficients is the authoritative H^0(Theta).
 */
#pragma once

#include "affine_bundle.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "section_curve.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace afb {

// ---------------------------------------------------------------- divisors

// a*Gamma_0 + b*f in Pic F_n, with Gamma_0^2 = -n, Gamma_0.f = 1, f^2 = 0.
struct DivisorClass {
    int a = 0;
    int b = 0;
    int n = 0; // ambient Hirzebruch index

    friend bool operator==(const DivisorClass& x, const DivisorClass& y)
    {
        return x.a == y.a && x.b == y.b && x.n == y.n;
    }
};

inline DivisorClass anticanonical_class(int n) { return DivisorClass{2, n + 2, n}; }

inline DivisorClass section_class(int n, int l) { return DivisorClass{1, n + l, n}; }

inline int intersect(const DivisorClass& c1, const DivisorClass& c2)
{
    if (c1.n != c2.n)
        throw std::invalid_argument("intersect: ambient Hirzebruch surfaces differ");
    return -c1.n * c1.a * c2.a + c1.a * c2.b + c1.b * c2.a;
}

struct HTriple {
    int h0 = 0;
    int h1 = 0;
    int h2 = 0;

    int chi() const { return h0 - h1 + h2; }

    friend bool operator==(const HTriple& x, const HTriple& y)
    {
        return x.h0 == y.h0 && x.h1 == y.h1 && x.h2 == y.h2;
    }
};

// Exact cohomology of O(a Gamma_0 + b f) for a >= 0 via the pushforward
// decomposition pi_* O(a Gamma_0 + b f) = O(b) + O(b-n) + ... + O(b-an).
// The fiber degree is a >= 0, so R^1 pi_* vanishes and h^2 = 0.
inline HTriple h_line_bundle(int n, const DivisorClass& c)
{
    if (c.n != n)
        throw std::invalid_argument("h_line_bundle: ambient mismatch");
    if (c.a < 0)
        throw std::invalid_argument("h_line_bundle: classes with negative Gamma_0 coefficient "
                                    "are unsupported");
    HTriple h;
    for (int k = 0; k <= c.a; ++k) {
        const int d = c.b - k * n;
        h.h0 += h0_dim(d);
        h.h1 += h1_dim(d);
    }
    return h;
}

// ------------------------------------------------------------ vector fields

struct GlobalVectorField {
    QLaurent g; // base component, polynomial in u
    QLaurent A; // d/dzeta part: A + B zeta + C zeta^2
    QLaurent B;
    QLaurent C;
};

struct Chart1Components {
    QLaurent base; // coefficient of d/dv
    QLaurent eta0; // coefficient of d/deta, eta-free part
    QLaurent eta1; //   "  , linear in eta
    QLaurent eta2; //   "  , quadratic in eta
};

inline Chart1Components chart1_components(const GlobalVectorField& f, int n)
{
    Chart1Components out;
    const QLaurent g_inv = f.g.inverted("v");
    out.base = -(g_inv.shifted(2));
    out.eta0 = f.A.inverted("v").shifted(-n);
    out.eta1 = Rational(n) * g_inv.shifted(1) + f.B.inverted("v");
    out.eta2 = f.C.inverted("v").shifted(n);
    return out;
}

inline bool is_global_on_chart1(const GlobalVectorField& f, int n)
{
    const Chart1Components c = chart1_components(f, n);
    for (const QLaurent* p : {&c.base, &c.eta0, &c.eta1, &c.eta2})
        if (!p->is_polynomial())
            return false;
    return true;
}

// Coefficient caps for the truncated gluing computation; generously above
// the true degrees (g quadratic, B linear, C of degree n), with a mandatory
// stability re-check at caps+2.
struct FieldCaps {
    int g, A, B, C;

    static FieldCaps standard(int n) { return FieldCaps{4, n + 2, n + 2, n + 3}; }

    FieldCaps raised(int extra) const { return FieldCaps{g + extra, A + extra, B + extra, C + extra}; }

    int total() const { return g + A + B + C + 4; }
};

namespace detail {

struct SlotLayout {
    FieldCaps caps;
    int g_off, a_off, b_off, c_off, count;

    explicit SlotLayout(const FieldCaps& cp) : caps(cp)
    {
        g_off = 0;
        a_off = g_off + caps.g + 1;
        b_off = a_off + caps.A + 1;
        c_off = b_off + caps.B + 1;
        count = c_off + caps.C + 1;
    }

    GlobalVectorField to_field(const std::vector<Rational>& v) const
    {
        GlobalVectorField f;
        f.g = QLaurent("u");
        f.A = QLaurent("u");
        f.B = QLaurent("u");
        f.C = QLaurent("u");
        for (int k = 0; k <= caps.g; ++k)
            f.g.add_term(k, v[static_cast<size_t>(g_off + k)]);
        for (int k = 0; k <= caps.A; ++k)
            f.A.add_term(k, v[static_cast<size_t>(a_off + k)]);
        for (int k = 0; k <= caps.B; ++k)
            f.B.add_term(k, v[static_cast<size_t>(b_off + k)]);
        for (int k = 0; k <= caps.C; ++k)
            f.C.add_term(k, v[static_cast<size_t>(c_off + k)]);
        return f;
    }
};

// Rows of the negative-tail extraction map for the four chart-1 streams.
inline ExactMatrix gluing_constraints(int n, const SlotLayout& lay)
{
    std::vector<std::vector<Rational>> rows;
    auto new_row = [&]() -> std::vector<Rational>& {
        rows.emplace_back(static_cast<size_t>(lay.count), Rational(0));
        return rows.back();
    };
    // base stream -g(1/v)v^2: v-exponent 2-k
    for (int k = 3; k <= lay.caps.g; ++k) {
        auto& r = new_row();
        r[static_cast<size_t>(lay.g_off + k)] = -1;
    }
    // A stream A(1/v)v^{-n}: v-exponent -n-k
    for (int k = 0; k <= lay.caps.A; ++k) {
        if (-n - k >= 0)
            continue;
        auto& r = new_row();
        r[static_cast<size_t>(lay.a_off + k)] = 1;
    }
    // eta-linear stream n g(1/v) v + B(1/v): coefficient of v^{-m}
    const int m_max = std::max(lay.caps.g - 1, lay.caps.B);
    for (int m = 1; m <= m_max; ++m) {
        auto& r = new_row();
        if (m + 1 <= lay.caps.g)
            r[static_cast<size_t>(lay.g_off + m + 1)] = Rational(n);
        if (m <= lay.caps.B)
            r[static_cast<size_t>(lay.b_off + m)] = 1;
    }
    // eta^2 stream C(1/v)v^n: v-exponent n-k
    for (int k = n + 1; k <= lay.caps.C; ++k) {
        auto& r = new_row();
        r[static_cast<size_t>(lay.c_off + k)] = 1;
    }
    return ExactMatrix::from_rows(rows);
}

inline std::vector<GlobalVectorField> gluing_kernel(int n, const FieldCaps& caps)
{
    const SlotLayout lay(caps);
    const ExactMatrix constraints = gluing_constraints(n, lay);
    std::vector<GlobalVectorField> basis;
    for (const auto& v : constraints.kernel())
        basis.push_back(lay.to_field(v));
    return basis;
}

} // namespace detail

// Basis of H^0(Theta_{F_n}) as the kernel of the negative-tail extraction
// map on truncated chart-0 coefficients. Throws if the dimension moves when
// the caps are raised by 2 (truncation instability would signal a bound bug).
// Every returned field is re-verified to push to polynomial chart-1 data and,
// for n >= 1, to be tangent to Gamma_0 (A = 0).
inline std::vector<GlobalVectorField> global_vector_fields(int n)
{
    if (n < 1)
        throw std::invalid_argument("global_vector_fields: requires n >= 1");
    const FieldCaps caps = FieldCaps::standard(n);
    auto basis = detail::gluing_kernel(n, caps);
    const auto check = detail::gluing_kernel(n, caps.raised(2));
    if (check.size() != basis.size())
        throw std::logic_error("global_vector_fields: dimension changed under cap increase; "
                               "truncation instability");
    for (const auto& f : basis) {
        if (!is_global_on_chart1(f, n))
            throw std::logic_error("global_vector_fields: kernel field fails the chart-1 "
                                   "polynomiality re-check");
        if (!f.A.is_zero())
            throw std::logic_error("global_vector_fields: kernel field is not tangent to "
                                   "Gamma_0");
    }
    return basis;
}

struct H1Theta {
    int value = 0;           // h^1(Theta_{F_n})
    int h1_relative = 0;     // h^1(O(2 Gamma_0 + n f))
    int projection_rank = 0; // rank of H^0(Theta) -> H^0(pi^* Theta_CP1)
    bool connecting_zero = false;
};

// h^1(Theta) by the relative-tangent sequence
//   0 -> O(2 Gamma_0 + n f) -> Theta -> pi^* Theta_CP1 -> 0,
// with the connecting map H^0(O(2f)) -> H^1(rel) zero exactly when the base
// projection theta -> g(u) d/du of the computed global basis is surjective.
inline H1Theta h1_theta(int n)
{
    if (n < 1)
        throw std::invalid_argument("h1_theta: requires n >= 1");
    H1Theta out;
    out.h1_relative = h_line_bundle(n, DivisorClass{2, n, n}).h1;
    const auto basis = global_vector_fields(n);
    std::vector<std::vector<Rational>> cols;
    for (const auto& f : basis) {
        std::vector<Rational> col(3, Rational(0));
        for (int k = 0; k <= 2; ++k)
            col[static_cast<size_t>(k)] = f.g.coeff(k);
        cols.push_back(std::move(col));
    }
    const ExactMatrix proj = ExactMatrix::from_columns(cols);
    out.projection_rank = static_cast<int>(proj.rank());
    out.connecting_zero = out.projection_rank == 3;
    out.value = out.h1_relative - (3 - out.projection_rank);
    return out;
}

// ------------------------------------------------- tangency and restriction

// Chart-0 deviation of theta from the graph zeta = q/s, cleared of
// denominators:
//   Dev = s^2 A + B q s + C q^2 + g (q s' - q' s).
// Dev vanishes identically iff theta is tangent to L, and theta -> Dev in
// the basis {1, u, ..., u^{n+2l}} realizes H^0(Theta) -> H^0(N_{L/F_n}).
// For L = Gamma_inf the zeta' = 1/zeta chart gives Dev = -C directly.
inline QLaurent deviation_polynomial(const GlobalVectorField& f, const SectionCurve& L)
{
    if (L.is_infinity_section())
        return -f.C;
    const QLaurent& s = L.s();
    const QLaurent& q = L.q();
    return s * s * f.A + f.B * q * s + f.C * q * q +
           f.g * (q * s.derivative() - q.derivative() * s);
}

// A subspace of the global field space, carried both as fields and as
// coordinate rows with respect to the computed global basis (so subspace
// equality can be checked exactly, not just by dimension).
struct VectorFieldSubspace {
    std::vector<GlobalVectorField> fields;
    ExactMatrix coords; // rows = fields, cols = global basis coordinates
};

// Matrix of theta -> Dev(theta) from the global basis to H^0(N_L), realized
// as polynomials of degree <= n + 2l.
inline ExactMatrix normal_restriction_map(int n, const SectionCurve& L)
{
    if (L.ambient_n() != n)
        throw std::invalid_argument("normal_restriction_map: ambient mismatch");
    const auto basis = global_vector_fields(n);
    const int target_dim = n + 2 * L.l() + 1;
    std::vector<std::vector<Rational>> cols;
    for (const auto& f : basis) {
        const QLaurent dev = deviation_polynomial(f, L);
        if (!dev.is_zero() && (dev.min_exponent() < 0 || dev.degree() > n + 2 * L.l()))
            throw std::logic_error("normal_restriction_map: deviation leaves the expected "
                                   "polynomial band [0, n+2l]");
        std::vector<Rational> col(static_cast<size_t>(target_dim), Rational(0));
        for (int e = 0; e < target_dim; ++e)
            col[static_cast<size_t>(e)] = dev.coeff(e);
        cols.push_back(std::move(col));
    }
    return ExactMatrix::from_columns(cols);
}

// Exact subspace {theta in H^0(Theta) : theta tangent to L along the whole
// graph, including over u = infinity}.
inline VectorFieldSubspace tangent_fields_to_section(int n, const SectionCurve& L)
{
    const auto basis = global_vector_fields(n);
    const ExactMatrix m = normal_restriction_map(n, L);
    VectorFieldSubspace out;
    std::vector<std::vector<Rational>> coord_rows;
    for (const auto& v : m.kernel()) {
        GlobalVectorField f;
        f.g = QLaurent("u");
        f.A = QLaurent("u");
        f.B = QLaurent("u");
        f.C = QLaurent("u");
        for (size_t j = 0; j < basis.size(); ++j) {
            f.g = f.g + v[j] * basis[j].g;
            f.A = f.A + v[j] * basis[j].A;
            f.B = f.B + v[j] * basis[j].B;
            f.C = f.C + v[j] * basis[j].C;
        }
        out.fields.push_back(std::move(f));
        coord_rows.push_back(v);
    }
    out.coords = coord_rows.empty() ? ExactMatrix(0, basis.size())
                                    : ExactMatrix::from_rows(coord_rows);
    return out;
}

inline std::vector<int> section_tangency_profile(int n, const SectionCurve& L)
{
    if (L.ambient_n() != n)
        throw std::invalid_argument("section_tangency_profile: ambient mismatch");
    if (L.l() < 1)
        throw std::invalid_argument("section_tangency_profile: requires l >= 1");
    return L.tangency_profile();
}

// ------------------------------------------------------------------ ledger

struct SequenceRecord {
    std::string label;
    int chi_sub = 0, chi_mid = 0, chi_quot = 0;
};

struct LedgerEntry {
    std::string sheaf;
    HTriple h;
    std::vector<std::string> evidence;
};

// Named table of (h^0, h^1, h^2) values together with the exact-sequence
// rank evidence that produced each entry. Every recorded short exact
// sequence must have alternating Euler characteristics summing to zero.
class CohomologyLedger {
public:
    void add_entry(std::string sheaf, HTriple h, std::vector<std::string> evidence = {})
    {
        entries_.push_back(LedgerEntry{std::move(sheaf), h, std::move(evidence)});
    }

    void add_sequence(std::string label, int chi_sub, int chi_mid, int chi_quot)
    {
        if (chi_sub - chi_mid + chi_quot != 0)
            throw std::logic_error("CohomologyLedger: Euler characteristics of '" + label +
                                   "' do not alternate to zero");
        sequences_.push_back(SequenceRecord{std::move(label), chi_sub, chi_mid, chi_quot});
    }

    const std::vector<LedgerEntry>& entries() const { return entries_; }
    const std::vector<SequenceRecord>& sequences() const { return sequences_; }

    std::optional<HTriple> lookup(const std::string& sheaf) const
    {
        for (const auto& e : entries_)
            if (e.sheaf == sheaf)
                return e.h;
        return std::nullopt;
    }

private:
    std::vector<LedgerEntry> entries_;
    std::vector<SequenceRecord> sequences_;
};

enum class PairCaseKind { l0, l1, lg1_one_point, lg1_several_points };

inline std::string pair_case_name(PairCaseKind k)
{
    switch (k) {
    case PairCaseKind::l0:
        return "l=0";
    case PairCaseKind::l1:
        return "l=1";
    case PairCaseKind::lg1_one_point:
        return "l>1, full tangency (i)";
    case PairCaseKind::lg1_several_points:
        return "l>1, split tangency (ii)";
    }
    return "?";
}

struct PairLedger {
    HTriple h;                 // h^i(Theta_{F_n, L})
    PairCaseKind kind;
    std::vector<int> profile;  // Gamma_0 intersection multiplicities (l >= 1)
    std::string aut0;          // identification of Aut_0(F_n, L)
    int normal_rank = 0;
    int normal_coker = 0;
    CohomologyLedger ledger;
};

// (h^0, h^1, h^2) of the pair sheaf Theta_{F_n,L} through the sequence
// 0 -> Theta_{F_n,L} -> Theta_{F_n} -> N_{L/F_n} -> 0: h^0 is the tangency
// kernel, h^1 = h^1(Theta) + coker of the normal restriction, h^2 = 0 since
// h^1(N_L) = h^2(Theta) = 0.
inline PairLedger tangent_pair_ledger(int n, const SectionCurve& L)
{
    if (n < 1)
        throw std::invalid_argument("tangent_pair_ledger: requires n >= 1");
    PairLedger out;
    const auto tangent = tangent_fields_to_section(n, L);
    const ExactMatrix m = normal_restriction_map(n, L);
    const int h0_theta = static_cast<int>(global_vector_fields(n).size());
    const H1Theta h1t = h1_theta(n);
    const int l = L.l();
    const int n_dim = n + 2 * l + 1;

    out.normal_rank = static_cast<int>(m.rank());
    out.normal_coker = n_dim - out.normal_rank;
    out.h.h0 = static_cast<int>(tangent.fields.size());
    out.h.h1 = h1t.value + out.normal_coker;
    out.h.h2 = 0;

    if (l == 0) {
        out.kind = PairCaseKind::l0;
        out.aut0 = "GL(2,C)/Z_" + std::to_string(n);
    } else if (l == 1) {
        out.kind = PairCaseKind::l1;
        out.profile = L.tangency_profile();
        out.aut0 = "Af(C), the PGL(2,C) stabilizer of the point under L.Gamma_0";
    } else {
        out.profile = L.tangency_profile();
        if (L.full_tangency()) {
            out.kind = PairCaseKind::lg1_one_point;
            out.aut0 = "C*";
        } else {
            out.kind = PairCaseKind::lg1_several_points;
            out.aut0 = "trivial";
        }
    }

    out.ledger.add_entry("Theta_{F_n}", HTriple{h0_theta, h1t.value, 0},
                         {"gluing-kernel dimension " + std::to_string(h0_theta),
                          "h1 from relative tangent sequence, projection rank " +
                              std::to_string(h1t.projection_rank)});
    out.ledger.add_entry("N_{L/F_n} = O(" + std::to_string(n + 2 * l) + ")",
                         HTriple{n_dim, 0, 0});
    out.ledger.add_entry("Theta_{F_n,L}", out.h,
                         {"normal restriction rank " + std::to_string(out.normal_rank) +
                          ", cokernel " + std::to_string(out.normal_coker)});
    out.ledger.add_sequence("0 -> Theta_{F_n,L} -> Theta_{F_n} -> N_{L/F_n} -> 0", out.h.chi(),
                            h0_theta - h1t.value, n_dim);
    const HTriple rel = h_line_bundle(n, DivisorClass{2, n, n});
    out.ledger.add_sequence("0 -> O(2Gamma_0+nf) -> Theta_{F_n} -> pi*Theta_CP1 -> 0", rel.chi(),
                            h0_theta - h1t.value, 3);
    return out;
}

// ------------------------------------------------ Aut_0 base projection

struct AutProjection {
    bool injective = false;
    int image_dim = 0;
    std::string description;
    std::vector<QLaurent> image_basis; // base fields w(u) d/du, deg <= 2
};

// Projects the tangent subspace of the pair to base vector fields. For
// l >= 1 the projection is injective (h^0(O(Gamma_0 - l f)) = 0), and the
// image is a subalgebra of the 3-dimensional field algebra on CP^1.
inline AutProjection aut_pair_base_projection(int n, const SectionCurve& L)
{
    if (L.l() < 1)
        throw std::invalid_argument("aut_pair_base_projection: requires l >= 1");
    const auto tangent = tangent_fields_to_section(n, L);
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : tangent.fields) {
        std::vector<Rational> row(3, Rational(0));
        for (int k = 0; k <= 2; ++k)
            row[static_cast<size_t>(k)] = f.g.coeff(k);
        rows.push_back(std::move(row));
    }
    AutProjection out;
    const ExactMatrix proj =
        rows.empty() ? ExactMatrix(0, 3) : ExactMatrix::from_rows(rows);
    out.image_dim = static_cast<int>(proj.rank());
    out.injective = out.image_dim == static_cast<int>(tangent.fields.size());

    std::vector<size_t> pivots;
    const ExactMatrix r = proj.rref(&pivots);
    for (size_t i = 0; i < pivots.size(); ++i) {
        QLaurent w("u");
        for (int k = 0; k <= 2; ++k)
            w.add_term(k, r.at(i, static_cast<size_t>(k)));
        out.image_basis.push_back(w);
    }

    switch (out.image_dim) {
    case 0:
        out.description = "trivial";
        break;
    case 1: {
        const QLaurent& w = out.image_basis.front();
        const bool fixes_zero = is_zero(w.coeff(0));
        const bool fixes_inf = is_zero(w.coeff(2));
        if (fixes_zero && fixes_inf)
            out.description = "torus algebra fixing {0, infinity}";
        else
            out.description = "1-dimensional algebra spanned by (" + w.str() + ") d/du";
        break;
    }
    case 2: {
        // Borel subalgebra: fields vanishing at a common point.
        QLaurent g = out.image_basis.front();
        for (size_t i = 1; i < out.image_basis.size(); ++i)
            g = poly_gcd(g, out.image_basis[i]);
        if (g.degree() >= 1)
            out.description = "affine algebra fixing the zero locus of (" + g.str() + ")";
        else
            out.description = "affine algebra fixing u = infinity";
        break;
    }
    default:
        out.description = "all of the field algebra of CP^1";
    }
    return out;
}

// ------------------------------------------------------ the (forget) input

struct ForgetCokernel {
    DivisorClass reduced; // -K_{F_m} - 2 L on F_m, a multiple of f
    int h0 = 0;
    bool forget_injective = false; // h0 == 0 iff the forgetting map is injective
};

// For a section class L = Gamma_0 + (m+l)f on F_m, computes
// -K - 2L = -(m + 2l - 2) f and its h^0; zero exactly when the natural map
// out of the pair-deformation space into the ambient deformations is
// injective.
inline ForgetCokernel forget_cokernel_h0(int m, const DivisorClass& L_class)
{
    if (L_class.n != m || L_class.a != 1 || L_class.b < m)
        throw std::invalid_argument("forget_cokernel_h0: L_class must be a section class "
                                    "Gamma_0 + (m+l)f on F_m");
    const DivisorClass minus_k = anticanonical_class(m);
    ForgetCokernel out;
    out.reduced = DivisorClass{minus_k.a - 2 * L_class.a, minus_k.b - 2 * L_class.b, m};
    out.h0 = h_line_bundle(m, out.reduced).h0;
    out.forget_injective = out.h0 == 0;
    return out;
}

} // namespace afb
