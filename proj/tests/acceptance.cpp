// Acceptance suite: one line per criterion, exact equality throughout.
// Exit code 0 iff every criterion passes.

#include <afb/serialization.hpp>
#include <afb/verify_suite.hpp>

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace afb;

namespace {

int failures_total = 0;

void criterion(int number, const std::string& label, bool pass, const std::string& detail = "")
{
    std::cout << "criterion " << number << " [" << label << "]: " << (pass ? "PASS" : "FAIL");
    if (!detail.empty())
        std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!pass)
        ++failures_total;
}

QLaurent binomial_power(const Rational& root, int l)
{
    // (u - root)^l
    QLaurent factor("u");
    factor.add_term(1, Rational(1));
    factor.add_term(0, -root);
    QLaurent acc = QLaurent::constant(Rational(1));
    for (int i = 0; i < l; ++i)
        acc = acc * factor;
    return acc;
}

bool check_cech_dimensions()
{
    for (int n = 2; n <= 10; ++n) {
        const auto basis = h1_basis(-n);
        if (static_cast<int>(basis.size()) != n - 1)
            return false;
        for (int l = 1; l <= n - 1; ++l)
            if (!(basis[static_cast<size_t>(l - 1)] == QLaurent::monomial(Rational(1), -l)))
                return false;
    }
    return true;
}

bool check_vector_fields(std::string& detail)
{
    for (int n = 1; n <= 10; ++n) {
        const auto basis = global_vector_fields(n); // includes the N -> N+2 guard
        if (static_cast<int>(basis.size()) != n + 5) {
            detail = "h0 mismatch at n = " + std::to_string(n);
            return false;
        }
        if (h1_theta(n).value != n - 1) {
            detail = "h1 mismatch at n = " + std::to_string(n);
            return false;
        }
        const auto raised = detail::gluing_kernel(n, FieldCaps::standard(n).raised(2));
        if (raised.size() != basis.size()) {
            detail = "truncation guard failed at n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool check_pair_tables(std::string& detail)
{
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> small(1, 5);
    std::uniform_int_distribution<long> coeff(-4, 4);
    auto fail = [&detail](int n, int l, const char* what) {
        detail = std::string(what) + " at n = " + std::to_string(n) +
                 ", l = " + std::to_string(l);
        return false;
    };
    for (int n = 1; n <= 8; ++n) {
        for (int l = 0; l <= 3; ++l) {
            if (l == 0) {
                const HTriple expected{4, n - 1, 0};
                if (!(tangent_pair_ledger(n, SectionCurve::canonical(n, 0)).h == expected))
                    return fail(n, l, "canonical l=0");
                if (!(tangent_pair_ledger(n, SectionCurve::infinity_section(n)).h == expected))
                    return fail(n, l, "infinity section");
                for (int trial = 0; trial < 3; ++trial) {
                    QLaurent s("u");
                    for (int i = 0; i < n; ++i)
                        s.add_term(i, Rational(coeff(rng)));
                    s.add_term(n, Rational(small(rng)));
                    const SectionCurve L(n, 0, s, QLaurent::constant(Rational(small(rng))));
                    if (!(tangent_pair_ledger(n, L).h == expected))
                        return fail(n, l, "randomized (+n)-section");
                }
            } else if (l == 1) {
                const HTriple expected{2, n - 1, 0};
                if (!(tangent_pair_ledger(n, SectionCurve::canonical(n, 1)).h == expected))
                    return fail(n, l, "canonical l=1");
                const Rational r(coeff(rng));
                QLaurent q = binomial_power(r, 1);
                q = Rational(small(rng)) * q;
                const SectionCurve L(n, 1, QLaurent::constant(Rational(1)), q);
                if (!(tangent_pair_ledger(n, L).h == expected))
                    return fail(n, l, "generic l=1");
            } else {
                const HTriple expected_full{1, n + 2 * l - 4, 0};
                const HTriple expected_split{0, n + 2 * l - 5, 0};
                if (!(tangent_pair_ledger(n, SectionCurve::canonical(n, l)).h == expected_full))
                    return fail(n, l, "canonical full tangency");
                // full tangency at a randomized point
                const SectionCurve full(n, l, QLaurent::constant(Rational(1)),
                                        Rational(small(rng)) *
                                            binomial_power(Rational(small(rng)), l));
                if (!(tangent_pair_ledger(n, full).h == expected_full))
                    return fail(n, l, "moved full tangency");
                // split profile [l-1, 1]
                const QLaurent q = QLaurent::monomial(Rational(1), l - 1) *
                                   binomial_power(Rational(small(rng)), 1);
                const SectionCurve split(n, l, QLaurent::constant(Rational(1)), q);
                if (!(tangent_pair_ledger(n, split).h == expected_split))
                    return fail(n, l, "split tangency");
            }
        }
    }
    return true;
}

bool check_glued_doubles(std::string& detail)
{
    const std::vector<Rational> params = {Rational(1), Rational(2), Rational(1, 2),
                                          Rational(7, 3), Rational(10)};
    for (int n = 1; n <= 8; ++n)
        for (int l = 0; l <= 3; ++l) {
            const HTriple expected = l == 0 ? HTriple{5, 2 * (n - 1), 0}
                                            : HTriple{1, 2 * (n + 2 * l - 3), 0};
            for (const auto& a : params) {
                const GluedLedger g = glued_ledger(GluedDouble(n, l, a));
                if (!(g.h == expected)) {
                    detail = "n = " + std::to_string(n) + ", l = " + std::to_string(l) +
                             ", a = " + to_string(a);
                    return false;
                }
            }
            if (!gluing_parameter_independence(n, l, params)) {
                detail = "parameter dependence at n = " + std::to_string(n) +
                         ", l = " + std::to_string(l);
                return false;
            }
        }
    return true;
}

bool check_classification(std::string& detail)
{
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<long> pos(1, 9);
    for (int n = 2; n <= 6; ++n) {
        QLaurent b("u");
        std::uniform_int_distribution<int> exp(-n - 3, 3);
        for (int i = 0; i < 6; ++i)
            b.add_term(exp(rng), Rational(coeff(rng)));
        const AffineBundleCocycle base(QLaurent::monomial(Rational(1), -n), b);
        const auto canonical = normalize(base);
        for (int trial = 0; trial < 100; ++trial) {
            QLaurent psi0("u"), psi1("v");
            for (int i = 0; i <= 4; ++i) {
                psi0.add_term(i, Rational(coeff(rng)));
                psi1.add_term(i, Rational(coeff(rng)));
            }
            const CoordinateChange ch(QLaurent::constant(Rational(1)),
                                      QLaurent::constant(Rational(1)), psi0, psi1);
            const auto moved = normalize(apply_change(base, ch));
            if (!(moved.canonical->t == canonical.canonical->t)) {
                detail = "coboundary drift at n = " + std::to_string(n);
                return false;
            }
        }
        // scaling equivalence with randomized c
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rational> t(static_cast<size_t>(n - 1));
            for (auto& x : t)
                x = Rational(coeff(rng));
            const Rational c(pos(rng), pos(rng));
            std::vector<Rational> tc = t;
            for (auto& x : tc)
                x *= c;
            if (!is_isomorphic(CanonicalAffineBundle(n, t), CanonicalAffineBundle(n, tc))) {
                detail = "scaling equivalence failed at n = " + std::to_string(n);
                return false;
            }
        }
    }
    for (int n = 2; n <= 10; ++n)
        for (int l = 1; l <= n - 1; ++l) {
            const int m = axis_compactification_type(n, l).m; // throws if the identity fails
            if (m != (n - 2 * l >= 0 ? n - 2 * l : 2 * l - n)) {
                detail = "axis index at n = " + std::to_string(n) + ", l = " + std::to_string(l);
                return false;
            }
        }
    return true;
}

bool check_section3_computables(std::string& detail)
{
    for (int n = 2; n <= 8; ++n) {
        const ForgetCokernel f = forget_cokernel_h0(n, section_class(n, 0));
        const int expected = n >= 3 ? 0 : 1;
        if (f.h0 != expected) {
            detail = "forget cokernel at n = " + std::to_string(n);
            return false;
        }
        const auto weights = torus_weights(n);
        for (int l = 1; l <= n - 1; ++l)
            if (!(weights[static_cast<size_t>(l - 1)] == TorusWeight{l, 1})) {
                detail = "torus weight at n = " + std::to_string(n);
                return false;
            }
    }
    const ModuliReport m3 = moduli_dimension_report(3);
    if (!(m3.moduli_real_dim == 4 && m3.forget_surjective && m3.forget.forget_injective)) {
        detail = "moduli report at n = 3";
        return false;
    }
    return true;
}

bool check_property_suites(std::string& detail)
{
    // chi(Theta) = 6, computed
    for (int n = 1; n <= 10; ++n)
        if (static_cast<int>(global_vector_fields(n).size()) - h1_theta(n).value != 6) {
            detail = "chi(Theta) at n = " + std::to_string(n);
            return false;
        }
    // Euler alternation on every recorded sequence, and rank-nullity on the
    // realized restriction matrices
    for (int n = 1; n <= 8; ++n)
        for (int l = 0; l <= 3; ++l) {
            const SectionCurve L = SectionCurve::canonical(n, l);
            const PairLedger p = tangent_pair_ledger(n, L); // throws on chi violation
            const ExactMatrix m = normal_restriction_map(n, L);
            if (m.rank() + m.kernel().size() != m.cols()) {
                detail = "rank-nullity at n = " + std::to_string(n);
                return false;
            }
            if (p.h.chi() != 6 - (n + 2 * l + 1)) {
                detail = "pair Euler characteristic at n = " + std::to_string(n);
                return false;
            }
            glued_ledger(GluedDouble(n, l)); // throws on chi violation
        }
    // randomized rank-nullity
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> dim(1, 8);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const size_t r = static_cast<size_t>(dim(rng)), c = static_cast<size_t>(dim(rng));
        ExactMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                m.at(i, j) = Rational(entry(rng));
        if (m.rank() + m.kernel().size() != c) {
            detail = "rank-nullity on random matrix";
            return false;
        }
    }
    // report determinism (the pipeline is pure and single-threaded; two runs
    // must serialize byte-identically)
    const std::string once = report_to_json(run_paper_suite(4)).dump(2);
    const std::string twice = report_to_json(run_paper_suite(4)).dump(2);
    if (once != twice) {
        detail = "report not deterministic";
        return false;
    }
    return true;
}

} // namespace

int main()
{
    std::string detail;

    criterion(1, "Cech dimensions and canonical bases, 2 <= n <= 10", check_cech_dimensions());

    detail.clear();
    {
        const bool ok = check_vector_fields(detail);
        criterion(2, "h0(Theta) = n+5, h1 = n-1, truncation guard, 1 <= n <= 10", ok, detail);
    }

    detail.clear();
    criterion(3, "pair tables across the four cases, n <= 8, l <= 3",
              check_pair_tables(detail), detail);

    detail.clear();
    criterion(4, "glued doubles at five gluing parameters, n <= 8, l <= 3",
              check_glued_doubles(detail), detail);

    detail.clear();
    criterion(5, "classification round-trips, scaling equivalence, axis identities",
              check_classification(detail), detail);

    detail.clear();
    criterion(6, "forgetting-map cokernel, n = 3 moduli coincidence, torus weights",
              check_section3_computables(detail), detail);

    detail.clear();
    criterion(7, "Euler consistency, rank-nullity, chi(Theta) = 6, report determinism",
              check_property_suites(detail), detail);

    if (failures_total == 0) {
        std::cout << "acceptance: all criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << failures_total << " criterion(s) failed\n";
    return 1;
}
