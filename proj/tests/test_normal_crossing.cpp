#include <afb/normal_crossing.hpp>

#include <catch_amalgamated.hpp>

using namespace afb;

TEST_CASE("glued double construction validates its data")
{
    CHECK_THROWS_AS(GluedDouble(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(GluedDouble(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(GluedDouble(3, 0, Rational(-1)), std::invalid_argument);
    CHECK_THROWS_AS(GluedDouble(3, 0, Rational(0)), std::invalid_argument);
    const GluedDouble d(3, 1, Rational(7, 3));
    CHECK(d.gluing_map().apply(Rational(1)) == Rational(-7, 3));
}

TEST_CASE("restriction of tangent fields to the glued section")
{
    SECTION("the base torus field restricts to a multiple of u d/du")
    {
        // u d/du is tangent to the l = 0 canonical section zeta = 1
        GlobalVectorField torus;
        torus.g = q_monomial(1, 1, 1);
        torus.A = QLaurent("u");
        torus.B = QLaurent("u");
        torus.C = QLaurent("u");
        const QLaurent w = restriction_to_L(3, 0, torus);
        CHECK(w == q_monomial(1, 1, 1));
    }
    SECTION("fields that are not tangent are rejected")
    {
        GlobalVectorField scalar; // zeta d/dzeta is not tangent to zeta = 1
        scalar.g = QLaurent("u");
        scalar.A = QLaurent("u");
        scalar.B = QLaurent::constant(Rational(1));
        scalar.C = QLaurent("u");
        CHECK_THROWS_AS(restriction_to_L(3, 0, scalar), std::invalid_argument);
    }
    SECTION("only the zero field of the l = 1 pair fixes L pointwise")
    {
        const auto tangent = tangent_fields_to_section(3, SectionCurve::canonical(3, 1));
        REQUIRE(tangent.fields.size() == 2);
        std::vector<std::vector<Rational>> rows;
        for (const auto& f : tangent.fields) {
            const QLaurent w = restriction_to_L(3, 1, f);
            std::vector<Rational> row(3, Rational(0));
            for (int e = 0; e <= 2; ++e)
                row[static_cast<size_t>(e)] = w.coeff(e);
            rows.push_back(std::move(row));
        }
        CHECK(ExactMatrix::from_rows(rows).rank() == 2); // trivial kernel
    }
    SECTION("the full l = 0 pair space covers all of H^0(Theta_L)")
    {
        const auto tangent = tangent_fields_to_section(3, SectionCurve::canonical(3, 0));
        REQUIRE(tangent.fields.size() == 4);
        std::vector<std::vector<Rational>> rows;
        for (const auto& f : tangent.fields) {
            const QLaurent w = restriction_to_L(3, 0, f);
            std::vector<Rational> row(3, Rational(0));
            for (int e = 0; e <= 2; ++e)
                row[static_cast<size_t>(e)] = w.coeff(e);
            rows.push_back(std::move(row));
        }
        CHECK(ExactMatrix::from_rows(rows).rank() == 3);
    }
}

TEST_CASE("matched field spaces of glued doubles")
{
    CHECK(glued_h0(GluedDouble(3, 0)).dim == 5);
    CHECK(glued_h0(GluedDouble(3, 1)).dim == 1);
    CHECK(glued_h0(GluedDouble(4, 2)).dim == 1);

    SECTION("rank-nullity of the difference map")
    {
        for (int n = 1; n <= 8; ++n)
            for (int l = 0; l <= 3; ++l) {
                const GluedFieldSpace g = glued_h0(GluedDouble(n, l));
                const size_t pair_dim =
                    tangent_fields_to_section(n, SectionCurve::canonical(n, l)).fields.size();
                CHECK(g.dim + g.image_dim_in_theta_l == static_cast<int>(2 * pair_dim));
            }
    }
    SECTION("image dimensions follow the three tangency regimes")
    {
        for (int n = 2; n <= 6; ++n) {
            CHECK(glued_h0(GluedDouble(n, 0)).image_dim_in_theta_l == 3);
            CHECK(glued_h0(GluedDouble(n, 1)).image_dim_in_theta_l == 3);
            CHECK(glued_h0(GluedDouble(n, 2)).image_dim_in_theta_l == 1);
            CHECK(glued_h0(GluedDouble(n, 3)).image_dim_in_theta_l == 1);
        }
    }
}

TEST_CASE("glued dimension tables")
{
    CHECK(glued_ledger(GluedDouble(3, 0)).h == HTriple{5, 4, 0});
    CHECK(glued_ledger(GluedDouble(3, 1)).h == HTriple{1, 4, 0});
    CHECK(glued_ledger(GluedDouble(4, 2)).h == HTriple{1, 10, 0});

    SECTION("the fd2 formulas hold across the grid")
    {
        for (int n = 1; n <= 8; ++n)
            for (int l = 0; l <= 3; ++l) {
                const GluedLedger g = glued_ledger(GluedDouble(n, l));
                const HTriple expected = l == 0 ? HTriple{5, 2 * (n - 1), 0}
                                                : HTriple{1, 2 * (n + 2 * l - 3), 0};
                CHECK(g.h == expected);
            }
    }
    SECTION("Euler characteristic matches the gluing sequence")
    {
        for (int n = 1; n <= 8; ++n)
            for (int l = 0; l <= 3; ++l) {
                const GluedLedger g = glued_ledger(GluedDouble(n, l));
                const int chi_pair = 6 - (n + 2 * l + 1);
                CHECK(g.h.chi() == 2 * chi_pair - 3);
            }
    }
}

TEST_CASE("glued dimensions do not depend on the gluing parameter")
{
    const std::vector<Rational> samples = {Rational(1), Rational(2), Rational(1, 2),
                                           Rational(7, 3), Rational(10)};
    CHECK(gluing_parameter_independence(3, 1, samples));
    CHECK(gluing_parameter_independence(5, 0, {Rational(1), Rational(1000)}));
    CHECK(gluing_parameter_independence(4, 2, {Rational(1, 2), Rational(3)}));
    for (int n = 1; n <= 8; ++n)
        for (int l = 0; l <= 3; ++l)
            CHECK(gluing_parameter_independence(n, l, samples));
    CHECK_THROWS_AS(gluing_parameter_independence(3, 1, {}), std::invalid_argument);
}

TEST_CASE("moduli dimension reports")
{
    SECTION("n = 3: the forgetting map is bijective on first-order data")
    {
        const ModuliReport m = moduli_dimension_report(3);
        CHECK(m.moduli_real_dim == 4);
        CHECK(m.forget.forget_injective);
        CHECK(m.forget_surjective);
        CHECK(m.kahler_locus_codim == 0);
        CHECK_FALSE(m.remark_path);
        CHECK(m.weights.size() == 2);
    }
    SECTION("n = 5: the Kahler locus has codimension 4")
    {
        const ModuliReport m = moduli_dimension_report(5);
        CHECK(m.moduli_real_dim == 8);
        CHECK(m.forget.forget_injective);
        CHECK_FALSE(m.forget_surjective);
        CHECK(m.kahler_locus_codim == 4);
    }
    SECTION("n = 2 takes the remark path with a one-dimensional kernel")
    {
        const ModuliReport m = moduli_dimension_report(2);
        CHECK(m.remark_path);
        CHECK(m.forget.h0 == 1);
        CHECK_FALSE(m.forget.forget_injective);
        CHECK(m.moduli_real_dim == 2);
    }
    SECTION("every cited constant carries a citation string")
    {
        const ModuliReport m = moduli_dimension_report(4);
        CHECK(m.cited.size() >= 4);
        for (const auto& r : m.cited) {
            CHECK_FALSE(r.citation.empty());
            CHECK(r.citation != derived_marker());
        }
    }
    CHECK_THROWS_AS(moduli_dimension_report(1), std::invalid_argument);
}
