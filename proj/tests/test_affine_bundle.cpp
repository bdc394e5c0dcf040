#include <afb/affine_bundle.hpp>
#include <afb/cech.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace afb;

namespace {

AffineBundleCocycle make_cocycle(int a_exp, const QLaurent& b, Rational a_coeff = Rational(1))
{
    return AffineBundleCocycle(QLaurent::monomial(a_coeff, a_exp), b);
}

QLaurent random_poly(std::mt19937& rng, int max_deg, const std::string& var)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-5, 5);
    QLaurent p(var);
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i)
        p.add_term(i, Rational(coeff(rng)));
    return p;
}

} // namespace

TEST_CASE("degree reads off the unit exponent")
{
    CHECK(degree(make_cocycle(-3, QLaurent::zero())) == -3);
    CHECK(degree(make_cocycle(0, QLaurent::zero(), Rational(5))) == 0);
    CHECK(degree(make_cocycle(-1, q_monomial(1, 1, -9), Rational(2))) == -1);
    CHECK_THROWS_AS(AffineBundleCocycle(q_poly({1, 1}), QLaurent::zero()),
                    std::invalid_argument);
}

TEST_CASE("normalization on the worked examples")
{
    SECTION("band split at degree -3")
    {
        QLaurent b("u");
        b.add_term(1, Rational(1));
        b.add_term(-1, Rational(2));
        b.add_term(-2, Rational(-1));
        b.add_term(-5, Rational(7));
        const auto res = normalize(make_cocycle(-3, b));
        REQUIRE(res.canonical.has_value());
        CHECK(res.canonical->n == 3);
        CHECK(res.canonical->t == std::vector<Rational>{Rational(2), Rational(-1)});
    }
    SECTION("zero b is the line bundle in canonical form")
    {
        const auto res = normalize(make_cocycle(-4, QLaurent::zero()));
        REQUIRE(res.canonical.has_value());
        CHECK(res.canonical->n == 4);
        CHECK(res.canonical->is_line_bundle());
        CHECK(res.canonical->t == std::vector<Rational>(3, Rational(0)));
    }
    SECTION("degree -1 collapses to the single point")
    {
        const auto res = normalize(make_cocycle(-1, q_monomial(1, 1, -1)));
        REQUIRE(res.is_line_bundle_point());
        CHECK(res.line_bundle->degree == -1);
    }
    SECTION("unit coefficient is absorbed without touching b")
    {
        QLaurent b("u");
        b.add_term(-1, Rational(3));
        const auto res = normalize(make_cocycle(-2, b, Rational(7, 2)));
        REQUIRE(res.canonical.has_value());
        CHECK(res.canonical->t == std::vector<Rational>{Rational(3)});
    }
}

TEST_CASE("coordinate changes follow the transition law")
{
    QLaurent b("u");
    b.add_term(-1, Rational(1));
    const AffineBundleCocycle c = make_cocycle(-2, b);

    SECTION("identity change")
    {
        const auto after = apply_change(c, CoordinateChange::identity());
        CHECK(after.a == c.a);
        CHECK(after.b == c.b);
    }
    SECTION("constant scaling multiplies b")
    {
        const Rational t(3, 2);
        const CoordinateChange ch(QLaurent::constant(t), QLaurent::constant(t),
                                  QLaurent::zero("u"), QLaurent::zero("v"));
        const auto after = apply_change(c, ch);
        CHECK(after.a == c.a);
        CHECK(after.b == t * c.b);
    }
    SECTION("adding psi_0 shifts b by a coboundary")
    {
        const CoordinateChange ch(QLaurent::constant(Rational(1)),
                                  QLaurent::constant(Rational(1)),
                                  QLaurent::constant(Rational(1)), QLaurent::zero("v"));
        const auto after = apply_change(c, ch);
        CHECK(after.a == c.a);
        CHECK(after.b == c.b + QLaurent::constant(Rational(1)));
        // both sides normalize identically
        const auto n1 = normalize(c);
        const auto n2 = normalize(after);
        CHECK(n1.canonical->t == n2.canonical->t);
    }
    SECTION("phi must be a constant unit")
    {
        CHECK_THROWS_AS(CoordinateChange(q_monomial(1, 1, 1), QLaurent::constant(Rational(1)),
                                         QLaurent::zero("u"), QLaurent::zero("v")),
                        std::invalid_argument);
        CHECK_THROWS_AS(CoordinateChange(QLaurent::constant(Rational(1)),
                                         QLaurent::constant(Rational(1)), q_monomial(1, 1, -1),
                                         QLaurent::zero("v")),
                        std::invalid_argument);
    }
}

TEST_CASE("classification is invariant under randomized coboundary changes")
{
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> scalar(1, 9);
    for (int n = 2; n <= 6; ++n) {
        QLaurent b("u");
        std::uniform_int_distribution<int> exp(-n - 3, 3);
        std::uniform_int_distribution<long> coeff(-5, 5);
        for (int i = 0; i < 5; ++i)
            b.add_term(exp(rng), Rational(coeff(rng)));
        const AffineBundleCocycle c = make_cocycle(-n, b);
        const auto base = normalize(c);
        REQUIRE(base.canonical.has_value());
        for (int trial = 0; trial < 100; ++trial) {
            const CoordinateChange ch(QLaurent::constant(Rational(1)),
                                      QLaurent::constant(Rational(1)), random_poly(rng, 4, "u"),
                                      random_poly(rng, 4, "v"));
            const auto moved = normalize(apply_change(c, ch));
            REQUIRE(moved.canonical.has_value());
            CHECK(moved.canonical->t == base.canonical->t);

            // a nontrivial constant scaling scales t by the same constant
            const Rational t(scalar(rng), scalar(rng));
            const CoordinateChange scale_ch(QLaurent::constant(t), QLaurent::constant(t),
                                            QLaurent::zero("u"), QLaurent::zero("v"));
            const auto scaled = normalize(apply_change(c, scale_ch));
            for (size_t i = 0; i < base.canonical->t.size(); ++i)
                CHECK(scaled.canonical->t[i] == t * base.canonical->t[i]);
            CHECK(is_isomorphic(*scaled.canonical, *base.canonical));
        }
    }
}

TEST_CASE("isomorphism testing is scalar equivalence of t-vectors")
{
    const CanonicalAffineBundle a(3, {Rational(1), Rational(2)});
    const CanonicalAffineBundle b(3, {Rational(3), Rational(6)});
    const CanonicalAffineBundle c(3, {Rational(1), Rational(0)});
    const CanonicalAffineBundle d(3, {Rational(0), Rational(1)});
    CHECK(is_isomorphic(a, b));
    CHECK_FALSE(is_isomorphic(c, d));
    CHECK(is_isomorphic(CanonicalAffineBundle(3, {Rational(0), Rational(0)}),
                        CanonicalAffineBundle(3, {Rational(0), Rational(0)})));
    CHECK_FALSE(is_isomorphic(a, CanonicalAffineBundle(4, {Rational(1), Rational(2), Rational(0)})));

    SECTION("equivalence relation on randomized scalings")
    {
        std::mt19937 rng(8080);
        std::uniform_int_distribution<long> num(1, 9);
        std::uniform_int_distribution<long> den(1, 9);
        std::uniform_int_distribution<long> coeff(-4, 4);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Rational> t(4);
            for (auto& x : t)
                x = Rational(coeff(rng));
            const Rational c1(num(rng), den(rng));
            std::vector<Rational> tc = t;
            for (auto& x : tc)
                x *= c1;
            const CanonicalAffineBundle A(5, t), B(5, tc);
            CHECK(is_isomorphic(A, B));
            CHECK(is_isomorphic(B, A));
            CHECK(is_isomorphic(A, A));
        }
    }
}

TEST_CASE("pullback along torus maps scales t by the taction weights")
{
    const CanonicalAffineBundle A(3, {Rational(1), Rational(1)});

    SECTION("identity fixes everything")
    {
        const auto moved = mobius_pullback(A, MobiusMap::identity());
        CHECK(moved.n == 3);
        CHECK(moved.t == A.t);
    }
    SECTION("u -> lambda u acts with weight l on t_l")
    {
        const Rational lambda(2);
        const auto moved = mobius_pullback(A, MobiusMap::scaling(lambda));
        // direct substitution gives t_l -> lambda^{-l} t_l; this is the
        // weight-(l,1) action evaluated at the inverse torus element
        CHECK(moved.t == std::vector<Rational>{Rational(1, 2), Rational(1, 4)});
        CHECK(is_isomorphic(mobius_pullback(A, MobiusMap::scaling(Rational(1))), A));
    }
    SECTION("inversion fixes the line bundle")
    {
        const CanonicalAffineBundle line(3, {Rational(0), Rational(0)});
        const auto moved = mobius_pullback(line, MobiusMap::inversion());
        CHECK(moved.is_line_bundle());
        CHECK(moved.n == 3);
    }
    SECTION("inversion reverses the t-vector")
    {
        const CanonicalAffineBundle B(4, {Rational(1), Rational(2), Rational(3)});
        const auto moved = mobius_pullback(B, MobiusMap::inversion());
        CHECK(moved.t == std::vector<Rational>{Rational(-3), Rational(-2), Rational(-1)});
    }
    SECTION("degree is preserved")
    {
        const auto moved = mobius_pullback(A, MobiusMap::scaling(Rational(7, 3)));
        CHECK(moved.n == A.n);
    }
    SECTION("general maps leave the supported chart configuration")
    {
        CHECK_THROWS_AS(mobius_pullback(A, MobiusMap(1, 1, 0, 1)), std::invalid_argument);
    }
}

TEST_CASE("axis re-trivialization identity holds symbolically")
{
    for (int n = 2; n <= 10; ++n)
        for (int l = 1; l <= n - 1; ++l) {
            const AxisCompactification ax = axis_compactification_type(n, l);
            const int expected = n - 2 * l >= 0 ? n - 2 * l : 2 * l - n;
            CHECK(ax.m == expected);
        }
    CHECK(axis_compactification_type(5, 2).m == 1);
    CHECK(axis_compactification_type(4, 2).m == 0);
    CHECK(axis_compactification_type(3, 1).m == 1);
    CHECK_THROWS_AS(axis_compactification_type(3, 3), std::invalid_argument);
}

TEST_CASE("torus weights")
{
    const auto w5 = torus_weights(5);
    REQUIRE(w5.size() == 4);
    for (int l = 1; l <= 4; ++l)
        CHECK(w5[static_cast<size_t>(l - 1)] == TorusWeight{l, 1});
    CHECK(torus_weights(2) == std::vector<TorusWeight>{TorusWeight{1, 1}});
    CHECK(torus_weights(3).size() == 2);
}

TEST_CASE("complements of torus-adapted sections")
{
    SECTION("the l = 1 section of F_1 gives the t_1 axis in degree -3")
    {
        const auto cocycle = complement_to_affine_bundle(1, SectionCurve::canonical(1, 1));
        CHECK(degree(cocycle) == -3);
        const auto res = normalize(cocycle);
        REQUIRE(res.canonical.has_value());
        CHECK(res.canonical->n == 3);
        CHECK_FALSE(is_zero(res.canonical->t[0]));
        CHECK(is_zero(res.canonical->t[1]));
        // round trip: the t_1 axis of the degree -3 family compactifies to F_1
        CHECK(axis_compactification_type(3, 1).m == 1);
    }
    SECTION("the complement of the infinity section is the line bundle")
    {
        const auto cocycle = complement_to_affine_bundle(2, SectionCurve::infinity_section(2));
        CHECK(degree(cocycle) == -2);
        CHECK(cocycle.b.is_zero());
    }
    SECTION("the diagonal of F_0 gives degree -2 with t != 0")
    {
        const auto cocycle = complement_to_affine_bundle(0, SectionCurve::canonical(0, 1));
        CHECK(degree(cocycle) == -2);
        const auto res = normalize(cocycle);
        REQUIRE(res.canonical.has_value());
        CHECK(res.canonical->n == 2);
        CHECK_FALSE(res.canonical->is_line_bundle());
        CHECK(axis_compactification_type(2, 1).m == 0);
    }
    SECTION("round trip onto the canonical axis bundle for n - 2l >= 0")
    {
        for (int n = 2; n <= 8; ++n)
            for (int l = 1; 2 * l <= n; ++l) {
                const auto cocycle = complement_to_affine_bundle(
                    n - 2 * l, SectionCurve::canonical(n - 2 * l, l));
                const auto res = normalize(cocycle);
                REQUIRE(res.canonical.has_value());
                CHECK(res.canonical->n == n);
                std::vector<Rational> axis(static_cast<size_t>(n - 1), Rational(0));
                axis[static_cast<size_t>(l - 1)] = Rational(1);
                CHECK(is_isomorphic(*res.canonical, CanonicalAffineBundle(n, axis)));
            }
    }
    SECTION("unsupported section positions are explicit errors")
    {
        // zeta = u(u-1) meets Gamma_0 away from u = 0
        QLaurent q("u");
        q.add_term(2, Rational(1));
        q.add_term(1, Rational(-1));
        const SectionCurve split(3, 2, QLaurent::constant(Rational(1)), q);
        CHECK_THROWS_AS(complement_to_affine_bundle(3, split), std::invalid_argument);
        // zeta = 1/(u+1) meets Gamma_inf over a finite point
        QLaurent s("u");
        s.add_term(1, Rational(1));
        s.add_term(0, Rational(1));
        const SectionCurve pole(1, 0, s, QLaurent::constant(Rational(1)));
        CHECK_THROWS_AS(complement_to_affine_bundle(1, pole), std::invalid_argument);
    }
}

TEST_CASE("the whole family normalizes once symbolically")
{
    // b = t1 u^-1 + t2 u^-2 plus a symbolic coboundary; the canonical
    // representative recovers exactly the t-monomials.
    auto table = make_symbols({"t1", "t2", "c0", "c1"});
    using SLaurent = LaurentPoly<SymPoly>;
    auto sym = [&](const char* name) { return SymPoly::symbol(name, table); };

    SLaurent b("u");
    b.add_term(-1, sym("t1"));
    b.add_term(-2, sym("t2"));
    b.add_term(0, sym("c0"));          // psi_0 piece
    b.add_term(-3, sym("c1"));         // psi_1 piece at the band edge, d = -3
    const AffineBundleCocycleT<SymPoly> cocycle(
        SLaurent::monomial(SymPoly::from_int(1), -3), b);
    const auto res = normalize(cocycle);
    REQUIRE(res.canonical.has_value());
    CHECK(res.canonical->n == 3);
    CHECK(res.canonical->t[0] == sym("t1"));
    CHECK(res.canonical->t[1] == sym("t2"));

    SECTION("formal t-vectors compare by proportionality")
    {
        const std::vector<SymPoly> t = {sym("t1"), sym("t2")};
        std::vector<SymPoly> two_t = {SymPoly::from_int(2) * sym("t1"),
                                      SymPoly::from_int(2) * sym("t2")};
        CHECK(proportional(t, two_t));
        const std::vector<SymPoly> other = {sym("t2"), sym("t1")};
        CHECK_FALSE(proportional(t, other));
    }
}
