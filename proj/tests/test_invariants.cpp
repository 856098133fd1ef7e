#include <gtest/gtest.h>

#include <set>

#include "stmetric/errors.hpp"
#include "stmetric/invariants.hpp"
#include "stmetric/measures.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace stmetric;
using namespace stmetric::testing;

namespace {

std::vector<Rational> at(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::set<std::vector<int>> perm_set(const std::vector<Permutation>& ps) {
    std::set<std::vector<int>> out;
    for (const auto& p : ps) out.insert(p.p);
    return out;
}

}  // namespace

TEST(ValidateSemitoricPolygon, LatticeSquare) {
    ValidationReport r = validate_semitoric_polygon(lattice_square(1), {});
    EXPECT_TRUE(r.ok());
    EXPECT_FALSE(r.checked.empty());
}

TEST(ValidateSemitoricPolygon, FakeCornerFixture) {
    EXPECT_TRUE(validate_semitoric_polygon(fake_corner_polygon(), at({1})).ok());
    // unmarked, the same vertex is an ordinary Delzant corner
    EXPECT_TRUE(validate_semitoric_polygon(fake_corner_polygon(), {}).ok());
}

TEST(ValidateSemitoricPolygon, SmoothMarkedPointFails) {
    EXPECT_TRUE(validate_semitoric_polygon(smooth_top_polygon(), {}).ok());
    EXPECT_TRUE(validate_semitoric_polygon(smooth_top_polygon(), at({1})).has("marked_point_type"));
    EXPECT_TRUE(validate_semitoric_polygon(lattice_square(2), at({1})).has("marked_point_type"));
}

TEST(ValidateSemitoricPolygon, HiddenAndDoubleFake) {
    EXPECT_TRUE(validate_semitoric_polygon(hidden_corner_polygon(), at({1})).ok());
    EXPECT_TRUE(validate_semitoric_polygon(double_fake_polygon(), at({1, 2})).ok());
    EXPECT_TRUE(validate_semitoric_polygon(hidden_corner_polygon(), {}).has("non_delzant_vertex"));
}

TEST(ValidateSemitoricPolygon, Failures) {
    EXPECT_TRUE(validate_semitoric_polygon(double_fake_polygon(), at({2, 1})).has("lambda_order"));
    EXPECT_TRUE(validate_semitoric_polygon(fake_corner_polygon(), at({3})).has("lambda_outside_support"));
    EXPECT_TRUE(validate_semitoric_polygon(fake_corner_polygon(), at({0})).has("lambda_outside_support"));
    EXPECT_TRUE(validate_semitoric_polygon(ConvexPolygonalSet::empty_set(), {}).has("empty_polygon"));
    std::vector<HalfPlane> strip{HalfPlane(Rational(-1), Rational(0), Rational(0)), HalfPlane(Rational(1), Rational(0), Rational(1))};
    EXPECT_TRUE(validate_semitoric_polygon(polygon_from_halfplanes(strip), {}).has("infinite_height"));
    // a non-Delzant lattice triangle
    EXPECT_TRUE(validate_semitoric_polygon(hull({pt(0, 0), pt(2, 0), pt(0, 1)}), {}).has("non_delzant_vertex"));
}

TEST(ValidateSemitoricPolygon, OrbitConvexity) {
    EXPECT_TRUE(validate_semitoric_polygon(fake_corner_polygon(), at({1})).ok());
    // marking the flat part of the double fake polygon at x = 1/2 is not a fake point and breaks convexity
    std::vector<Rational> ls{Rational(1, 2), Rational(1), Rational(2)};
    ValidationReport bad = validate_semitoric_polygon(double_fake_polygon(), ls);
    EXPECT_TRUE(bad.has("marked_point_type"));
    EXPECT_TRUE(bad.has("orbit_not_convex"));
}

TEST(OrbitPolygons, Examples) {
    SemitoricIngredients none{lattice_square(1), {}};
    EXPECT_EQ(orbit_polygons(none).size(), 1u);
    EXPECT_EQ(orbit_polygons(none)[0], to_vertical_region(lattice_square(1)));

    SemitoricIngredients sq{lattice_square(2), {marker(Rational(1), 0, 1.0)}};
    auto orbit = orbit_polygons(sq);
    ASSERT_EQ(orbit.size(), 2u);
    const VerticalRegion& s = orbit[1];
    EXPECT_EQ(s.top().breakpoints(), std::vector<Rational>{Rational(1)});
    EXPECT_EQ(s.top().pieces(), (std::vector<LinearPiece>{{0, 2}, {1, 1}}));
}

TEST(OrbitPolygons, InfiniteLambdaIsIdentity) {
    VerticalRegion r = to_vertical_region(lattice_square(2));
    std::vector<Lambda> ls{std::nullopt, Rational(1)};
    auto orbit = orbit_regions(r, ls);
    ASSERT_EQ(orbit.size(), 4u);
    EXPECT_EQ(orbit[1], orbit[0]);
    EXPECT_EQ(orbit[3], orbit[2]);
    EXPECT_NE(orbit[2], orbit[0]);
}

TEST(TwistingEquivalent, Examples) {
    std::vector<long> a{1, 3}, b{0, 2}, c{0, 0}, d{0, 1};
    auto ab = twisting_equivalent(a, b);
    ASSERT_TRUE(ab);
    EXPECT_EQ(ab->representative, (std::vector<long>{0, 2}));
    EXPECT_FALSE(twisting_equivalent(c, d));
    std::vector<long> empty;
    EXPECT_TRUE(twisting_equivalent(empty, empty));
    try {
        twisting_equivalent(a, std::vector<long>{1});
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Incomparable);
    }
}

TEST(CanonicalTwist, SortsAndShifts) {
    std::vector<long> k{5, -1, 2};
    EXPECT_EQ(canonical_twist(k).representative, (std::vector<long>{0, 3, 6}));
}

TEST(AppropriatePermutations, Examples) {
    std::vector<long> z{0, 0}, f{5, 5}, a{0, 1}, b{1, 2}, e;
    auto both = appropriate_permutations(z, f);
    ASSERT_EQ(both.size(), 2u);
    EXPECT_EQ(both[0], (Permutation{{0, 1}, -5}));
    EXPECT_EQ(both[1], (Permutation{{1, 0}, -5}));
    auto id = appropriate_permutations(a, b);
    ASSERT_EQ(id.size(), 1u);
    EXPECT_EQ(id[0], (Permutation{{0, 1}, -1}));
    auto none = appropriate_permutations(e, e);
    ASSERT_EQ(none.size(), 1u);
    EXPECT_EQ(none[0], (Permutation{{}, 0}));
    EXPECT_TRUE(appropriate_permutations(z, a).empty());
}

TEST(AppropriatePermutations, TooManyMarkers) {
    std::vector<long> k(11, 0);
    try {
        appropriate_permutations(k, k);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooManyMarkers);
    }
}

TEST(ValidateIngredients, Examples) {
    EXPECT_TRUE(validate_ingredients(fake_fixture(1.0)).ok());
    EXPECT_TRUE(validate_ingredients(fake_fixture(2.0)).has("h_range"));
    EXPECT_TRUE(validate_ingredients(fake_fixture(0.0)).has("h_range"));
    EXPECT_TRUE(validate_ingredients(double_fake_fixture()).ok());

    SemitoricIngredients same = fake_fixture();
    same.markers.push_back(same.markers[0]);
    EXPECT_TRUE(validate_ingredients(same).has("lambda_order"));

    SemitoricIngredients eps = fake_fixture();
    eps.markers[0].epsilon = -1;
    EXPECT_TRUE(validate_ingredients(eps).has("epsilon_not_canonical"));

    SemitoricIngredients inf = fake_fixture();
    inf.markers[0].lambda = std::nullopt;
    EXPECT_TRUE(validate_ingredients(inf).has("lambda_infinite"));

    SemitoricIngredients tay = fake_fixture();
    tay.markers[0].taylor.set(0, 1, 7.0);
    EXPECT_TRUE(validate_ingredients(tay).has("sigma01_range"));
}

TEST(ShiftRepresentative, ShearsPolygonAndShiftsK) {
    SemitoricIngredients m = double_fake_fixture({0, 2});
    SemitoricIngredients s = shift_representative(m, 3);
    EXPECT_EQ(s.ks(), (std::vector<long>{3, 5}));
    EXPECT_EQ(to_vertical_region(s.polygon), to_vertical_region(m.polygon).transformed(Integer(3)));
}

// --- properties ---------------------------------------------------------------

TEST(InvariantProperties, CanonicalizationMatchesExhaustiveSearch) {
    Rng rng(41);
    for (int trial = 0; trial < 2000; ++trial) {
        std::size_t mf = static_cast<std::size_t>(uniform_int(rng, 0, 6));
        std::vector<long> k, kp;
        for (std::size_t j = 0; j < mf; ++j) k.push_back(uniform_int(rng, -2, 2));
        kp = uniform_int(rng, 0, 1) ? equivalent_twist(rng, k) : random_twist(rng, mf);
        bool eq = twisting_equivalent(k, kp).has_value();
        EXPECT_EQ(eq, exhaustive_equivalent(k, kp));
        auto perms = appropriate_permutations(k, kp);
        EXPECT_EQ(eq, !perms.empty());
        auto oracle = exhaustive_permutations(k, kp);
        ASSERT_EQ(perms.size(), oracle.size());
        for (std::size_t i = 0; i < perms.size(); ++i) {
            EXPECT_EQ(perms[i].p, oracle[i]);
            for (std::size_t j = 0; j < mf; ++j) EXPECT_EQ(k[j] - kp[perms[i].p[j]], perms[i].c);
        }
    }
}

TEST(InvariantProperties, GroupProperty) {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t mf = static_cast<std::size_t>(uniform_int(rng, 1, 5));
        std::vector<long> k;
        for (std::size_t j = 0; j < mf; ++j) k.push_back(uniform_int(rng, -1, 1));
        std::vector<long> kp = equivalent_twist(rng, k);
        std::vector<long> kpp = equivalent_twist(rng, k);
        auto qs = appropriate_permutations(k, kpp);
        ASSERT_FALSE(qs.empty());
        const auto& q = qs[uniform_int(rng, 0, static_cast<long>(qs.size()) - 1)].p;
        std::vector<int> qinv(mf);
        for (std::size_t j = 0; j < mf; ++j) qinv[q[j]] = static_cast<int>(j);
        std::set<std::vector<int>> composed;
        for (const auto& p : appropriate_permutations(k, kp)) {
            std::vector<int> r(mf);
            for (std::size_t i = 0; i < mf; ++i) r[i] = p.p[qinv[i]];
            composed.insert(r);
        }
        EXPECT_EQ(perm_set(appropriate_permutations(kpp, kp)), composed);
    }
}

TEST(InvariantProperties, MeasureConstantAcrossOrbit) {
    Rng rng(43);
    AdmissibleMeasure nu0 = AdmissibleMeasure::nu0();
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t mf = static_cast<std::size_t>(uniform_int(rng, 0, 3));
        SemitoricIngredients m = random_ingredients(rng, random_twist(rng, mf));
        auto orbit = orbit_polygons(m);
        ASSERT_EQ(orbit.size(), std::size_t{1} << mf);
        Rational base = measure_region(nu0, orbit[0]).rational();
        for (const auto& r : orbit) EXPECT_EQ(measure_region(nu0, r).rational(), base);
    }
}

TEST(InvariantProperties, ValidFixturesHaveConvexOrbits) {
    std::vector<SemitoricIngredients> fixtures{fake_fixture(), double_fake_fixture(), crossing_element(Rational(1, 4)),
                                               crossing_element(Rational(-1, 8)),
                                               {hidden_corner_polygon(), {marker(Rational(1), 0, 1.0)}}};
    for (const auto& m : fixtures) {
        ASSERT_TRUE(validate_ingredients(m).ok());
        for (const auto& r : orbit_polygons(m)) EXPECT_TRUE(r.is_convex());
    }
}

TEST(InvariantProperties, ValidationAcceptsShiftedRepresentatives) {
    for (long d = -3; d <= 3; ++d) {
        EXPECT_TRUE(validate_ingredients(shift_representative(double_fake_fixture(), d)).ok()) << d;
        EXPECT_TRUE(validate_ingredients(shift_representative(fake_fixture(), d)).ok()) << d;
    }
}
