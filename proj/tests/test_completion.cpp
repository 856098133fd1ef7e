#include <gtest/gtest.h>

#include <cmath>

#include "stmetric/completion.hpp"
#include "stmetric/errors.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace stmetric;
using namespace stmetric::testing;

namespace {

GeneralizedIngredients two_at_one(double h1, double h2, TaylorSeries2 s1 = series(1.0), TaylorSeries2 s2 = series(1.0)) {
    return {hidden_corner_polygon(), {marker(Rational(1), 0, h1, std::move(s1)), marker(Rational(1), 0, h2, std::move(s2))}};
}

GeneralizedIngredients square_element(const Rational& side) {
    return {hull({pt(0, 0), pt(side, 0), pt(side, side), pt(0, side)}), {}};
}

MetricConfig raw_config() {
    MetricConfig cfg = completion_config();
    cfg.h_mode = HMode::Raw;
    return cfg;
}

}  // namespace

TEST(CanonicalOrder, Examples) {
    GeneralizedIngredients sorted = two_at_one(0.3, 0.7);
    EXPECT_EQ(canonical_order(sorted).markers[0].h, 0.3);

    GeneralizedIngredients swapped = canonical_order(two_at_one(0.7, 0.3));
    EXPECT_EQ(swapped.markers[0].h, 0.3);
    EXPECT_EQ(swapped.markers[1].h, 0.7);

    GeneralizedIngredients by_x = canonical_order(two_at_one(0.5, 0.5, series(1.0, {{1, 0, 2.0}}), series(1.0, {{1, 0, 1.0}})));
    EXPECT_EQ(by_x.markers[0].taylor.coeff(1, 0), 1.0);
    EXPECT_EQ(by_x.markers[1].taylor.coeff(1, 0), 2.0);
}

TEST(CanonicalOrder, YBeforeHigherDegrees) {
    // equal X coefficients: the Y coefficient decides before any degree-2 term
    GeneralizedIngredients g = two_at_one(0.5, 0.5, series(3.0, {{2, 0, -5.0}}), series(2.0, {{2, 0, 5.0}}));
    GeneralizedIngredients c = canonical_order(g);
    EXPECT_EQ(c.markers[0].taylor.coeff(0, 1), 2.0);
}

TEST(CanonicalOrder, InfinityLast) {
    GeneralizedIngredients g{hull({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}),
                             {marker(std::nullopt, 0, 0.1), marker(Rational(1), 0, 0.9)}};
    GeneralizedIngredients c = canonical_order(g);
    EXPECT_TRUE(c.markers[0].lambda.has_value());
    EXPECT_FALSE(c.markers[1].lambda.has_value());
}

TEST(ValidateGeneralized, Examples) {
    EXPECT_TRUE(validate_generalized(to_generalized(double_fake_fixture())).ok());
    EXPECT_TRUE(validate_generalized(to_generalized(fake_fixture())).ok());

    GeneralizedIngredients empty{ConvexPolygonalSet::empty_set(), {marker(Rational(0), 0, 0.5)}};
    EXPECT_TRUE(validate_generalized(empty).ok());
    empty.markers[0].lambda = Rational(1);
    EXPECT_TRUE(validate_generalized(empty).has("empty_lambda"));

    GeneralizedIngredients smooth{hull({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}),
                                  {marker(Rational(1), 0, 0.25), marker(Rational(1), 0, 0.75)}};
    EXPECT_TRUE(validate_generalized(smooth).has("orbit_not_convex"));

    EXPECT_TRUE(validate_generalized(collided_element()).ok());
    EXPECT_TRUE(validate_generalized(truncation_element(std::nullopt)).ok());
    EXPECT_TRUE(validate_generalized(truncation_element(8)).ok());
}

TEST(ValidateGeneralized, Failures) {
    EXPECT_TRUE(validate_generalized(two_at_one(0.7, 0.3)).has("marker_order"));
    EXPECT_TRUE(validate_generalized(two_at_one(0.3, 1.5)).has("h_range"));
    GeneralizedIngredients out{fake_corner_polygon(), {marker(Rational(4), 0, 0.5)}};
    EXPECT_TRUE(validate_generalized(out).has("lambda_outside_support"));
    std::vector<HalfPlane> half{HalfPlane(Rational(0), Rational(-1), Rational(0))};
    GeneralizedIngredients tall{polygon_from_halfplanes(half), {}};
    EXPECT_TRUE(validate_generalized(tall).has("infinite_height"));
    GeneralizedIngredients eps = collided_element();
    eps.markers[1].epsilon = -1;
    EXPECT_TRUE(validate_generalized(eps).has("epsilon_not_canonical"));
}

TEST(ToGeneralized, NormalizesH) {
    GeneralizedIngredients g = to_generalized(fake_fixture(1.0));
    EXPECT_DOUBLE_EQ(g.markers[0].h, 0.5);
}

TEST(DistanceCompletion, SelfIsZero) {
    EXPECT_EQ(distance_completion(collided_element(), collided_element()), 0.0);
    EXPECT_EQ(distance_completion(truncation_element(std::nullopt), truncation_element(std::nullopt)), 0.0);
}

TEST(DistanceCompletion, EmptyElement) {
    GeneralizedIngredients empty{ConvexPolygonalSet::empty_set(), {}};
    EXPECT_DOUBLE_EQ(distance_completion(empty, square_element(Rational(1))), 1.0);
}

TEST(DistanceCompletion, TruncationFamily) {
    GeneralizedIngredients limit = truncation_element(std::nullopt);
    double prev = HUGE_VAL;
    for (long n : {4L, 8L, 16L}) {
        double d = distance_completion(truncation_element(n), limit);
        EXPECT_DOUBLE_EQ(d, 2.0 / static_cast<double>(n));
        EXPECT_LT(d, prev);
        prev = d;
    }
}

TEST(DistanceCompletion, CornerCutFamily) {
    GeneralizedIngredients collided = collided_element();
    std::vector<double> ratios;
    double prev = HUGE_VAL;
    for (long n : {4L, 8L, 16L, 32L}) {
        GeneralizedIngredients cut = corner_cut_element(Rational(1, n));
        ASSERT_TRUE(validate_generalized(cut).ok());
        double d = distance_completion(cut, collided);
        EXPECT_LT(d, prev);
        prev = d;
        ratios.push_back(d * static_cast<double>(n));
    }
    double lo = *std::min_element(ratios.begin(), ratios.end());
    double hi = *std::max_element(ratios.begin(), ratios.end());
    EXPECT_LE(hi, 4 * lo);
}

TEST(DistanceCompletion, CrossingFamily) {
    for (long n : {4L, 8L, 16L}) {
        Rational delta(1, n);
        GeneralizedIngredients plus = to_generalized(crossing_element(delta));
        GeneralizedIngredients minus = to_generalized(crossing_element(-delta));
        EXPECT_LE(distance_completion(plus, minus), 40.0 * to_double(delta));
        MetricConfig cfg = completion_config();
        EXPECT_GE(distance_id(make_operand(plus, cfg.h_mode), make_operand(minus, cfg.h_mode), cfg), 0.2);
    }
}

TEST(CauchyReport, ConstantSequence) {
    std::vector<GeneralizedIngredients> seq(4, collided_element());
    SequenceReport r = cauchy_report(seq, 1e-9);
    EXPECT_TRUE(r.consistent_with_cauchy());
    EXPECT_EQ(r.cauchy_from, std::size_t{0});
    EXPECT_EQ(r.limit_candidate, std::size_t{3});
    EXPECT_EQ(r.successive, (std::vector<double>{0.0, 0.0, 0.0}));
    EXPECT_EQ(r.pairs.size(), 6u);
}

TEST(CauchyReport, ShrinkingSquares) {
    std::vector<GeneralizedIngredients> seq;
    for (long n = 1; n <= 30; ++n) seq.push_back(square_element(1 + Rational(1, n)));
    SequenceReport r = cauchy_report(seq, 0.1);
    ASSERT_TRUE(r.consistent_with_cauchy());
    EXPECT_GT(*r.cauchy_from, 0u);
    for (std::size_t i = 0; i < r.successive.size(); ++i) {
        // side s: area s^2 inside [0, 1] only up to x = 1, the rest weighted by x^-3
        double n = static_cast<double>(i + 1);
        EXPECT_LT(r.successive[i], 10.0 / (n * n) + 4.0 / n);
        EXPECT_GT(r.successive[i], 0.0);
    }
    for (const auto& p : r.pairs) {
        if (p.i >= *r.cauchy_from) EXPECT_LT(p.distance, 0.1);
    }
}

TEST(CauchyReport, AlternatingMarkerCount) {
    std::vector<GeneralizedIngredients> seq;
    for (int i = 0; i < 6; ++i) seq.push_back(i % 2 ? to_generalized(double_fake_fixture()) : to_generalized(fake_fixture()));
    SequenceReport r = cauchy_report(seq, 0.5);
    EXPECT_FALSE(r.consistent_with_cauchy());
    EXPECT_FALSE(r.limit_candidate);
    for (double d : r.successive) EXPECT_EQ(d, 1.0);
}

TEST(CauchyReport, RejectsBadInput) {
    std::vector<GeneralizedIngredients> one{collided_element()};
    EXPECT_THROW(cauchy_report(one, 0.1), Error);
    std::vector<GeneralizedIngredients> two(2, collided_element());
    try {
        cauchy_report(two, 0.0);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidSequence);
    }
}

// --- properties ---------------------------------------------------------------

TEST(CompletionProperties, StrictElementsEmbedIsometrically) {
    Rng rng(61);
    MetricConfig raw = raw_config();
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t mf = static_cast<std::size_t>(uniform_int(rng, 0, 3));
        std::vector<long> k = random_twist(rng, mf);
        SemitoricIngredients a = random_ingredients(rng, k);
        SemitoricIngredients b = random_ingredients(rng, equivalent_twist(rng, k));
        AlignmentResult strict = distance_component(a, b, raw);
        AlignmentResult general = distance_component(make_operand(to_generalized(a), HMode::Raw),
                                                     make_operand(to_generalized(b), HMode::Raw), raw);
        EXPECT_EQ(general.polygon.rational(), strict.polygon.rational());
        EXPECT_NEAR(general.total, strict.total, 1e-12);
        EXPECT_NEAR(distance_completion(to_generalized(a), to_generalized(b), raw), distance_full(a, b, raw), 1e-12);
    }
}

TEST(CompletionProperties, CanonicalOrderIsIdempotentAndStable) {
    Rng rng(62);
    for (int trial = 0; trial < 200; ++trial) {
        GeneralizedIngredients g = two_at_one(uniform_int(rng, 0, 2) / 2.0, uniform_int(rng, 0, 2) / 2.0,
                                              random_series(rng, 2), random_series(rng, 2));
        g.markers[0].k = 0;
        g.markers[1].k = 1;  // tags the original position
        GeneralizedIngredients c = canonical_order(g);
        EXPECT_EQ(canonical_order(c).markers[0].k, c.markers[0].k);
        bool tie = !marker_less(g.markers[0], g.markers[1]) && !marker_less(g.markers[1], g.markers[0]);
        if (tie) EXPECT_EQ(c.markers[0].k, 0);
        EXPECT_FALSE(marker_less(c.markers[1], c.markers[0]));
    }
}

TEST(CompletionProperties, DistanceIgnoresMarkerOrder) {
    Rng rng(63);
    for (int trial = 0; trial < 100; ++trial) {
        GeneralizedIngredients g = two_at_one(uniform_real(rng, 0, 1), uniform_real(rng, 0, 1), random_series(rng, 2),
                                              random_series(rng, 2));
        GeneralizedIngredients h = two_at_one(uniform_real(rng, 0, 1), uniform_real(rng, 0, 1), random_series(rng, 2),
                                              random_series(rng, 2));
        double d = distance_completion(g, h);
        EXPECT_NEAR(distance_completion(canonical_order(g), h), d, 1e-12);
        EXPECT_NEAR(distance_completion(g, canonical_order(h)), d, 1e-12);

        std::size_t mf = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        std::vector<long> k(mf, 0);
        GeneralizedIngredients a = to_generalized(random_ingredients(rng, k));
        GeneralizedIngredients b = to_generalized(random_ingredients(rng, k));
        GeneralizedIngredients shuffled = a;
        std::shuffle(shuffled.markers.begin(), shuffled.markers.end(), rng);
        EXPECT_NEAR(distance_completion(shuffled, b), distance_completion(a, b), 1e-12);
        EXPECT_EQ(canonical_order(shuffled).markers.size(), a.markers.size());
    }
}
