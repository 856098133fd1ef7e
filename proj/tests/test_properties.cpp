#include <gtest/gtest.h>

#include <algorithm>

#include "stmetric/completion.hpp"
#include "stmetric/io.hpp"
#include "stmetric/metric.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace stmetric;
using namespace stmetric::testing;

namespace {

SemitoricIngredients through_json(const SemitoricIngredients& m) {
    io::IngredientsDocument doc{false, m.polygon, m.markers};
    std::string text = io::document_to_json(doc).dump();
    io::IngredientsDocument back = io::document_from_json(io::json::parse(text));
    return {back.polygon, back.markers};
}

}  // namespace

TEST(CrossModule, SerializationPreservesDistance) {
    Rng rng(81);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t mf = static_cast<std::size_t>(uniform_int(rng, 0, 3));
        std::vector<long> k = random_twist(rng, mf);
        SemitoricIngredients a = random_ingredients(rng, k);
        SemitoricIngredients b = random_ingredients(rng, equivalent_twist(rng, k));
        EXPECT_EQ(distance_full(through_json(a), through_json(b)), distance_full(a, b));
    }
}

TEST(CrossModule, CommonShiftLeavesDistanceUnchanged) {
    Rng rng(82);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t mf = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        std::vector<long> k = random_twist(rng, mf);
        SemitoricIngredients a = random_ingredients(rng, k);
        SemitoricIngredients b = random_ingredients(rng, equivalent_twist(rng, k));
        long d = uniform_int(rng, -3, 3);
        AlignmentResult before = distance_component(a, b);
        AlignmentResult after = distance_component(shift_representative(a, d), shift_representative(b, d));
        EXPECT_EQ(after.polygon.rational(), before.polygon.rational());
        EXPECT_NEAR(after.total, before.total, 1e-12);
        EXPECT_EQ(after.perm.p, before.perm.p);
    }
}

TEST(CrossModule, CompletionTriangleInequality) {
    Rng rng(83);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t mf = static_cast<std::size_t>(uniform_int(rng, 0, 2));
        std::vector<long> k = random_twist(rng, mf);
        GeneralizedIngredients a = to_generalized(random_ingredients(rng, k));
        GeneralizedIngredients b = to_generalized(random_ingredients(rng, equivalent_twist(rng, k)));
        GeneralizedIngredients c = to_generalized(random_ingredients(rng, equivalent_twist(rng, k)));
        double ab = distance_completion(a, b);
        double bc = distance_completion(b, c);
        double ac = distance_completion(a, c);
        EXPECT_LE(ac, ab + bc + 1e-12) << "trial " << trial;
        EXPECT_NEAR(ab, distance_completion(b, a), 1e-12);
    }
}

TEST(CrossModule, SequenceReportMatchesPairwiseDistances) {
    std::vector<GeneralizedIngredients> seq;
    for (long n : {2L, 4L, 8L, 16L, 32L}) seq.push_back(truncation_element(n));
    SequenceReport rep = cauchy_report(seq, 0.3);
    for (const auto& pair : rep.pairs) {
        EXPECT_EQ(pair.distance, distance_completion(seq[pair.i], seq[pair.j]));
    }
    ASSERT_EQ(rep.successive.size(), 4u);
    EXPECT_TRUE(std::is_sorted(rep.successive.rbegin(), rep.successive.rend()));
}
