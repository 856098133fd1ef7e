#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stmetric/invariants.hpp"
#include "stmetric/metric.hpp"

namespace stmetric {

/// Element of the polygonal part of the completion. Marker h values hold the
/// normalized height h / slice length in [0, 1]; lambdas may coincide or be
/// +inf, and the polygon may be the flagged empty set (markers at lambda 0).
struct GeneralizedIngredients {
    ConvexPolygonalSet polygon;
    std::vector<Marker> markers;

    std::size_t mf() const { return markers.size(); }
};

/// Strict ingredients viewed as a completion element (h divided by slice length).
GeneralizedIngredients to_generalized(const SemitoricIngredients& m);

/// Total order on markers: lambda (inf last), then h, then Taylor
/// coefficients in graded-lex order X, Y, X^2, XY, Y^2, ...
bool marker_less(const Marker& a, const Marker& b);

GeneralizedIngredients canonical_order(const GeneralizedIngredients& g);

ValidationReport validate_generalized(const GeneralizedIngredients& g);

/// Same as the metric config, but comparing normalized heights.
MetricConfig completion_config();

MetricOperand make_operand(const GeneralizedIngredients& g, HMode mode);

double distance_completion(const GeneralizedIngredients& a, const GeneralizedIngredients& b,
                           const MetricConfig& cfg = completion_config());

struct PairDistance {
    std::size_t i = 0;
    std::size_t j = 0;
    double distance = 0.0;
    std::optional<Permutation> perm;  ///< minimizing permutation for comparable pairs
};

struct SequenceReport {
    std::vector<PairDistance> pairs;  ///< all pairs with 0 < j - i <= max lag
    std::vector<double> successive;   ///< d(g_i, g_{i+1})
    double eps = 0.0;
    std::size_t max_lag = 3;
    /// Smallest N <= n - 2 with every recorded pair from N on below eps.
    std::optional<std::size_t> cauchy_from;
    std::optional<std::size_t> limit_candidate;

    bool consistent_with_cauchy() const { return cauchy_from.has_value(); }
};

/// Throws InvalidSequence for fewer than two elements or eps <= 0.
SequenceReport cauchy_report(std::span<const GeneralizedIngredients> seq, double eps,
                             const MetricConfig& cfg = completion_config(), std::size_t max_lag = 3);

}  // namespace stmetric
