#pragma once

#include <optional>
#include <vector>

#include "stmetric/invariants.hpp"
#include "stmetric/measures.hpp"
#include "stmetric/taylor.hpp"

namespace stmetric {

/// How the h invariants are compared: raw heights, or heights divided by
/// the length of the slice they sit in.
enum class HMode { Raw, Normalized };

const char* h_mode_name(HMode mode);

struct MetricConfig {
    AdmissibleMeasure nu = AdmissibleMeasure::nu0();
    LinearSummableSeq bn = LinearSummableSeq::geometric(Rational(1, 2));
    std::optional<int> max_degree;  ///< drop Taylor terms of higher total degree
    HMode h_mode = HMode::Raw;
    double incomparable_value = 1.0;
};

/// Everything the metric needs from one element: its region (possibly empty),
/// marker positions, twisting indices, the h values already expressed in the
/// chosen HMode, and the Taylor series.
struct MetricOperand {
    VerticalRegion region;
    std::vector<Lambda> lambdas;
    std::vector<long> ks;
    std::vector<double> hs;
    std::vector<TaylorSeries2> taylors;

    std::size_t mf() const { return ks.size(); }
};

MetricOperand make_operand(const SemitoricIngredients& m, HMode mode);

struct AlignmentResult {
    Permutation perm;
    MeasureValue polygon;
    std::vector<double> taylor_terms;  ///< indexed by marker of the first argument
    std::vector<double> h_terms;
    double total = 0.0;
};

/// Sum over u of nu(t_u(R) * t_{p(u)}(T^c R')), where coordinate j of u moves
/// to coordinate p[j]. Throws Alignment unless p is appropriate with constant c.
MeasureValue polygon_distance_aligned(const MetricOperand& a, const MetricOperand& b, const Permutation& p,
                                      const AdmissibleMeasure& nu);
MeasureValue polygon_distance_aligned(const SemitoricIngredients& a, const SemitoricIngredients& b,
                                      const Permutation& p, const AdmissibleMeasure& nu);

AlignmentResult comparison_with_alignment(const MetricOperand& a, const MetricOperand& b, const Permutation& p,
                                          const MetricConfig& cfg);
AlignmentResult comparison_with_alignment(const SemitoricIngredients& a, const SemitoricIngredients& b,
                                          const Permutation& p, const MetricConfig& cfg = {});

/// Minimum over appropriate permutations; the lexicographically first
/// minimizer wins ties. Throws Incomparable for different mf or inequivalent k.
AlignmentResult distance_component(const MetricOperand& a, const MetricOperand& b, const MetricConfig& cfg);
AlignmentResult distance_component(const SemitoricIngredients& a, const SemitoricIngredients& b,
                                   const MetricConfig& cfg = {});

bool comparable(const MetricOperand& a, const MetricOperand& b);

/// distance_component when comparable, cfg.incomparable_value otherwise.
double distance_full(const MetricOperand& a, const MetricOperand& b, const MetricConfig& cfg);
double distance_full(const SemitoricIngredients& a, const SemitoricIngredients& b, const MetricConfig& cfg = {});

/// The identity alignment when it is appropriate, cfg.incomparable_value otherwise.
double distance_id(const MetricOperand& a, const MetricOperand& b, const MetricConfig& cfg);
double distance_id(const SemitoricIngredients& a, const SemitoricIngredients& b, const MetricConfig& cfg = {});

}  // namespace stmetric
