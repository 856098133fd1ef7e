#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stmetric/polygon.hpp"
#include "stmetric/rational.hpp"
#include "stmetric/region.hpp"
#include "stmetric/taylor.hpp"
#include "stmetric/validation.hpp"

namespace stmetric {

/// Position of a marked line; nullopt stands for +inf (completion elements only).
using Lambda = std::optional<Rational>;

/// Largest number of markers the permutation and orbit enumerations accept.
inline constexpr std::size_t max_markers = 10;

struct Marker {
    Lambda lambda;
    int epsilon = 1;
    long k = 0;      ///< twisting index
    double h = 0.0;  ///< height of the focus-focus value above the bottom boundary
    TaylorSeries2 taylor;
};

/// One representative of a semitoric list of ingredients: the polygon with
/// every cut pointing up, and the markers in increasing lambda order.
struct SemitoricIngredients {
    ConvexPolygonalSet polygon;
    std::vector<Marker> markers;

    std::size_t mf() const { return markers.size(); }
    std::vector<long> ks() const;
    std::vector<Lambda> lambdas() const;
};

/// Twisting-index class: sorted, with the minimum shifted to 0.
struct TwistClass {
    std::vector<long> representative;

    friend bool operator==(const TwistClass&, const TwistClass&) = default;
};

TwistClass canonical_twist(std::span<const long> k);

/// Present iff k and k' differ by a constant after reordering. Throws
/// Incomparable on a length mismatch.
std::optional<TwistClass> twisting_equivalent(std::span<const long> k, std::span<const long> kp);

/// p maps marker j of the first list to marker p[j] of the second, with
/// k[j] - kp[p[j]] = c for every j.
struct Permutation {
    std::vector<int> p;
    long c = 0;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// All appropriate permutations in lexicographic order; empty when k and k'
/// are not equivalent. Throws Incomparable on a length mismatch and
/// TooManyMarkers above max_markers.
std::vector<Permutation> appropriate_permutations(std::span<const long> k, std::span<const long> kp);

ValidationReport validate_semitoric_polygon(const ConvexPolygonalSet& p, std::span<const Rational> lambdas);

/// Shears t_u(region) for every u in {0,1}^n, indexed by the bitmask with bit j
/// set when u_j = 1. Infinite lambdas shear nothing.
std::vector<VerticalRegion> orbit_regions(const VerticalRegion& region, std::span<const Lambda> lambdas);

std::vector<VerticalRegion> orbit_polygons(const SemitoricIngredients& m);

ValidationReport validate_ingredients(const SemitoricIngredients& m);

/// The same element written with (T^d polygon, k + d).
SemitoricIngredients shift_representative(const SemitoricIngredients& m, long d);

}  // namespace stmetric
