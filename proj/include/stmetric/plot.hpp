#pragma once

#include <span>
#include <string>
#include <vector>

#include "stmetric/invariants.hpp"
#include "stmetric/region.hpp"

namespace stmetric {

/// SVG drawing of orbit members side by side, with the marked lines dashed.
/// Infinite ends are cut off a couple of units past the last feature.
std::string orbit_svg(std::span<const VerticalRegion> regions, std::span<const Lambda> lambdas);

}  // namespace stmetric
