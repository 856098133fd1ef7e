#include "stmetric/invariants.hpp"

#include <algorithm>

#include "stmetric/errors.hpp"

namespace stmetric {

namespace {

void require_same_length(std::span<const long> k, std::span<const long> kp) {
    if (k.size() != kp.size()) {
        throw Error(ErrorKind::Incomparable, "twisting vectors of lengths " + std::to_string(k.size()) + " and " +
                                                 std::to_string(kp.size()));
    }
}

std::string marker_name(std::size_t j) { return "marker " + std::to_string(j + 1); }

}  // namespace

std::vector<long> SemitoricIngredients::ks() const {
    std::vector<long> out;
    for (const auto& m : markers) out.push_back(m.k);
    return out;
}

std::vector<Lambda> SemitoricIngredients::lambdas() const {
    std::vector<Lambda> out;
    for (const auto& m : markers) out.push_back(m.lambda);
    return out;
}

TwistClass canonical_twist(std::span<const long> k) {
    std::vector<long> v(k.begin(), k.end());
    std::sort(v.begin(), v.end());
    if (!v.empty()) {
        long lo = v.front();
        for (auto& x : v) x -= lo;
    }
    return {std::move(v)};
}

std::optional<TwistClass> twisting_equivalent(std::span<const long> k, std::span<const long> kp) {
    require_same_length(k, kp);
    TwistClass a = canonical_twist(k);
    if (a == canonical_twist(kp)) return a;
    return std::nullopt;
}

std::vector<Permutation> appropriate_permutations(std::span<const long> k, std::span<const long> kp) {
    require_same_length(k, kp);
    if (k.size() > max_markers) {
        throw Error(ErrorKind::TooManyMarkers,
                    std::to_string(k.size()) + " markers exceeds the limit of " + std::to_string(max_markers));
    }
    std::vector<Permutation> out;
    if (k.empty()) {
        out.push_back({{}, 0});
        return out;
    }
    if (!twisting_equivalent(k, kp)) return out;

    long c = *std::min_element(k.begin(), k.end()) - *std::min_element(kp.begin(), kp.end());
    std::size_t n = k.size();
    std::vector<int> p(n, -1);
    std::vector<bool> used(n, false);
    auto extend = [&](auto& self, std::size_t j) -> void {
        if (j == n) {
            out.push_back({p, c});
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || kp[i] != k[j] - c) continue;
            used[i] = true;
            p[j] = static_cast<int>(i);
            self(self, j + 1);
            used[i] = false;
        }
    };
    extend(extend, 0);
    return out;
}

ValidationReport validate_semitoric_polygon(const ConvexPolygonalSet& p, std::span<const Rational> lambdas) {
    ValidationReport r;
    r.check("lambdas strictly increasing");
    for (std::size_t j = 1; j < lambdas.size(); ++j) {
        if (!(lambdas[j - 1] < lambdas[j])) {
            r.fail("lambda_order", marker_name(j) + " at " + to_string(lambdas[j]) + " does not lie right of " +
                                       to_string(lambdas[j - 1]));
        }
    }
    r.check("polygon nonempty");
    if (p.is_empty()) {
        r.fail("empty_polygon", "polygon has empty interior");
        return r;
    }
    r.check("everywhere finite height");
    if (!has_everywhere_finite_height(p)) {
        r.fail("infinite_height", "some vertical line meets the polygon in an unbounded set");
        return r;
    }
    VerticalRegion region = to_vertical_region(p);
    const XInterval& support = p.x_support();

    r.check("marked lines cross the open x-support");
    r.check("marked top-boundary points are fake or hidden Delzant");
    std::vector<Rational> marked;
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        const Rational& x = lambdas[j];
        if (!support.contains_interior(x)) {
            r.fail("lambda_outside_support", marker_name(j) + " at x = " + to_string(x) +
                                                 " is outside the open x-support (" +
                                                 bound_to_string(support.lo, false) + ", " +
                                                 bound_to_string(support.hi, true) + ")");
            continue;
        }
        marked.push_back(x);
        auto [u, v] = top_boundary_directions(region, x);
        Integer d = det(u, IntVec2{v.x, v.x + v.y});
        if (d != 0 && d != 1) {
            r.fail("marked_point_type", marker_name(j) + ": top point (" + to_string(x) + ", " +
                                            to_string(region.top()(x)) + ") is neither fake nor hidden Delzant, det = " +
                                            d.get_str());
        }
    }

    r.check("all other vertices Delzant");
    for (const auto& v : p.vertices()) {
        bool is_marked = on_top_boundary(p, v.point) &&
                         std::find(marked.begin(), marked.end(), v.point.x) != marked.end();
        if (is_marked) continue;
        Integer d = det(v.u, v.v);
        if (d != 1) {
            r.fail("non_delzant_vertex", "vertex (" + to_string(v.point.x) + ", " + to_string(v.point.y) +
                                             ") has det = " + d.get_str());
        }
    }

    r.check("every orbit member convex");
    if (lambdas.size() > max_markers) {
        r.fail("too_many_markers", std::to_string(lambdas.size()) + " markers exceeds the limit of " +
                                       std::to_string(max_markers));
        return r;
    }
    std::vector<Lambda> ls(marked.begin(), marked.end());
    std::vector<VerticalRegion> orbit = orbit_regions(region, ls);
    for (std::size_t mask = 0; mask < orbit.size(); ++mask) {
        if (!orbit[mask].is_convex()) {
            std::string u;
            for (std::size_t j = 0; j < ls.size(); ++j) u += (mask >> j) & 1 ? '1' : '0';
            r.fail("orbit_not_convex", "t_u is not convex for u = " + u);
        }
    }
    return r;
}

std::vector<VerticalRegion> orbit_regions(const VerticalRegion& region, std::span<const Lambda> lambdas) {
    if (lambdas.size() > max_markers) {
        throw Error(ErrorKind::TooManyMarkers,
                    std::to_string(lambdas.size()) + " markers exceeds the limit of " + std::to_string(max_markers));
    }
    std::vector<VerticalRegion> out{region};
    out.reserve(std::size_t{1} << lambdas.size());
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        std::size_t half = out.size();
        for (std::size_t mask = 0; mask < half; ++mask) {
            out.push_back(lambdas[j] ? out[mask].sheared(*lambdas[j], Integer(1)) : out[mask]);
        }
    }
    return out;
}

std::vector<VerticalRegion> orbit_polygons(const SemitoricIngredients& m) {
    std::vector<Lambda> ls = m.lambdas();
    return orbit_regions(to_vertical_region(m.polygon), ls);
}

ValidationReport validate_ingredients(const SemitoricIngredients& m) {
    ValidationReport r;
    r.check("marker lambdas finite");
    r.check("epsilon = +1 representative");
    std::vector<Rational> lambdas;
    for (std::size_t j = 0; j < m.markers.size(); ++j) {
        const Marker& mk = m.markers[j];
        if (!mk.lambda) {
            r.fail("lambda_infinite", marker_name(j) + " has lambda = inf");
        } else {
            lambdas.push_back(*mk.lambda);
        }
        if (mk.epsilon != 1) {
            r.fail("epsilon_not_canonical", marker_name(j) + " has epsilon = " + std::to_string(mk.epsilon));
        }
    }
    r.merge(validate_semitoric_polygon(m.polygon, lambdas));

    r.check("0 < h < slice length");
    bool measurable = !m.polygon.is_empty() && has_everywhere_finite_height(m.polygon);
    for (std::size_t j = 0; j < m.markers.size() && measurable; ++j) {
        const Marker& mk = m.markers[j];
        if (!mk.lambda) continue;
        auto slice = slice_interval(m.polygon, *mk.lambda);
        if (!slice) continue;
        double len = to_double(Rational(slice->second - slice->first));
        if (!(mk.h > 0.0 && mk.h < len)) {
            r.fail("h_range", marker_name(j) + ": h = " + std::to_string(mk.h) + " is not strictly between 0 and " +
                                  to_string(Rational(slice->second - slice->first)));
        }
    }

    r.check("Taylor series normalized");
    for (std::size_t j = 0; j < m.markers.size(); ++j) {
        for (const auto& v : validate_series(m.markers[j].taylor).violations) {
            r.fail(v.code, marker_name(j) + ": " + v.message);
        }
    }
    return r;
}

SemitoricIngredients shift_representative(const SemitoricIngredients& m, long d) {
    SemitoricIngredients out{global_shear(m.polygon, Integer(d)), m.markers};
    for (auto& mk : out.markers) mk.k += d;
    return out;
}

}  // namespace stmetric
