#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "stmetric/rational.hpp"
#include "stmetric/region.hpp"

namespace stmetric {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

struct IntVec2 {
    Integer x;
    Integer y;

    friend bool operator==(const IntVec2&, const IntVec2&) = default;
};

inline Integer det(const IntVec2& u, const IntVec2& v) { return u.x * v.y - u.y * v.x; }

/// The constraint a*x + b*y <= c, stored with (a, b) coprime integers. The
/// scaling used to get there is always positive, so the half-plane itself
/// never changes.
class HalfPlane {
public:
    HalfPlane(const Rational& a, const Rational& b, const Rational& c);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Rational& c() const { return c_; }

    Rational value(const Point& p) const { return Rational(a_) * p.x + Rational(b_) * p.y; }
    bool contains(const Point& p) const { return value(p) <= c_; }

    /// Primitive direction of the boundary line, oriented so the half-plane is on its left.
    IntVec2 direction() const { return {-b_, a_}; }

    /// Image of the half-plane under (x, y) -> (x, k x + y).
    HalfPlane transformed(const Integer& k) const;

    friend bool operator==(const HalfPlane&, const HalfPlane&) = default;

private:
    Integer a_;
    Integer b_;
    Rational c_;
};

enum class CornerType { Delzant, HiddenDelzant, Fake, NonDelzant };

const char* corner_type_name(CornerType type);

/// A vertex together with the primitive vectors along its two edges. `u`
/// follows the outgoing edge of the counterclockwise boundary and `v` points
/// back along the incoming one, so det(u, v) > 0. On the top boundary `u`
/// points left and `v` points right.
struct Vertex {
    Point point;
    IntVec2 u;
    IntVec2 v;
};

/// Nonempty-interior intersection of finitely many closed rational
/// half-planes, or the flagged empty set (which also stands for every
/// degenerate intersection: points, segments, lines).
class ConvexPolygonalSet {
public:
    static ConvexPolygonalSet empty_set() { return ConvexPolygonalSet(); }

    bool is_empty() const { return empty_; }
    bool is_compact() const { return compact_; }

    /// Non-redundant constraints in counterclockwise edge order. For unbounded
    /// sets the order starts at the edge that comes in from infinity.
    const std::vector<HalfPlane>& halfplanes() const { return halfplanes_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const XInterval& x_support() const { return support_; }

    friend bool operator==(const ConvexPolygonalSet& a, const ConvexPolygonalSet& b) {
        return a.empty_ == b.empty_ && a.halfplanes_ == b.halfplanes_;
    }

private:
    ConvexPolygonalSet() = default;
    friend ConvexPolygonalSet polygon_from_halfplanes(std::span<const HalfPlane> hs);

    bool empty_ = true;
    bool compact_ = false;
    std::vector<HalfPlane> halfplanes_;
    std::vector<Vertex> vertices_;
    XInterval support_;
};

ConvexPolygonalSet polygon_from_halfplanes(std::span<const HalfPlane> hs);

/// Convex hull of at least three points. Throws DegenerateInput when they are collinear.
ConvexPolygonalSet polygon_from_vertices(std::span<const Point> points);

/// P intersected with the line x = const. nullopt when that slice is empty;
/// throws InfiniteHeight when it is unbounded.
std::optional<std::pair<Rational, Rational>> slice_interval(const ConvexPolygonalSet& p, const Rational& x);

bool has_everywhere_finite_height(const ConvexPolygonalSet& p);

/// Throws InfiniteHeight unless every vertical slice is compact or empty.
VerticalRegion to_vertical_region(const ConvexPolygonalSet& p);

/// Identity left of x = lambda, (x, y) -> (x, y + k (x - lambda)) to the right.
VerticalRegion vertical_shear(const VerticalRegion& r, const Rational& lambda, const Integer& k);

/// Image of P under T^k : (x, y) -> (x, k x + y).
ConvexPolygonalSet global_shear(const ConvexPolygonalSet& p, const Integer& k);

/// Fake when on the top boundary with det(u, T v) = 0, otherwise Delzant when
/// det(u, v) = 1, otherwise hidden Delzant when on the top boundary with
/// det(u, T v) = 1. Throws Orientation unless det(u, v) > 0.
CornerType classify_corner(const IntVec2& u, const IntVec2& v, bool on_top_boundary);

/// True when p is the upper end of its vertical slice.
bool on_top_boundary(const ConvexPolygonalSet& polygon, const Point& p);

struct CornerInfo {
    Vertex vertex;
    bool on_top_boundary;
    CornerType type;
};

std::vector<CornerInfo> classify_corners(const ConvexPolygonalSet& p);

/// Primitive vectors leaving the top-boundary point above x: u heads left,
/// v heads right. x must lie in the open x-support of the region.
std::pair<IntVec2, IntVec2> top_boundary_directions(const VerticalRegion& r, const Rational& x);

}  // namespace stmetric
