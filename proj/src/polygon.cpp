#include "stmetric/polygon.hpp"

#include <algorithm>
#include <map>

#include "stmetric/errors.hpp"

namespace stmetric {

namespace {

Integer lcm_of(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Integer gcd_of(const Integer& a, const Integer& b) {
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

IntVec2 primitive(const Integer& x, const Integer& y) {
    Integer g = gcd_of(x, y);
    if (g == 0) throw Error(ErrorKind::DegenerateInput, "zero direction vector");
    return {Integer(x / g), Integer(y / g)};
}

/// Primitive integer vector along the rational direction (dx, dy).
IntVec2 primitive(const Rational& dx, const Rational& dy) {
    Integer l = lcm_of(dx.get_den(), dy.get_den());
    Rational sx = dx * l;
    Rational sy = dy * l;
    return primitive(Integer(sx.get_num()), Integer(sy.get_num()));
}

// Counterclockwise angular order of direction vectors, starting at angle 0.
bool angle_less(const IntVec2& p, const IntVec2& q) {
    auto half = [](const IntVec2& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
    int hp = half(p);
    int hq = half(q);
    if (hp != hq) return hp < hq;
    return det(p, q) > 0;
}

struct Facet {
    HalfPlane h;
    Point base;  // a point on the boundary line
    Bound lo;    // parameter range along direction(), nullopt = infinite
    Bound hi;

    Point at(const Rational& t) const {
        IntVec2 d = h.direction();
        return {base.x + t * Rational(d.x), base.y + t * Rational(d.y)};
    }
};

Point base_point(const HalfPlane& h) {
    if (h.b() != 0) return {Rational(0), h.c() / Rational(h.b())};
    return {h.c() / Rational(h.a()), Rational(0)};
}

// Restricts the parameter range of `f` by the constraint `g`. Returns false
// when the line of `f` misses `g` entirely.
bool clip(Facet& f, const HalfPlane& g) {
    IntVec2 d = f.h.direction();
    Integer k = g.a() * d.x + g.b() * d.y;
    Rational rhs = g.c() - g.value(f.base);
    if (k == 0) return rhs >= 0;
    Rational t = rhs / Rational(k);
    if (k > 0) {
        if (!f.hi || t < *f.hi) f.hi = t;
    } else {
        if (!f.lo || t > *f.lo) f.lo = t;
    }
    return true;
}

// Whether the set contains a ray in direction (sx, r) for some real r.
bool recedes_horizontally(const std::vector<HalfPlane>& hs, int sx) {
    Bound lo;
    Bound hi;
    for (const auto& h : hs) {
        Rational ax = Rational(h.a()) * sx;
        if (h.b() == 0) {
            if (ax > 0) return false;
            continue;
        }
        Rational bound = -ax / Rational(h.b());
        if (h.b() > 0) {
            if (!hi || bound < *hi) hi = bound;
        } else {
            if (!lo || bound > *lo) lo = bound;
        }
    }
    return !(lo && hi && *lo > *hi);
}

struct Line {
    Rational slope;
    Rational intercept;
};

Rational sample_in(const Bound& lo, const Bound& hi) {
    if (lo && hi) return (*lo + *hi) / 2;
    if (lo) return *lo + 1;
    if (hi) return *hi - 1;
    return Rational(0);
}

// Lower envelope (upper when `take_max`) of lines restricted to `domain`.
PiecewiseLinearFn envelope(const std::vector<Line>& lines, const XInterval& domain, bool take_max) {
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].slope == lines[j].slope) continue;
            Rational x = (lines[j].intercept - lines[i].intercept) / (lines[i].slope - lines[j].slope);
            if (domain.contains_interior(x)) xs.push_back(x);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<LinearPiece> pieces;
    for (std::size_t cell = 0; cell <= xs.size(); ++cell) {
        Bound lo = cell == 0 ? domain.lo : Bound(xs[cell - 1]);
        Bound hi = cell == xs.size() ? domain.hi : Bound(xs[cell]);
        Rational x = sample_in(lo, hi);
        const Line* best = nullptr;
        Rational best_y;
        for (const auto& l : lines) {
            Rational y = l.slope * x + l.intercept;
            if (!best || (take_max ? y > best_y : y < best_y)) {
                best = &l;
                best_y = y;
            }
        }
        pieces.push_back({best->slope, best->intercept});
    }
    return PiecewiseLinearFn(domain, std::move(xs), std::move(pieces));
}

std::vector<Line> boundary_lines(const ConvexPolygonalSet& p, int sign) {
    std::vector<Line> out;
    for (const auto& h : p.halfplanes()) {
        if (sgn(h.b()) != sign) continue;
        Rational b(h.b());
        out.push_back({-Rational(h.a()) / b, h.c() / b});
    }
    return out;
}

// x-values where a facet can attain the extreme of the x-support: its
// endpoints, or its whole line when vertical.
std::vector<Rational> facet_xs(const Facet& f) {
    std::vector<Rational> xs;
    if (f.h.b() == 0) {
        xs.push_back(f.h.c() / Rational(f.h.a()));
        return xs;
    }
    for (const auto& t : {f.lo, f.hi}) {
        if (t) xs.push_back(f.at(*t).x);
    }
    return xs;
}

}  // namespace

// --- HalfPlane ----------------------------------------------------------------

HalfPlane::HalfPlane(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0 && b == 0) throw Error(ErrorKind::DegenerateInput, "half-plane with zero normal");
    Integer l = lcm_of(a.get_den(), b.get_den());
    Rational sa = a * l;
    Rational sb = b * l;
    Integer g = gcd_of(sa.get_num(), sb.get_num());
    a_ = sa.get_num() / g;
    b_ = sb.get_num() / g;
    c_ = c * Rational(l) / Rational(g);
}

HalfPlane HalfPlane::transformed(const Integer& k) const {
    // a x + b y <= c with y = y' - k x gives (a - k b) x + b y' <= c.
    return HalfPlane(Rational(a_ - k * b_), Rational(b_), c_);
}

const char* corner_type_name(CornerType type) {
    switch (type) {
        case CornerType::Delzant: return "Delzant";
        case CornerType::HiddenDelzant: return "hidden Delzant";
        case CornerType::Fake: return "fake";
        case CornerType::NonDelzant: return "non-Delzant";
    }
    return "unknown";
}

// --- construction -------------------------------------------------------------

ConvexPolygonalSet polygon_from_halfplanes(std::span<const HalfPlane> hs) {
    ConvexPolygonalSet out;
    if (hs.empty()) throw Error(ErrorKind::DegenerateInput, "no half-planes given");

    std::map<std::pair<Integer, Integer>, Rational> tightest;
    for (const auto& h : hs) {
        auto key = std::make_pair(h.a(), h.b());
        auto it = tightest.find(key);
        if (it == tightest.end() || h.c() < it->second) tightest[key] = h.c();
    }
    for (const auto& [key, c] : tightest) {
        auto opp = tightest.find({Integer(-key.first), Integer(-key.second)});
        if (opp != tightest.end() && c + opp->second <= 0) return out;
    }
    std::vector<HalfPlane> unique;
    for (const auto& [key, c] : tightest) unique.emplace_back(Rational(key.first), Rational(key.second), c);

    std::vector<Facet> facets;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        Facet f{unique[i], base_point(unique[i]), std::nullopt, std::nullopt};
        bool alive = true;
        for (std::size_t j = 0; j < unique.size() && alive; ++j) {
            if (j != i) alive = clip(f, unique[j]);
        }
        if (alive && !(f.lo && f.hi && *f.lo >= *f.hi)) facets.push_back(std::move(f));
    }
    if (facets.empty()) return out;

    std::sort(facets.begin(), facets.end(),
              [](const Facet& p, const Facet& q) { return angle_less(p.h.direction(), q.h.direction()); });
    auto first = std::find_if(facets.begin(), facets.end(), [](const Facet& f) { return !f.lo; });
    bool bounded = first == facets.end();
    if (!bounded) std::rotate(facets.begin(), first, facets.end());

    out.empty_ = false;
    out.compact_ = bounded;
    for (const auto& f : facets) out.halfplanes_.push_back(f.h);

    std::size_t n = facets.size();
    std::size_t count = bounded ? n : n - 1;
    for (std::size_t i = 0; i < count; ++i) {
        const Facet& in = facets[i];
        const Facet& next = facets[(i + 1) % n];
        if (!in.hi) continue;
        IntVec2 d_in = in.h.direction();
        out.vertices_.push_back({in.at(*in.hi), next.h.direction(), {-d_in.x, -d_in.y}});
    }

    if (!recedes_horizontally(out.halfplanes_, -1)) {
        Rational lo;
        bool first_value = true;
        for (const auto& f : facets) {
            for (const Rational& x : facet_xs(f)) {
                if (first_value || x < lo) lo = x;
                first_value = false;
            }
        }
        out.support_.lo = lo;
    }
    if (!recedes_horizontally(out.halfplanes_, 1)) {
        Rational hi;
        bool first_value = true;
        for (const auto& f : facets) {
            for (const Rational& x : facet_xs(f)) {
                if (first_value || x > hi) hi = x;
                first_value = false;
            }
        }
        out.support_.hi = hi;
    }
    return out;
}

ConvexPolygonalSet polygon_from_vertices(std::span<const Point> points) {
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
        return p.x < q.x || (p.x == q.x && p.y < q.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw Error(ErrorKind::DegenerateInput, "fewer than three distinct vertices");

    auto cross = [](const Point& o, const Point& a, const Point& b) {
        return Rational((a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x));
    };
    std::vector<Point> hull;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t start = hull.size();
        for (const auto& p : pts) {
            while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    if (hull.size() < 3) throw Error(ErrorKind::DegenerateInput, "vertices are collinear");

    std::vector<HalfPlane> hs;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point& p = hull[i];
        const Point& q = hull[(i + 1) % hull.size()];
        Rational a = q.y - p.y;
        Rational b = p.x - q.x;
        hs.emplace_back(a, b, a * p.x + b * p.y);
    }
    return polygon_from_halfplanes(hs);
}

// --- queries ------------------------------------------------------------------

bool has_everywhere_finite_height(const ConvexPolygonalSet& p) {
    if (p.is_empty()) return true;
    bool up = false;
    bool down = false;
    for (const auto& h : p.halfplanes()) {
        if (h.b() > 0) up = true;
        if (h.b() < 0) down = true;
    }
    return up && down;
}

std::optional<std::pair<Rational, Rational>> slice_interval(const ConvexPolygonalSet& p, const Rational& x) {
    if (p.is_empty() || !p.x_support().contains(x)) return std::nullopt;
    Bound lo;
    Bound hi;
    for (const auto& h : p.halfplanes()) {
        if (h.b() == 0) continue;
        Rational y = (h.c() - Rational(h.a()) * x) / Rational(h.b());
        if (h.b() > 0) {
            if (!hi || y < *hi) hi = y;
        } else {
            if (!lo || y > *lo) lo = y;
        }
    }
    if (!lo || !hi) throw Error(ErrorKind::InfiniteHeight, "slice at x = " + to_string(x) + " is unbounded");
    return std::make_pair(*lo, *hi);
}

VerticalRegion to_vertical_region(const ConvexPolygonalSet& p) {
    if (p.is_empty()) return VerticalRegion::empty();
    if (!has_everywhere_finite_height(p)) {
        throw Error(ErrorKind::InfiniteHeight, "polygonal set has unbounded vertical slices");
    }
    const XInterval& dom = p.x_support();
    return VerticalRegion(envelope(boundary_lines(p, -1), dom, true), envelope(boundary_lines(p, 1), dom, false));
}

VerticalRegion vertical_shear(const VerticalRegion& r, const Rational& lambda, const Integer& k) {
    return r.sheared(lambda, k);
}

ConvexPolygonalSet global_shear(const ConvexPolygonalSet& p, const Integer& k) {
    if (p.is_empty()) return p;
    std::vector<HalfPlane> hs;
    for (const auto& h : p.halfplanes()) hs.push_back(h.transformed(k));
    return polygon_from_halfplanes(hs);
}

CornerType classify_corner(const IntVec2& u, const IntVec2& v, bool on_top_boundary) {
    Integer d = det(u, v);
    if (d <= 0) throw Error(ErrorKind::Orientation, "corner vectors must satisfy det(u, v) > 0");
    Integer dt = det(u, IntVec2{v.x, v.x + v.y});
    if (on_top_boundary && dt == 0) return CornerType::Fake;
    if (d == 1) return CornerType::Delzant;
    if (on_top_boundary && dt == 1) return CornerType::HiddenDelzant;
    return CornerType::NonDelzant;
}

bool on_top_boundary(const ConvexPolygonalSet& polygon, const Point& p) {
    if (polygon.is_empty() || !polygon.x_support().contains(p.x)) return false;
    bool any_upper = false;
    for (const auto& h : polygon.halfplanes()) {
        if (!h.contains(p)) return false;
        if (h.b() > 0 && h.value(p) == h.c()) any_upper = true;
    }
    return any_upper;
}

std::vector<CornerInfo> classify_corners(const ConvexPolygonalSet& p) {
    std::vector<CornerInfo> out;
    for (const auto& v : p.vertices()) {
        bool top = on_top_boundary(p, v.point);
        out.push_back({v, top, classify_corner(v.u, v.v, top)});
    }
    return out;
}

std::pair<IntVec2, IntVec2> top_boundary_directions(const VerticalRegion& r, const Rational& x) {
    if (r.is_empty() || !r.domain().contains_interior(x)) {
        throw Error(ErrorKind::DegenerateInput, "x = " + to_string(x) + " is not inside the region");
    }
    const Rational& left = r.top().piece_left_of(x).slope;
    const Rational& right = r.top().piece_right_of(x).slope;
    return {primitive(Rational(-1), Rational(-left)), primitive(Rational(1), right)};
}

}  // namespace stmetric
