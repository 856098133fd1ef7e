#pragma once

// Hand-built ingredient lists shared by the unit tests and the acceptance run.

#include <vector>

#include "stmetric/completion.hpp"
#include "stmetric/invariants.hpp"
#include "stmetric/polygon.hpp"

namespace stmetric::testing {

inline Point pt(const Rational& x, const Rational& y) { return {x, y}; }

inline ConvexPolygonalSet hull(std::vector<Point> pts) { return polygon_from_vertices(pts); }

inline TaylorSeries2 series(double sigma01, std::vector<std::tuple<int, int, double>> terms = {}) {
    TaylorSeries2 s;
    s.set(0, 1, sigma01);
    for (auto [i, j, v] : terms) s.set(i, j, v);
    return s;
}

inline Marker marker(Lambda lambda, long k, double h, TaylorSeries2 taylor = {}) {
    return Marker{std::move(lambda), 1, k, h, std::move(taylor)};
}

inline ConvexPolygonalSet lattice_square(long side) {
    return hull({pt(0, 0), pt(side, 0), pt(side, side), pt(0, side)});
}

/// Fake corner at (1, 2) with edges (-1, 0), (1, -1).
inline ConvexPolygonalSet fake_corner_polygon() { return hull({pt(0, 0), pt(3, 0), pt(1, 2), pt(0, 2)}); }

/// Same outline but the top point above x = 1 is smooth.
inline ConvexPolygonalSet smooth_top_polygon() { return hull({pt(0, 0), pt(3, 0), pt(0, 3)}); }

/// Hidden Delzant corner at (1, 3) with edges (-1, 0), (1, -2).
inline ConvexPolygonalSet hidden_corner_polygon() { return hull({pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 3), pt(0, 3)}); }

/// Fake corners at (1, 4) and (2, 3).
inline ConvexPolygonalSet double_fake_polygon() {
    return hull({pt(0, 0), pt(3, 0), pt(3, 1), pt(2, 3), pt(1, 4), pt(0, 4)});
}

inline SemitoricIngredients fake_fixture(double h = 1.0, long k = 0) {
    return {fake_corner_polygon(), {marker(Rational(1), k, h, series(0.5, {{1, 0, 0.25}}))}};
}

inline SemitoricIngredients double_fake_fixture(std::vector<long> ks = {0, 0}) {
    return {double_fake_polygon(),
            {marker(Rational(1), ks[0], 1.5, series(1.0, {{1, 1, 0.5}})), marker(Rational(2), ks[1], 1.0, series(2.0))}};
}

/// Top y = 0 left of a, slope -1 on [a, b], slope -2 right of b; bottom y = -5;
/// x in [-2, 2]. Fake corners at a and b.
inline ConvexPolygonalSet two_corner_polygon(const Rational& a, const Rational& b) {
    Rational top_b = a - b;
    Rational top_2 = top_b - 2 * (2 - b);
    return hull({pt(-2, -5), pt(2, -5), pt(2, top_2), pt(b, top_b), pt(a, 0), pt(-2, 0)});
}

/// Two markers passing over each other: A sits at 0 throughout, B sits at
/// +delta (right of A) or -delta (left of A). Markers are stored in lambda
/// order, so the labels swap between the two sides.
inline SemitoricIngredients crossing_element(const Rational& delta) {
    Marker a = marker(Rational(0), 0, 1.0, series(1.0));
    Marker b = marker(delta, 0, 3.0, series(2.0, {{1, 0, 0.5}}));
    if (delta > 0) return {two_corner_polygon(Rational(0), delta), {a, b}};
    return {two_corner_polygon(delta, Rational(0)), {b, a}};
}

/// The wedge {x >= 0, 0 <= y <= x}, cut at x <= n when n is given. The marker
/// sits at n, or at +inf for the uncut wedge.
inline GeneralizedIngredients truncation_element(std::optional<long> n, double h_normalized = 0.5) {
    std::vector<HalfPlane> hs{HalfPlane(Rational(0), Rational(-1), Rational(0)), HalfPlane(Rational(-1), Rational(1), Rational(0))};
    Lambda lambda;
    if (n) {
        hs.emplace_back(Rational(1), Rational(0), Rational(*n));
        lambda = Rational(*n);
    }
    return {polygon_from_halfplanes(hs), {marker(lambda, 0, h_normalized, series(1.0))}};
}

/// Two markers collided at the hidden Delzant corner (1, 3).
inline GeneralizedIngredients collided_element() {
    return {hidden_corner_polygon(), {marker(Rational(1), 0, 0.25, series(1.0)), marker(Rational(1), 0, 0.75, series(1.0))}};
}

/// The collided corner cut back by delta: fake corners at 1 - delta and 1 + delta.
inline GeneralizedIngredients corner_cut_element(const Rational& delta) {
    Rational l = 1 - delta, r = 1 + delta;
    ConvexPolygonalSet p = hull({pt(0, 0), pt(2, 0), pt(2, 1), pt(r, 3 - 2 * delta), pt(l, 3), pt(0, 3)});
    return {p, {marker(l, 0, 0.25, series(1.0)), marker(r, 0, 0.75, series(1.0))}};
}

/// The double fake fixture moved up by eps, with h and the Taylor series
/// moved by eps as well.
inline SemitoricIngredients perturbed_fixture(const Rational& eps) {
    SemitoricIngredients m = double_fake_fixture();
    std::vector<HalfPlane> hs;
    for (const auto& h : m.polygon.halfplanes()) hs.emplace_back(Rational(h.a()), Rational(h.b()), h.c() + Rational(h.b()) * eps);
    m.polygon = polygon_from_halfplanes(hs);
    double e = to_double(eps);
    for (auto& mk : m.markers) {
        mk.h += e;
        mk.taylor.set(0, 1, mk.taylor.coeff(0, 1) + e);
        mk.taylor.set(2, 0, mk.taylor.coeff(2, 0) + e);
    }
    return m;
}

}  // namespace stmetric::testing
