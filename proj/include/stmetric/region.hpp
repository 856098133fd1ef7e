#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "stmetric/rational.hpp"

namespace stmetric {

/// y = slope * x + intercept
struct LinearPiece {
    Rational slope;
    Rational intercept;

    Rational operator()(const Rational& x) const { return slope * x + intercept; }
    friend bool operator==(const LinearPiece&, const LinearPiece&) = default;
};

/// Continuous piecewise-linear function on an x-interval whose ends may be
/// infinite. Pieces are kept maximal: adjacent collinear pieces are merged.
class PiecewiseLinearFn {
public:
    PiecewiseLinearFn(XInterval domain, LinearPiece single);
    PiecewiseLinearFn(XInterval domain, std::vector<Rational> breakpoints, std::vector<LinearPiece> pieces);

    const XInterval& domain() const { return domain_; }
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<LinearPiece>& pieces() const { return pieces_; }

    Rational operator()(const Rational& x) const;

    /// Piece in effect immediately left / right of x.
    const LinearPiece& piece_left_of(const Rational& x) const;
    const LinearPiece& piece_right_of(const Rational& x) const;

    /// Adds k * max(0, x - lambda).
    PiecewiseLinearFn plus_hinge(const Rational& lambda, const Rational& k) const;
    /// Adds slope * x + intercept.
    PiecewiseLinearFn plus_linear(const Rational& slope, const Rational& intercept) const;

    bool is_concave() const;
    bool is_convex() const;

    friend bool operator==(const PiecewiseLinearFn&, const PiecewiseLinearFn&) = default;

private:
    void merge_collinear();

    XInterval domain_;
    std::vector<Rational> breakpoints_;
    std::vector<LinearPiece> pieces_;
};

/// Region { (x, y) : x in domain, bottom(x) <= y <= top(x) }. Every vertical
/// slice is a compact interval, so this is the shape every admissible measure
/// integrates over. Regions whose domain is a point are stored as empty.
class VerticalRegion {
public:
    static VerticalRegion empty();
    VerticalRegion(PiecewiseLinearFn bottom, PiecewiseLinearFn top);

    bool is_empty() const { return !bounds_.has_value(); }
    const XInterval& domain() const;
    const PiecewiseLinearFn& bottom() const;
    const PiecewiseLinearFn& top() const;

    /// Union of the bottom and top breakpoints, sorted.
    std::vector<Rational> breakpoints() const;

    /// [bottom(x), top(x)] or nullopt when x lies outside the domain.
    std::optional<std::pair<Rational, Rational>> slice(const Rational& x) const;

    /// The cut shear: identity for x <= lambda, (x, y + k (x - lambda)) beyond.
    VerticalRegion sheared(const Rational& lambda, const Integer& k) const;
    /// Image under (x, y) -> (x, k x + y).
    VerticalRegion transformed(const Integer& k) const;
    VerticalRegion translated(const Rational& dy) const;

    bool is_convex() const;

    friend bool operator==(const VerticalRegion&, const VerticalRegion&) = default;

private:
    VerticalRegion() = default;

    std::optional<std::pair<PiecewiseLinearFn, PiecewiseLinearFn>> bounds_;
};

}  // namespace stmetric
