#include "stmetric/region.hpp"

#include <algorithm>

#include "stmetric/errors.hpp"

namespace stmetric {

// --- PiecewiseLinearFn --------------------------------------------------------

PiecewiseLinearFn::PiecewiseLinearFn(XInterval domain, LinearPiece single)
    : domain_(std::move(domain)), pieces_{std::move(single)} {}

PiecewiseLinearFn::PiecewiseLinearFn(XInterval domain, std::vector<Rational> breakpoints,
                                     std::vector<LinearPiece> pieces)
    : domain_(std::move(domain)), breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (pieces_.size() != breakpoints_.size() + 1) {
        throw Error(ErrorKind::DegenerateInput, "piece count must be breakpoint count + 1");
    }
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        const Rational& b = breakpoints_[i];
        if (i > 0 && !(breakpoints_[i - 1] < b)) {
            throw Error(ErrorKind::DegenerateInput, "breakpoints must be strictly increasing");
        }
        if (!domain_.contains_interior(b)) {
            throw Error(ErrorKind::DegenerateInput, "breakpoint " + to_string(b) + " outside the open domain");
        }
        if (pieces_[i](b) != pieces_[i + 1](b)) {
            throw Error(ErrorKind::DegenerateInput, "discontinuity at x = " + to_string(b));
        }
    }
    merge_collinear();
}

void PiecewiseLinearFn::merge_collinear() {
    std::vector<Rational> breaks;
    std::vector<LinearPiece> pieces{pieces_.front()};
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (pieces_[i + 1] == pieces.back()) continue;
        breaks.push_back(breakpoints_[i]);
        pieces.push_back(pieces_[i + 1]);
    }
    breakpoints_ = std::move(breaks);
    pieces_ = std::move(pieces);
}

const LinearPiece& PiecewiseLinearFn::piece_left_of(const Rational& x) const {
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    return pieces_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

const LinearPiece& PiecewiseLinearFn::piece_right_of(const Rational& x) const {
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    return pieces_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

Rational PiecewiseLinearFn::operator()(const Rational& x) const { return piece_right_of(x)(x); }

PiecewiseLinearFn PiecewiseLinearFn::plus_linear(const Rational& slope, const Rational& intercept) const {
    std::vector<LinearPiece> pieces = pieces_;
    for (auto& p : pieces) {
        p.slope += slope;
        p.intercept += intercept;
    }
    return PiecewiseLinearFn(domain_, breakpoints_, std::move(pieces));
}

PiecewiseLinearFn PiecewiseLinearFn::plus_hinge(const Rational& lambda, const Rational& k) const {
    if (k == 0) return *this;
    if (domain_.hi && lambda >= *domain_.hi) return *this;
    if (domain_.lo && lambda <= *domain_.lo) return plus_linear(k, -k * lambda);

    std::vector<Rational> breaks = breakpoints_;
    if (!std::binary_search(breaks.begin(), breaks.end(), lambda)) {
        breaks.insert(std::upper_bound(breaks.begin(), breaks.end(), lambda), lambda);
    }
    std::vector<LinearPiece> pieces;
    pieces.reserve(breaks.size() + 1);
    for (std::size_t i = 0; i <= breaks.size(); ++i) {
        LinearPiece p = (i == 0) ? pieces_.front() : piece_right_of(breaks[i - 1]);
        if (i > 0 && breaks[i - 1] >= lambda) {
            p.slope += k;
            p.intercept -= k * lambda;
        }
        pieces.push_back(std::move(p));
    }
    return PiecewiseLinearFn(domain_, std::move(breaks), std::move(pieces));
}

bool PiecewiseLinearFn::is_concave() const {
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
        if (pieces_[i + 1].slope > pieces_[i].slope) return false;
    }
    return true;
}

bool PiecewiseLinearFn::is_convex() const {
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
        if (pieces_[i + 1].slope < pieces_[i].slope) return false;
    }
    return true;
}

// --- VerticalRegion -----------------------------------------------------------

VerticalRegion VerticalRegion::empty() { return VerticalRegion(); }

VerticalRegion::VerticalRegion(PiecewiseLinearFn bottom, PiecewiseLinearFn top) {
    if (!(bottom.domain() == top.domain())) {
        throw Error(ErrorKind::DegenerateInput, "bottom and top must share a domain");
    }
    const XInterval& dom = bottom.domain();
    if (dom.degenerate()) return;

    std::vector<Rational> points = bottom.breakpoints();
    points.insert(points.end(), top.breakpoints().begin(), top.breakpoints().end());
    if (dom.lo) points.push_back(*dom.lo);
    if (dom.hi) points.push_back(*dom.hi);
    if (points.empty()) points.push_back(Rational(0));
    for (const auto& x : points) {
        if (bottom(x) > top(x)) {
            throw Error(ErrorKind::DegenerateInput, "bottom exceeds top at x = " + to_string(x));
        }
    }
    // On an infinite end the height is linear; it must not shrink towards the end.
    if (!dom.hi && top.pieces().back().slope < bottom.pieces().back().slope) {
        throw Error(ErrorKind::DegenerateInput, "bottom crosses top towards +inf");
    }
    if (!dom.lo && top.pieces().front().slope > bottom.pieces().front().slope) {
        throw Error(ErrorKind::DegenerateInput, "bottom crosses top towards -inf");
    }
    bounds_.emplace(std::move(bottom), std::move(top));
}

const XInterval& VerticalRegion::domain() const {
    if (!bounds_) throw Error(ErrorKind::DegenerateInput, "empty region has no domain");
    return bounds_->first.domain();
}

const PiecewiseLinearFn& VerticalRegion::bottom() const {
    if (!bounds_) throw Error(ErrorKind::DegenerateInput, "empty region has no boundary");
    return bounds_->first;
}

const PiecewiseLinearFn& VerticalRegion::top() const {
    if (!bounds_) throw Error(ErrorKind::DegenerateInput, "empty region has no boundary");
    return bounds_->second;
}

std::vector<Rational> VerticalRegion::breakpoints() const {
    if (!bounds_) return {};
    std::vector<Rational> out;
    std::merge(bottom().breakpoints().begin(), bottom().breakpoints().end(), top().breakpoints().begin(),
               top().breakpoints().end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::pair<Rational, Rational>> VerticalRegion::slice(const Rational& x) const {
    if (!bounds_ || !domain().contains(x)) return std::nullopt;
    return std::make_pair(bottom()(x), top()(x));
}

VerticalRegion VerticalRegion::sheared(const Rational& lambda, const Integer& k) const {
    if (!bounds_) return *this;
    Rational kq(k);
    return VerticalRegion(bottom().plus_hinge(lambda, kq), top().plus_hinge(lambda, kq));
}

VerticalRegion VerticalRegion::transformed(const Integer& k) const {
    if (!bounds_) return *this;
    Rational kq(k);
    return VerticalRegion(bottom().plus_linear(kq, 0), top().plus_linear(kq, 0));
}

VerticalRegion VerticalRegion::translated(const Rational& dy) const {
    if (!bounds_) return *this;
    return VerticalRegion(bottom().plus_linear(0, dy), top().plus_linear(0, dy));
}

bool VerticalRegion::is_convex() const {
    if (!bounds_) return true;
    return top().is_concave() && bottom().is_convex();
}

}  // namespace stmetric
