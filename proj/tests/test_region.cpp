#include <gtest/gtest.h>

#include "stmetric/errors.hpp"
#include "stmetric/region.hpp"

using namespace stmetric;

namespace {

XInterval interval(long lo, long hi) { return {Rational(lo), Rational(hi)}; }

PiecewiseLinearFn constant(const XInterval& d, long c) { return PiecewiseLinearFn(d, LinearPiece{0, c}); }

}  // namespace

TEST(PiecewiseLinear, EvaluatesAndMergesCollinearPieces) {
    PiecewiseLinearFn f(interval(0, 4), {Rational(1), Rational(2)},
                        {LinearPiece{1, 0}, LinearPiece{1, 0}, LinearPiece{-1, 4}});
    EXPECT_EQ(f.breakpoints().size(), 1u);
    EXPECT_EQ(f(Rational(2)), 2);
    EXPECT_EQ(f(Rational(3)), 1);
    EXPECT_EQ(f.piece_left_of(Rational(2)).slope, 1);
    EXPECT_EQ(f.piece_right_of(Rational(2)).slope, -1);
    EXPECT_TRUE(f.is_concave());
    EXPECT_FALSE(f.is_convex());
}

TEST(PiecewiseLinear, RejectsDiscontinuity) {
    EXPECT_THROW(PiecewiseLinearFn(interval(0, 2), {Rational(1)}, {LinearPiece{0, 0}, LinearPiece{0, 1}}), Error);
}

TEST(PiecewiseLinear, RejectsBreakpointOnBoundary) {
    EXPECT_THROW(PiecewiseLinearFn(interval(0, 2), {Rational(2)}, {LinearPiece{0, 0}, LinearPiece{0, 0}}), Error);
}

TEST(PiecewiseLinear, HingeAddsSlopeRightOfLambda) {
    PiecewiseLinearFn f = constant(interval(0, 2), 2).plus_hinge(Rational(1), Rational(1));
    EXPECT_EQ(f(Rational(0)), 2);
    EXPECT_EQ(f(Rational(1)), 2);
    EXPECT_EQ(f(Rational(2)), 3);
    ASSERT_EQ(f.breakpoints().size(), 1u);
    EXPECT_EQ(f.breakpoints()[0], 1);
}

TEST(PiecewiseLinear, HingeOutsideDomain) {
    PiecewiseLinearFn f = constant(interval(0, 2), 2);
    EXPECT_EQ(f.plus_hinge(Rational(5), Rational(3)), f);
    PiecewiseLinearFn g = f.plus_hinge(Rational(-1), Rational(1));
    EXPECT_EQ(g(Rational(0)), 3);
    EXPECT_TRUE(g.breakpoints().empty());
}

TEST(VerticalRegion, SliceAndShear) {
    XInterval d = interval(0, 2);
    VerticalRegion sq(constant(d, 0), constant(d, 2));
    auto s = sq.slice(Rational(1));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->first, 0);
    EXPECT_EQ(s->second, 2);
    EXPECT_FALSE(sq.slice(Rational(3)));

    VerticalRegion sheared = sq.sheared(Rational(1), Integer(1));
    EXPECT_EQ(sheared.top()(Rational(2)), 3);
    EXPECT_EQ(sheared.bottom()(Rational(2)), 1);
    EXPECT_EQ(sheared.top()(Rational(1, 2)), 2);
    EXPECT_TRUE(sq.is_convex());
    EXPECT_FALSE(sheared.is_convex());  // bottom stays convex, top gains a convex kink
}

TEST(VerticalRegion, RejectsCrossingBoundaries) {
    XInterval d = interval(0, 2);
    EXPECT_THROW(VerticalRegion(constant(d, 1), constant(d, 0)), Error);
    XInterval ray{Rational(0), std::nullopt};
    EXPECT_THROW(VerticalRegion(PiecewiseLinearFn(ray, LinearPiece{1, 0}), PiecewiseLinearFn(ray, LinearPiece{0, 1})),
                 Error);
}

TEST(VerticalRegion, DegenerateDomainIsEmpty) {
    XInterval point = interval(1, 1);
    VerticalRegion r(constant(point, 0), constant(point, 1));
    EXPECT_TRUE(r.is_empty());
    EXPECT_TRUE(r.breakpoints().empty());
    EXPECT_THROW(r.domain(), Error);
}

TEST(VerticalRegion, TransformsCommute) {
    XInterval d = interval(-1, 3);
    VerticalRegion r(constant(d, 0), PiecewiseLinearFn(d, {Rational(1)}, {LinearPiece{1, 1}, LinearPiece{-1, 3}}));
    VerticalRegion a = r.sheared(Rational(0), Integer(2)).transformed(Integer(-1)).sheared(Rational(2), Integer(1));
    VerticalRegion b = r.sheared(Rational(2), Integer(1)).sheared(Rational(0), Integer(2)).transformed(Integer(-1));
    EXPECT_EQ(a, b);
    EXPECT_EQ(r.translated(Rational(5)).top()(Rational(1)), 7);
}
