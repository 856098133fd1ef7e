#pragma once

#include <optional>
#include <string>

#include "stmetric/polygon.hpp"
#include "stmetric/rational.hpp"
#include "stmetric/region.hpp"
#include "stmetric/validation.hpp"

namespace stmetric {

/// A measure value: exact, infinite, or a float with an absolute error bound.
class MeasureValue {
public:
    enum class Kind { Exact, Infinite, Approx };

    static MeasureValue exact(Rational q);
    static MeasureValue infinite();
    static MeasureValue approx(double value, double error);

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }

    /// Throws unless the value is exact.
    const Rational& rational() const;
    /// Nearest double; +inf for infinite values.
    double value() const;
    double error() const { return error_; }

    MeasureValue& operator+=(const MeasureValue& other);
    friend MeasureValue operator+(MeasureValue a, const MeasureValue& b) { return a += b; }

    std::string to_string() const;

private:
    Kind kind_ = Kind::Exact;
    Rational exact_;
    double approx_ = 0.0;
    double error_ = 0.0;
};

/// Parsed measure description, before admissibility is checked.
struct MeasureSpec {
    std::string type;           ///< "nu0", "power_tail" or "rational_decay"
    std::optional<Rational> s;  ///< tail exponent, power_tail only
};

ValidationReport validate_admissible(const MeasureSpec& spec);

/// Measure with density g(x) in x, Lebesgue in y. g = 1 on |x| < 1 for the
/// power-tail families.
class AdmissibleMeasure {
public:
    enum class Family { PowerTail, RationalDecay };

    /// g = 1 on |x| < 1 and |x|^-3 outside.
    static AdmissibleMeasure nu0();
    /// g = 1 on |x| < 1 and |x|^-s outside. Throws InvalidMeasure unless s > 2.
    static AdmissibleMeasure power_tail(const Rational& s);
    /// g = 1 / ((1 + x^2)(1 + |x|)).
    static AdmissibleMeasure rational_decay();
    /// Throws InvalidMeasure with the failed conditions when the spec is rejected.
    static AdmissibleMeasure from_spec(const MeasureSpec& spec);

    Family family() const { return family_; }
    const Rational& exponent() const { return s_; }
    MeasureSpec spec() const;
    std::string name() const;

    double density(double x) const;

    /// Integral of g(x) (slope x + intercept) over [lo, hi].
    MeasureValue integrate_linear(const Bound& lo, const Bound& hi, const Rational& slope,
                                  const Rational& intercept) const;

    friend bool operator==(const AdmissibleMeasure&, const AdmissibleMeasure&) = default;

private:
    AdmissibleMeasure(Family f, Rational s) : family_(f), s_(std::move(s)) {}

    MeasureValue integrate_power_tail(const Bound& lo, const Bound& hi, const Rational& slope,
                                      const Rational& intercept) const;
    MeasureValue integrate_rational_decay(const Bound& lo, const Bound& hi, const Rational& slope,
                                          const Rational& intercept) const;

    Family family_;
    Rational s_;
};

MeasureValue measure_region(const AdmissibleMeasure& nu, const VerticalRegion& r);

/// Infinite exactly when p has an unbounded vertical slice.
MeasureValue measure_polygon(const AdmissibleMeasure& nu, const ConvexPolygonalSet& p);

MeasureValue symmetric_difference_measure(const AdmissibleMeasure& nu, const VerticalRegion& r1,
                                          const VerticalRegion& r2);

/// Plain area. Infinite when a piece of positive height runs off to infinity.
MeasureValue lebesgue_area(const VerticalRegion& r);

}  // namespace stmetric
