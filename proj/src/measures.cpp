#include "stmetric/measures.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>

#include "stmetric/errors.hpp"

namespace stmetric {

namespace {

struct Cell {
    Bound lo;
    Bound hi;
};

Rational sample_in(const Cell& c) {
    if (c.lo && c.hi) return (*c.lo + *c.hi) / 2;
    if (c.lo) return *c.lo + 1;
    if (c.hi) return *c.hi - 1;
    return Rational(0);
}

// Splits `dom` at the given cut points (ignoring those not strictly inside).
std::vector<Cell> split(const XInterval& dom, std::vector<Rational> cuts) {
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Cell> out;
    Bound lo = dom.lo;
    for (const auto& c : cuts) {
        if (!dom.contains_interior(c)) continue;
        out.push_back({lo, c});
        lo = c;
    }
    out.push_back({lo, dom.hi});
    return out;
}

LinearPiece minus(const LinearPiece& p, const LinearPiece& q) {
    return {p.slope - q.slope, p.intercept - q.intercept};
}

LinearPiece plus(const LinearPiece& p, const LinearPiece& q) {
    return {p.slope + q.slope, p.intercept + q.intercept};
}

// q^n for an integer exponent of either sign; q must be nonzero when n < 0.
Rational power(const Rational& q, long n) {
    Integer num;
    Integer den;
    unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
    Rational out = n < 0 ? Rational(den, num) : Rational(num, den);
    out.canonicalize();
    return out;
}

// Antiderivatives on x >= 0 of g and x g for g = 1/((1+x^2)(1+x)).
double log1p_square(double x) {
    if (x > 1e8) return 2.0 * std::log(x) + std::log1p(1.0 / (x * x));
    return std::log1p(x * x);
}

double decay_g0(double x) { return 0.5 * std::log1p(x) - 0.25 * log1p_square(x) + 0.5 * std::atan(x); }
double decay_g1(double x) { return -0.5 * std::log1p(x) + 0.25 * log1p_square(x) + 0.5 * std::atan(x); }

}  // namespace

// --- MeasureValue -------------------------------------------------------------

MeasureValue MeasureValue::exact(Rational q) {
    MeasureValue v;
    v.kind_ = Kind::Exact;
    v.exact_ = std::move(q);
    return v;
}

MeasureValue MeasureValue::infinite() {
    MeasureValue v;
    v.kind_ = Kind::Infinite;
    return v;
}

MeasureValue MeasureValue::approx(double value, double error) {
    MeasureValue v;
    v.kind_ = Kind::Approx;
    v.approx_ = value;
    v.error_ = error;
    return v;
}

const Rational& MeasureValue::rational() const {
    if (kind_ != Kind::Exact) throw Error(ErrorKind::InvalidMeasure, "measure value is not exact");
    return exact_;
}

double MeasureValue::value() const {
    switch (kind_) {
        case Kind::Exact: return to_double(exact_);
        case Kind::Infinite: return HUGE_VAL;
        case Kind::Approx: return approx_;
    }
    return 0.0;
}

MeasureValue& MeasureValue::operator+=(const MeasureValue& other) {
    if (kind_ == Kind::Infinite || other.kind_ == Kind::Infinite) {
        *this = infinite();
    } else if (kind_ == Kind::Exact && other.kind_ == Kind::Exact) {
        exact_ += other.exact_;
    } else {
        double sum = value() + other.value();
        double err = error_ + other.error_ + DBL_EPSILON * std::abs(sum);
        *this = approx(sum, err);
    }
    return *this;
}

std::string MeasureValue::to_string() const {
    switch (kind_) {
        case Kind::Exact: return stmetric::to_string(exact_);
        case Kind::Infinite: return "inf";
        case Kind::Approx: {
            std::ostringstream os;
            os.precision(17);
            os << approx_ << " +/- " << error_;
            return os.str();
        }
    }
    return "";
}

// --- AdmissibleMeasure --------------------------------------------------------

ValidationReport validate_admissible(const MeasureSpec& spec) {
    ValidationReport r;
    r.check("known measure family");
    if (spec.type == "nu0" || spec.type == "rational_decay") {
        r.check("density positive, bounded and bounded away from 0 on compacts");
        r.check("x g(x) integrable");
        return r;
    }
    if (spec.type != "power_tail") {
        r.fail("unknown_family", "unknown measure type '" + spec.type + "'");
        return r;
    }
    r.check("tail exponent given");
    if (!spec.s) {
        r.fail("missing_exponent", "power_tail needs an exponent s");
        return r;
    }
    r.check("density positive, bounded and bounded away from 0 on compacts");
    r.check("x g(x) integrable (s > 2)");
    if (*spec.s <= 2) {
        r.fail("tail_not_integrable",
               "x |x|^-s is not integrable at infinity for s = " + to_string(*spec.s) + " <= 2");
    }
    return r;
}

AdmissibleMeasure AdmissibleMeasure::nu0() { return AdmissibleMeasure(Family::PowerTail, Rational(3)); }

AdmissibleMeasure AdmissibleMeasure::power_tail(const Rational& s) {
    return from_spec({"power_tail", s});
}

AdmissibleMeasure AdmissibleMeasure::rational_decay() { return AdmissibleMeasure(Family::RationalDecay, Rational(0)); }

AdmissibleMeasure AdmissibleMeasure::from_spec(const MeasureSpec& spec) {
    ValidationReport r = validate_admissible(spec);
    if (!r.ok()) throw Error(ErrorKind::InvalidMeasure, r.violations.front().message);
    if (spec.type == "nu0") return nu0();
    if (spec.type == "rational_decay") return rational_decay();
    return AdmissibleMeasure(Family::PowerTail, *spec.s);
}

MeasureSpec AdmissibleMeasure::spec() const {
    if (family_ == Family::RationalDecay) return {"rational_decay", std::nullopt};
    if (s_ == 3) return {"nu0", std::nullopt};
    return {"power_tail", s_};
}

std::string AdmissibleMeasure::name() const {
    MeasureSpec sp = spec();
    if (sp.s) return sp.type + "(" + to_string(*sp.s) + ")";
    return sp.type;
}

double AdmissibleMeasure::density(double x) const {
    double ax = std::abs(x);
    if (family_ == Family::RationalDecay) return 1.0 / ((1.0 + x * x) * (1.0 + ax));
    if (ax < 1.0) return 1.0;
    return std::pow(ax, -to_double(s_));
}

MeasureValue AdmissibleMeasure::integrate_linear(const Bound& lo, const Bound& hi, const Rational& slope,
                                                 const Rational& intercept) const {
    if (lo && hi && *lo >= *hi) return MeasureValue::exact(0);
    if (family_ == Family::RationalDecay) return integrate_rational_decay(lo, hi, slope, intercept);
    return integrate_power_tail(lo, hi, slope, intercept);
}

MeasureValue AdmissibleMeasure::integrate_power_tail(const Bound& lo, const Bound& hi, const Rational& slope,
                                                     const Rational& intercept) const {
    // On [l, h] with 1 <= l: integral of t^-s (a t + b).
    auto tail = [&](const Rational& l, const Bound& h, const Rational& a, const Rational& b) -> MeasureValue {
        if (is_integer(s_)) {
            long s = s_.get_num().get_si();
            auto F = [&](const Rational& x) {
                return Rational(a * power(x, 2 - s) / (2 - s) + b * power(x, 1 - s) / (1 - s));
            };
            Rational upper = h ? F(*h) : Rational(0);
            return MeasureValue::exact(upper - F(l));
        }
        long double s = to_double(s_);
        long double ad = to_double(a);
        long double bd = to_double(b);
        auto F = [&](long double x) {
            return ad * std::pow(x, 2 - s) / (2 - s) + bd * std::pow(x, 1 - s) / (1 - s);
        };
        long double fl = F(to_double(l));
        long double fh = h ? F(to_double(*h)) : 0.0L;
        double err = 64 * DBL_EPSILON * static_cast<double>(std::abs(fl) + std::abs(fh)) + DBL_MIN;
        return MeasureValue::approx(static_cast<double>(fh - fl), err);
    };

    MeasureValue total = MeasureValue::exact(0);
    for (const Cell& c : split({lo, hi}, {Rational(-1), Rational(1)})) {
        Rational mid = sample_in(c);
        if (mid > 1) {
            total += tail(*c.lo, c.hi, slope, intercept);
        } else if (mid < -1) {
            // x = -t
            Bound h = c.lo ? Bound(Rational(-*c.lo)) : std::nullopt;
            total += tail(Rational(-*c.hi), h, Rational(-slope), intercept);
        } else {
            const Rational& l = *c.lo;
            const Rational& h = *c.hi;
            total += MeasureValue::exact(slope * (h * h - l * l) / 2 + intercept * (h - l));
        }
    }
    return total;
}

MeasureValue AdmissibleMeasure::integrate_rational_decay(const Bound& lo, const Bound& hi, const Rational& slope,
                                                         const Rational& intercept) const {
    constexpr double limit = std::numbers::pi / 4;
    double value = 0.0;
    double err = 0.0;
    for (const Cell& c : split({lo, hi}, {Rational(0)})) {
        bool negative = sample_in(c) < 0;
        // Map to t >= 0 with x = -t on the negative side.
        Bound l = negative ? (c.hi ? Bound(Rational(-*c.hi)) : std::nullopt) : c.lo;
        Bound h = negative ? (c.lo ? Bound(Rational(-*c.lo)) : std::nullopt) : c.hi;
        double a = to_double(negative ? Rational(-slope) : slope);
        double b = to_double(intercept);
        double tl = to_double(*l);
        double g0 = (h ? decay_g0(to_double(*h)) : limit) - decay_g0(tl);
        double g1 = (h ? decay_g1(to_double(*h)) : limit) - decay_g1(tl);
        value += a * g1 + b * g0;
        double scale = 4.0 + std::log1p(tl) + (h ? std::log1p(to_double(*h)) : 0.0);
        err += 64 * DBL_EPSILON * (std::abs(a) + std::abs(b)) * scale;
    }
    return MeasureValue::approx(value, err);
}

// --- integration over regions -------------------------------------------------

MeasureValue measure_region(const AdmissibleMeasure& nu, const VerticalRegion& r) {
    MeasureValue total = MeasureValue::exact(0);
    if (r.is_empty()) return total;
    for (const Cell& c : split(r.domain(), r.breakpoints())) {
        Rational x = sample_in(c);
        LinearPiece h = minus(r.top().piece_right_of(x), r.bottom().piece_right_of(x));
        total += nu.integrate_linear(c.lo, c.hi, h.slope, h.intercept);
    }
    return total;
}

MeasureValue measure_polygon(const AdmissibleMeasure& nu, const ConvexPolygonalSet& p) {
    if (!has_everywhere_finite_height(p)) return MeasureValue::infinite();
    return measure_region(nu, to_vertical_region(p));
}

MeasureValue symmetric_difference_measure(const AdmissibleMeasure& nu, const VerticalRegion& r1,
                                          const VerticalRegion& r2) {
    if (r1.is_empty()) return measure_region(nu, r2);
    if (r2.is_empty()) return measure_region(nu, r1);

    const XInterval& d1 = r1.domain();
    const XInterval& d2 = r2.domain();
    XInterval hull{(d1.lo && d2.lo) ? Bound(std::min(*d1.lo, *d2.lo)) : std::nullopt,
                   (d1.hi && d2.hi) ? Bound(std::max(*d1.hi, *d2.hi)) : std::nullopt};
    std::vector<Rational> cuts = r1.breakpoints();
    for (const auto& b : r2.breakpoints()) cuts.push_back(b);
    for (const auto& b : {d1.lo, d1.hi, d2.lo, d2.hi}) {
        if (b) cuts.push_back(*b);
    }

    MeasureValue total = MeasureValue::exact(0);
    for (const Cell& c : split(hull, cuts)) {
        Rational x = sample_in(c);
        bool in1 = d1.contains(x);
        bool in2 = d2.contains(x);
        if (!in1 && !in2) continue;
        if (in1 != in2) {
            const VerticalRegion& r = in1 ? r1 : r2;
            LinearPiece h = minus(r.top().piece_right_of(x), r.bottom().piece_right_of(x));
            total += nu.integrate_linear(c.lo, c.hi, h.slope, h.intercept);
            continue;
        }
        const LinearPiece& t1 = r1.top().piece_right_of(x);
        const LinearPiece& b1 = r1.bottom().piece_right_of(x);
        const LinearPiece& t2 = r2.top().piece_right_of(x);
        const LinearPiece& b2 = r2.bottom().piece_right_of(x);
        std::vector<Rational> roots;
        for (const LinearPiece& d : {minus(t1, t2), minus(b1, b2), minus(t1, b2), minus(t2, b1)}) {
            if (d.slope != 0) roots.push_back(-d.intercept / d.slope);
        }
        LinearPiece both = plus(minus(t1, b1), minus(t2, b2));
        for (const Cell& s : split({c.lo, c.hi}, roots)) {
            Rational y = sample_in(s);
            const LinearPiece& top = t1(y) <= t2(y) ? t1 : t2;
            const LinearPiece& bottom = b1(y) >= b2(y) ? b1 : b2;
            LinearPiece overlap = minus(top, bottom);
            LinearPiece integrand = both;
            if (overlap(y) > 0) integrand = minus(both, plus(overlap, overlap));
            total += nu.integrate_linear(s.lo, s.hi, integrand.slope, integrand.intercept);
        }
    }
    return total;
}

MeasureValue lebesgue_area(const VerticalRegion& r) {
    Rational total = 0;
    if (r.is_empty()) return MeasureValue::exact(total);
    for (const Cell& c : split(r.domain(), r.breakpoints())) {
        Rational x = sample_in(c);
        LinearPiece h = minus(r.top().piece_right_of(x), r.bottom().piece_right_of(x));
        if (!c.lo || !c.hi) {
            if (h.slope != 0 || h.intercept != 0) return MeasureValue::infinite();
            continue;
        }
        const Rational& l = *c.lo;
        const Rational& u = *c.hi;
        total += h.slope * (u * u - l * l) / 2 + h.intercept * (u - l);
    }
    return MeasureValue::exact(total);
}

}  // namespace stmetric
