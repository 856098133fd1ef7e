#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace stmetric {

/// Exact rational number. All polygon geometry is carried out in this type.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", or a terminating decimal such as "-1.25" exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written without a denominator.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Exact conversion of a finite double.
Rational from_double(double value);

Integer floor(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Extended real line endpoint: nullopt stands for the infinite end on the
/// side where it is used (-inf for a lower bound, +inf for an upper bound).
using Bound = std::optional<Rational>;

/// x-interval [lo, hi] with possibly infinite ends.
struct XInterval {
    Bound lo;
    Bound hi;

    bool contains(const Rational& x) const {
        return (!lo || *lo <= x) && (!hi || x <= *hi);
    }
    bool contains_interior(const Rational& x) const {
        return (!lo || *lo < x) && (!hi || x < *hi);
    }
    bool degenerate() const { return lo && hi && *lo >= *hi; }

    friend bool operator==(const XInterval&, const XInterval&) = default;
};

std::string bound_to_string(const Bound& b, bool upper);

}  // namespace stmetric
