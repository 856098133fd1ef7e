#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "stmetric/rational.hpp"
#include "stmetric/validation.hpp"

namespace stmetric {

/// Positive weights b_n with sum n b_n finite: geometric r^n (0 < r < 1) or
/// power (n+1)^-e (e >= 3).
class LinearSummableSeq {
public:
    enum class Family { Geometric, Power };

    /// Throws InvalidMeasure unless 0 < r < 1.
    static LinearSummableSeq geometric(const Rational& ratio);
    /// Throws InvalidMeasure unless e >= 3.
    static LinearSummableSeq power(const Rational& exponent);

    Family family() const { return family_; }
    const Rational& parameter() const { return param_; }
    std::string name() const;

    double b(long n) const;

    /// Sum over n > D of (n+1) b_n.
    double tail_bound(long D) const;
    /// Sum over all n >= 0 of (n+1) b_n.
    double weighted_total() const;

    friend bool operator==(const LinearSummableSeq&, const LinearSummableSeq&) = default;

private:
    LinearSummableSeq(Family f, Rational p) : family_(f), param_(std::move(p)) {}
    double tail_from(long first) const;

    Family family_;
    Rational param_;
};

inline double tail_bound(const LinearSummableSeq& bn, long D) { return bn.tail_bound(D); }

/// Finitely supported series in X, Y; absent coefficients are zero.
struct TaylorSeries2 {
    std::map<std::pair<int, int>, double> coeffs;
    bool semitoric_normalized = true;

    double coeff(int i, int j) const;
    /// Zero values are erased so equal series compare equal.
    void set(int i, int j, double value) {
        if (value == 0.0) coeffs.erase({i, j});
        else coeffs[{i, j}] = value;
    }

    friend bool operator==(const TaylorSeries2&, const TaylorSeries2&) = default;
};

/// Checks sigma_00 = 0 and sigma_01 in [0, 2 pi).
ValidationReport validate_series(const TaylorSeries2& s);

/// Sum of min(|sigma - sigma'|, b_{i+j}), over total degree <= max_degree when given.
double taylor_distance_general(const TaylorSeries2& s, const TaylorSeries2& t, const LinearSummableSeq& bn,
                               std::optional<int> max_degree = std::nullopt);

/// As the general distance, but sigma_01 is compared on the circle R / 2 pi Z.
/// Throws Normalization unless both series pass validate_series.
double taylor_distance_semitoric(const TaylorSeries2& s, const TaylorSeries2& t, const LinearSummableSeq& bn,
                                 std::optional<int> max_degree = std::nullopt);

}  // namespace stmetric
