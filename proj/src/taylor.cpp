#include "stmetric/taylor.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "stmetric/errors.hpp"

namespace stmetric {

namespace {

constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;

// Sum over m >= a of m^-p for p > 1: direct terms up to N, then Euler-Maclaurin.
long double zeta_tail(long double p, long a) {
    long n_direct = 32;
    long double N = static_cast<long double>(a + n_direct);
    long double sum = std::pow(N, 1 - p) / (p - 1) + std::pow(N, -p) / 2 + p * std::pow(N, -p - 1) / 12 -
                      p * (p + 1) * (p + 2) * std::pow(N, -p - 3) / 720 +
                      p * (p + 1) * (p + 2) * (p + 3) * (p + 4) * std::pow(N, -p - 5) / 30240;
    for (long m = a + n_direct - 1; m >= a; --m) sum += std::pow(static_cast<long double>(m), -p);
    return sum;
}

double term(double diff, double cap) { return std::min(std::abs(diff), cap); }

std::set<std::pair<int, int>> support_union(const TaylorSeries2& s, const TaylorSeries2& t) {
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, v] : s.coeffs) keys.insert(k);
    for (const auto& [k, v] : t.coeffs) keys.insert(k);
    return keys;
}

}  // namespace

LinearSummableSeq LinearSummableSeq::geometric(const Rational& ratio) {
    if (ratio <= 0 || ratio >= 1) {
        throw Error(ErrorKind::InvalidMeasure, "geometric ratio must lie in (0, 1), got " + to_string(ratio));
    }
    return LinearSummableSeq(Family::Geometric, ratio);
}

LinearSummableSeq LinearSummableSeq::power(const Rational& exponent) {
    if (exponent < 3) {
        throw Error(ErrorKind::InvalidMeasure, "power exponent must be >= 3, got " + to_string(exponent));
    }
    return LinearSummableSeq(Family::Power, exponent);
}

std::string LinearSummableSeq::name() const {
    return std::string(family_ == Family::Geometric ? "geometric" : "power") + "(" + to_string(param_) + ")";
}

double LinearSummableSeq::b(long n) const {
    if (family_ == Family::Geometric) return std::pow(to_double(param_), static_cast<double>(n));
    return std::pow(static_cast<double>(n + 1), -to_double(param_));
}

double LinearSummableSeq::tail_bound(long D) const {
    if (D < 0) throw Error(ErrorKind::DegenerateInput, "truncation degree must be >= 0");
    return tail_from(D + 1);
}

double LinearSummableSeq::weighted_total() const { return tail_from(0); }

double LinearSummableSeq::tail_from(long first) const {
    if (family_ == Family::Geometric) {
        // sum_{n >= N} (n+1) r^n = r^N ((N+1)(1-r) + r) / (1-r)^2
        const Rational& r = param_;
        unsigned long N = static_cast<unsigned long>(first);
        Rational rn;
        mpz_pow_ui(rn.get_num_mpz_t(), r.get_num_mpz_t(), N);
        mpz_pow_ui(rn.get_den_mpz_t(), r.get_den_mpz_t(), N);
        Rational one_minus = 1 - r;
        Rational value = rn * ((N + 1) * one_minus + r) / (one_minus * one_minus);
        return to_double(value);
    }
    // sum_{n >= first} (n+1)^(1-e) = sum_{m >= first+1} m^-(e-1)
    return static_cast<double>(zeta_tail(to_double(param_) - 1, first + 1));
}

double TaylorSeries2::coeff(int i, int j) const {
    auto it = coeffs.find({i, j});
    return it == coeffs.end() ? 0.0 : it->second;
}

ValidationReport validate_series(const TaylorSeries2& s) {
    ValidationReport r;
    r.check("indices nonnegative");
    r.check("coefficients finite");
    for (const auto& [k, v] : s.coeffs) {
        if (k.first < 0 || k.second < 0) {
            r.fail("negative_index",
                   "coefficient (" + std::to_string(k.first) + "," + std::to_string(k.second) + ") has a negative index");
        }
        if (!std::isfinite(v)) {
            r.fail("non_finite",
                   "coefficient (" + std::to_string(k.first) + "," + std::to_string(k.second) + ") is not finite");
        }
    }
    r.check("sigma_00 = 0");
    if (s.coeff(0, 0) != 0.0) r.fail("sigma00_nonzero", "sigma_00 = " + std::to_string(s.coeff(0, 0)) + ", expected 0");
    r.check("sigma_01 in [0, 2pi)");
    long double s01 = s.coeff(0, 1);
    if (!(s01 >= 0 && s01 < two_pi)) {
        r.fail("sigma01_range", "sigma_01 = " + std::to_string(s.coeff(0, 1)) + " is outside [0, 2pi)");
    }
    return r;
}

double taylor_distance_general(const TaylorSeries2& s, const TaylorSeries2& t, const LinearSummableSeq& bn,
                               std::optional<int> max_degree) {
    double total = 0.0;
    for (const auto& [i, j] : support_union(s, t)) {
        if (max_degree && i + j > *max_degree) continue;
        total += term(s.coeff(i, j) - t.coeff(i, j), bn.b(i + j));
    }
    return total;
}

double taylor_distance_semitoric(const TaylorSeries2& s, const TaylorSeries2& t, const LinearSummableSeq& bn,
                                 std::optional<int> max_degree) {
    for (const auto* series : {&s, &t}) {
        ValidationReport r = validate_series(*series);
        if (!r.ok()) throw Error(ErrorKind::Normalization, r.violations.front().message);
    }
    double total = 0.0;
    for (const auto& [i, j] : support_union(s, t)) {
        if (max_degree && i + j > *max_degree) continue;
        double cap = bn.b(i + j);
        if (i == 0 && j == 1) {
            long double d = std::abs(static_cast<long double>(s.coeff(0, 1)) - t.coeff(0, 1));
            long double wrapped = std::min(d, two_pi - d);
            total += static_cast<double>(std::min(wrapped, static_cast<long double>(cap)));
        } else {
            total += term(s.coeff(i, j) - t.coeff(i, j), cap);
        }
    }
    return total;
}

}  // namespace stmetric
