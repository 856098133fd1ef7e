#include "stmetric/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace stmetric {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    Integer z(std::string(s), 10);
    return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
            throw std::invalid_argument("denominator must be unsigned in '" + std::string(text) + "'");
        }
        Integer den = parse_integer(den_text);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            negative = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        }
        Integer whole = int_part.empty() ? Integer(0) : Integer(std::string(int_part), 10);
        Integer frac = frac_part.empty() ? Integer(0) : Integer(std::string(frac_part), 10);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        Rational q(whole * scale + frac, scale);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }

    return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational from_double(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("cannot convert non-finite double to rational");
    return Rational(value);
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string bound_to_string(const Bound& b, bool upper) {
    if (!b) return upper ? "inf" : "-inf";
    return to_string(*b);
}

}  // namespace stmetric
