#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gridfrechet/errors.hpp"

namespace gridfrechet {

// Exact rational arithmetic over int64 numerator/denominator. All
// intermediates run in 128-bit so cross-multiplied comparisons never
// overflow; a result whose reduced form leaves 64 bits throws input_error.
// Denominator is always positive and gcd(num, den) == 1.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) : Rational(make(num, den)) {}

    // Accepts "p/q", an integer, or a decimal with at most 9 fractional digits.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return make(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw input_error("rational division by zero");
        return make(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    Rational operator-() const { return make(-i128(num_), den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // Largest integer <= value (floor division, correct for negatives).
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    std::int64_t ceil() const { return -(-*this).floor(); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p/q" when den > 1, plain integer otherwise.
    std::string str() const;

  private:
    using i128 = __int128;

    static Rational make(i128 num, i128 den);

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace gridfrechet
