#include "gridfrechet/rational.hpp"

#include <cctype>
#include <limits>

namespace gridfrechet {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational Rational::make(i128 num, i128 den) {
    if (den == 0) throw input_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi)
        throw input_error("rational overflow: value does not fit in 64 bits");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw input_error("cannot parse rational from '" + std::string(text) + "'");
    };

    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }

    auto read_digits = [&](std::int64_t& out, std::size_t max_digits) -> std::size_t {
        std::size_t count = 0;
        out = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (++count > max_digits) return count;  // caller rejects
            out = out * 10 + (text[pos] - '0');
            ++pos;
        }
        return count;
    };

    std::int64_t whole = 0;
    std::size_t whole_digits = read_digits(whole, 18);
    if (whole_digits == 0 || whole_digits > 18) return fail();

    if (pos == text.size()) {
        return make(negative ? -i128(whole) : i128(whole), 1);
    }

    if (text[pos] == '/') {
        ++pos;
        std::int64_t den = 0;
        std::size_t den_digits = read_digits(den, 18);
        if (den_digits == 0 || den_digits > 18 || pos != text.size() || den == 0) return fail();
        return make(negative ? -i128(whole) : i128(whole), den);
    }

    if (text[pos] == '.') {
        ++pos;
        std::int64_t frac = 0;
        std::size_t start = pos;
        std::size_t frac_digits = read_digits(frac, 9);
        if (frac_digits == 0 || pos != text.size()) return fail();
        if (frac_digits > 9)
            throw input_error("decimal '" + std::string(text) +
                              "' has more than 9 fractional digits; use p/q form");
        (void)start;
        i128 den = 1;
        for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
        i128 num = i128(whole) * den + frac;
        return make(negative ? -num : num, den);
    }

    return fail();
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace gridfrechet
