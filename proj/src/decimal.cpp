#include "pspc/decimal.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace pspc {

namespace {

using int128 = __int128;

int128 pow10_128(std::int32_t e) {
    int128 r = 1;
    while (e-- > 0) r *= 10;
    return r;
}

}  // namespace

void Decimal::normalize() {
    if (mant_ == 0) {
        scale_ = 0;
        return;
    }
    while (scale_ > 0 && mant_ % 10 == 0) {
        mant_ /= 10;
        --scale_;
    }
}

Decimal Decimal::from_int(std::int64_t value) { return Decimal(value, 0); }

Decimal Decimal::parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("malformed decimal literal: '" + std::string(text) + "'");

    std::int64_t mant = 0;
    std::int32_t scale = 0;
    int digits = 0;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_point || i + 1 >= text.size())
                throw std::invalid_argument("malformed decimal literal: '" + std::string(text) + "'");
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed decimal literal: '" + std::string(text) + "'");
        if (++digits > 18)
            throw std::invalid_argument("decimal literal too long: '" + std::string(text) + "'");
        mant = mant * 10 + (c - '0');
        if (seen_point) ++scale;
    }
    return Decimal(negative ? -mant : mant, scale);
}

std::string Decimal::str() const {
    std::int64_t m = mant_;
    bool neg = m < 0;
    std::string digits = std::to_string(neg ? -m : m);
    if (scale_ > 0) {
        while (static_cast<std::int32_t>(digits.size()) <= scale_)
            digits.insert(digits.begin(), '0');
        digits.insert(digits.end() - scale_, '.');
    }
    return neg ? "-" + digits : digits;
}

double Decimal::to_double() const {
    double d = static_cast<double>(mant_);
    for (std::int32_t i = 0; i < scale_; ++i) d /= 10.0;
    return d;
}

bool operator==(const Decimal& a, const Decimal& b) {
    // Normalized representation is canonical per value.
    return a.mant_ == b.mant_ && a.scale_ == b.scale_;
}

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
    // Align scales in 128-bit space; scales are capped at parse time.
    int128 lhs = static_cast<int128>(a.mant_) * pow10_128(b.scale_);
    int128 rhs = static_cast<int128>(b.mant_) * pow10_128(a.scale_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Decimal Decimal::plus_one() const {
    return Decimal(static_cast<std::int64_t>(mant_ + pow10_128(scale_)), scale_);
}

Decimal Decimal::minus_one() const {
    return Decimal(static_cast<std::int64_t>(mant_ - pow10_128(scale_)), scale_);
}

Decimal Decimal::midpoint(const Decimal& a, const Decimal& b) {
    constexpr int128 kMax = static_cast<int128>(INT64_MAX);
    std::int32_t scale = a.scale_ > b.scale_ ? a.scale_ : b.scale_;
    int128 sum = static_cast<int128>(a.mant_) * pow10_128(scale - a.scale_) +
                 static_cast<int128>(b.mant_) * pow10_128(scale - b.scale_);
    int128 result = sum % 2 == 0 ? sum / 2 : sum * 5;
    if (result > kMax || result < -kMax)
        throw std::overflow_error("decimal midpoint out of range");
    if (sum % 2 == 0) return Decimal(static_cast<std::int64_t>(result), scale);
    return Decimal(static_cast<std::int64_t>(result), scale + 1);
}

std::size_t hash_value(const Decimal& d) {
    std::size_t h = std::hash<std::int64_t>{}(d.mantissa());
    h ^= std::hash<std::int32_t>{}(d.scale()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace pspc
