#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pspc {

// Exact decimal number: mantissa * 10^-scale with no trailing zeros in the
// mantissa (zero is stored as 0/0).  Thresholds compare by numeric value,
// so 5.0 and 5.00 collapse to the same Decimal; binary floating point is
// never used for threshold identity.
class Decimal {
public:
    Decimal() = default;

    static Decimal from_int(std::int64_t value);

    // Accepts [+-]?digits[.digits].  No exponent notation.  Throws
    // std::invalid_argument on malformed input or more than 18 significant
    // digits of scale.
    static Decimal parse(std::string_view text);

    std::int64_t mantissa() const { return mant_; }
    std::int32_t scale() const { return scale_; }

    // Canonical rendering without trailing fractional zeros ("5", "3.2").
    std::string str() const;
    double to_double() const;

    friend bool operator==(const Decimal& a, const Decimal& b);
    friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

    Decimal plus_one() const;
    Decimal minus_one() const;
    static Decimal midpoint(const Decimal& a, const Decimal& b);

private:
    Decimal(std::int64_t m, std::int32_t s) : mant_(m), scale_(s) { normalize(); }
    void normalize();

    std::int64_t mant_ = 0;
    std::int32_t scale_ = 0;  // decimal digits after the point, >= 0
};

std::size_t hash_value(const Decimal& d);

}  // namespace pspc
