#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "monoinv/rational.hpp"

namespace monoinv {

// A point of the extended real line: -inf < every finite rational < +inf.
class ExtendedReal {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtendedReal() : kind_(Kind::Finite) {}
    ExtendedReal(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT
    ExtendedReal(long value) : kind_(Kind::Finite), value_(value) {}                 // NOLINT

    static ExtendedReal neg_inf() { return ExtendedReal(Kind::NegInf); }
    static ExtendedReal pos_inf() { return ExtendedReal(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    // Precondition: is_finite().
    const Rational& value() const;

    ExtendedReal operator-() const;

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b);
    friend std::strong_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b);

private:
    explicit ExtendedReal(Kind kind) : kind_(kind) {}

    Kind kind_;
    Rational value_;
};

// "-inf", "+inf" or the rational text.
std::string to_string(const ExtendedReal& x);
// Accepts "-inf", "+inf", "inf" and anything parse_rational accepts.
ExtendedReal parse_extended(std::string_view text);

// slope * x + intercept with the convention (+-inf) * positive = +-inf.
// Precondition: slope > 0 when x is infinite.
ExtendedReal affine_image(const Rational& slope, const Rational& intercept, const ExtendedReal& x);

}  // namespace monoinv
