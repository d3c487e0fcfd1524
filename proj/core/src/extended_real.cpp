#include "monoinv/extended_real.hpp"

#include <cassert>

#include "monoinv/error.hpp"

namespace monoinv {

const Rational& ExtendedReal::value() const {
    assert(is_finite());
    return value_;
}

ExtendedReal ExtendedReal::operator-() const {
    switch (kind_) {
        case Kind::NegInf: return pos_inf();
        case Kind::PosInf: return neg_inf();
        case Kind::Finite: break;
    }
    return ExtendedReal(Rational(-value_));
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (!a.is_finite()) return std::strong_ordering::equal;
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const ExtendedReal& x) {
    if (x.is_neg_inf()) return "-inf";
    if (x.is_pos_inf()) return "+inf";
    return to_string(x.value());
}

ExtendedReal parse_extended(std::string_view text) {
    if (text == "-inf") return ExtendedReal::neg_inf();
    if (text == "+inf" || text == "inf") return ExtendedReal::pos_inf();
    return parse_rational(text);
}

ExtendedReal affine_image(const Rational& slope, const Rational& intercept, const ExtendedReal& x) {
    if (x.is_finite()) return ExtendedReal(Rational(slope * x.value() + intercept));
    assert(slope > 0);
    return x;
}

}  // namespace monoinv
