#include "monoinv/interval.hpp"

#include "monoinv/error.hpp"

namespace monoinv {

Interval Interval::open(ExtendedReal lo, ExtendedReal hi) {
    if (lo > hi) throw Error(ErrorKind::InvalidInterval, "lo > hi in (" + to_string(lo) + ", " + to_string(hi) + ")");
    return Interval{std::move(lo), std::move(hi), false, false};
}

Interval Interval::closed(ExtendedReal lo, ExtendedReal hi) {
    if (lo > hi) throw Error(ErrorKind::InvalidInterval, "lo > hi in [" + to_string(lo) + ", " + to_string(hi) + "]");
    bool lc = lo.is_finite();
    bool hc = hi.is_finite();
    return Interval{std::move(lo), std::move(hi), lc, hc};
}

Interval Interval::real_line() { return open(ExtendedReal::neg_inf(), ExtendedReal::pos_inf()); }

bool Interval::empty() const {
    if (lo > hi) return true;
    return lo == hi && !(lo_closed && hi_closed);
}

bool Interval::contains(const Rational& x) const {
    ExtendedReal e(x);
    bool above = lo_closed ? lo <= e : lo < e;
    bool below = hi_closed ? e <= hi : e < hi;
    return above && below;
}

bool Interval::contains(const Interval& other) const {
    if (other.empty()) return true;
    bool left = other.lo_closed && !lo_closed ? lo < other.lo : lo <= other.lo;
    bool right = other.hi_closed && !hi_closed ? other.hi < hi : other.hi <= hi;
    return left && right;
}

bool Interval::overlaps(const Interval& other) const {
    ExtendedReal a = lo > other.lo ? lo : other.lo;
    ExtendedReal b = hi < other.hi ? hi : other.hi;
    return a < b;
}

std::string to_string(const Interval& interval) {
    if (interval.empty()) return "{}";
    return std::string(interval.lo_closed ? "[" : "(") + to_string(interval.lo) + ", " + to_string(interval.hi) +
           (interval.hi_closed ? "]" : ")");
}

Rational interior_point(const ExtendedReal& lo, const ExtendedReal& hi) {
    if (lo.is_finite() && hi.is_finite()) return midpoint(lo.value(), hi.value());
    if (hi.is_finite()) return hi.value() - 1;
    if (lo.is_finite()) return lo.value() + 1;
    return 0;
}

}  // namespace monoinv
