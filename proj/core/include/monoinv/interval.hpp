#pragma once

#include <string>

#include "monoinv/extended_real.hpp"

namespace monoinv {

// An interval of the extended real line. Infinite endpoints are never closed.
// The interval is empty iff lo == hi and not both ends are closed.
struct Interval {
    ExtendedReal lo;
    ExtendedReal hi;
    bool lo_closed = false;
    bool hi_closed = false;

    // Throw Error(InvalidInterval) when lo > hi.
    static Interval open(ExtendedReal lo, ExtendedReal hi);
    static Interval closed(ExtendedReal lo, ExtendedReal hi);
    static Interval real_line();

    bool empty() const;
    bool is_open() const { return !lo_closed && !hi_closed; }
    bool contains(const Rational& x) const;
    // Set containment; true when other is empty.
    bool contains(const Interval& other) const;
    // The two intervals share a subinterval of positive length.
    bool overlaps(const Interval& other) const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& interval);

// Any finite point strictly inside a nonempty open (lo, hi).
Rational interior_point(const ExtendedReal& lo, const ExtendedReal& hi);

}  // namespace monoinv
