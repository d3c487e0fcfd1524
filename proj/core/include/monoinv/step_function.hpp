#pragma once

#include <span>
#include <vector>

#include "monoinv/interval.hpp"
#include "monoinv/piecewise_monotone.hpp"

namespace monoinv {

// Lambda-a.e. class of a nonnegative piecewise-constant function on an open
// carrier: one value per open segment between knots, nothing at the knots.
// Canonical: neighbouring segments never carry the same value.
class StepFunction {
public:
    // Throws Error(InvalidInterval) for a bad carrier or value count,
    // Error(UnorderedBreakpoints) for bad knots, Error(NonMonotone) never;
    // negative values give Error(InvalidMeasure).
    StepFunction(Interval carrier, std::vector<Rational> knots, std::vector<Rational> values);

    static StepFunction constant(Interval carrier, Rational value);

    const Interval& carrier() const { return carrier_; }
    std::span<const Rational> knots() const { return knots_; }
    std::span<const Rational> values() const { return values_; }
    std::size_t segment_count() const { return values_.size(); }
    ExtendedReal segment_lo(std::size_t i) const;
    ExtendedReal segment_hi(std::size_t i) const;

    bool is_knot(const Rational& x) const;
    // Value on the segment containing x (x inside the carrier, not a knot).
    const Rational& value_at(const Rational& x) const;

    friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
    Interval carrier_;
    std::vector<Rational> knots_;
    std::vector<Rational> values_;
};

// Slopes of g as an a.e. class on its regular domain (its Radon-Nikodym
// derivative when g is absolutely continuous).
StepFunction derivative(const PiecewiseMonotone& g);

// The a.e. class of x -> f(g(x)) on int(g^-1(carrier(f))). Segments of g are
// split at the preimages of f's knots. Throws Error(CarrierMismatch) when that
// preimage is empty or when g is flat at one of f's knots (undefined class).
StepFunction step_compose(const StepFunction& f, const PiecewiseMonotone& g);

}  // namespace monoinv
