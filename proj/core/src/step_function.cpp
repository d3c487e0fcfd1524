#include "monoinv/step_function.hpp"

#include <algorithm>
#include <cassert>

namespace monoinv {

StepFunction::StepFunction(Interval carrier, std::vector<Rational> knots, std::vector<Rational> values)
    : carrier_(std::move(carrier)) {
    if (!carrier_.is_open() || carrier_.empty())
        throw Error(ErrorKind::InvalidInterval, "step function carrier must be open and nonempty");
    if (values.size() != knots.size() + 1) throw Error(ErrorKind::InvalidInterval, "need one value more than knots");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!carrier_.contains(knots[i])) throw Error(ErrorKind::UnorderedBreakpoints, "knot outside carrier");
        if (i > 0 && !(knots[i - 1] < knots[i])) throw Error(ErrorKind::UnorderedBreakpoints, "knots not increasing");
    }
    for (const auto& v : values)
        if (v < 0) throw Error(ErrorKind::InvalidMeasure, "negative value " + to_string(v));
    values_.push_back(std::move(values[0]));
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (values[i + 1] == values_.back()) continue;
        knots_.push_back(std::move(knots[i]));
        values_.push_back(std::move(values[i + 1]));
    }
}

StepFunction StepFunction::constant(Interval carrier, Rational value) {
    return StepFunction(std::move(carrier), {}, {std::move(value)});
}

ExtendedReal StepFunction::segment_lo(std::size_t i) const { return i == 0 ? carrier_.lo : ExtendedReal(knots_[i - 1]); }

ExtendedReal StepFunction::segment_hi(std::size_t i) const {
    return i == knots_.size() ? carrier_.hi : ExtendedReal(knots_[i]);
}

bool StepFunction::is_knot(const Rational& x) const { return std::binary_search(knots_.begin(), knots_.end(), x); }

const Rational& StepFunction::value_at(const Rational& x) const {
    auto i = static_cast<std::size_t>(std::upper_bound(knots_.begin(), knots_.end(), x) - knots_.begin());
    return values_[i];
}

StepFunction derivative(const PiecewiseMonotone& g) {
    std::vector<Rational> values;
    for (const auto& p : g.pieces()) values.push_back(p.slope);
    return StepFunction(g.regular_domain(), {g.knots().begin(), g.knots().end()}, std::move(values));
}

StepFunction step_compose(const StepFunction& f, const PiecewiseMonotone& g) {
    Interval carrier = preimage_interior(g, f.carrier());
    if (carrier.empty())
        throw Error(ErrorKind::CarrierMismatch, "g maps no open set into " + to_string(f.carrier()));
    std::vector<Rational> knots;
    std::vector<Rational> values;
    auto add = [&](const ExtendedReal& from, const Rational& value) {
        if (!values.empty()) knots.push_back(from.value());
        values.push_back(value);
    };
    for (std::size_t i = 0; i < g.segment_count(); ++i) {
        ExtendedReal a = std::max(g.segment_lo(i), carrier.lo);
        ExtendedReal b = std::min(g.segment_hi(i), carrier.hi);
        if (!(a < b)) continue;
        const Affine& p = g.pieces()[i];
        if (p.slope == 0) {
            if (f.is_knot(p.intercept))
                throw Error(ErrorKind::CarrierMismatch, "g is constant at a knot of f: " + to_string(p.intercept));
            add(a, f.value_at(p.intercept));
            continue;
        }
        ExtendedReal from = a;
        ExtendedReal image_lo = affine_image(p.slope, p.intercept, a);
        ExtendedReal image_hi = affine_image(p.slope, p.intercept, b);
        for (const auto& k : f.knots()) {
            if (!(image_lo < ExtendedReal(k) && ExtendedReal(k) < image_hi)) continue;
            ExtendedReal cut((k - p.intercept) / p.slope);
            add(from, f.value_at(p.at(interior_point(from, cut))));
            from = cut;
        }
        add(from, f.value_at(p.at(interior_point(from, b))));
    }
    return StepFunction(carrier, std::move(knots), std::move(values));
}

}  // namespace monoinv
