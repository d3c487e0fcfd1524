#pragma once

#include <nlohmann/json.hpp>

#include "monoinv/measure.hpp"
#include "monoinv/piecewise_monotone.hpp"
#include "monoinv/step_function.hpp"
#include "monoinv/unimodal.hpp"

namespace monoinv {

// Keys come out sorted, which keeps reports byte-stable.
using Json = nlohmann::json;

// Exact quantities always travel as strings.
Json to_json(const Rational& q);
Json to_json(const ExtendedReal& x);
Json to_json(const Interval& interval);
Json to_json(const ModalInterval& interval);
Json to_json(const PiecewiseMonotone& g);
Json to_json(const StepFunction& f);
Json to_json(const PiecewiseMeasure& m);
Json to_json(const Classification& c);

// Strings and integers only; floats are rejected with Error(ParseError).
Rational rational_from_json(const Json& j);
ExtendedReal extended_from_json(const Json& j);
// Inverse of to_json(PiecewiseMonotone).
PiecewiseMonotone monotone_from_json(const Json& j);

}  // namespace monoinv
