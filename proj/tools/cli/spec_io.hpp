#pragma once

#include <istream>
#include <string>

#include "monoinv/json.hpp"
#include "monoinv/measure.hpp"

namespace monoinv::cli {

// DistributionSpec JSON -> measure. Malformed JSON, missing fields and JSON
// floats give Error(ParseError); semantic problems give Error(InvalidMeasure).
PiecewiseMeasure parse_spec(const std::string& text);
PiecewiseMeasure read_spec_file(const std::string& path);

// The canonical spec of a measure (densities, sorted, merged).
Json spec_json(const PiecewiseMeasure& m);

struct IngestResult {
    Json spec;
    std::size_t samples = 0;
    std::size_t distinct = 0;
};

// Linear interpolation through (x_(i), (i-1)/(n-1)). Error(ParseError) for a
// bad line; fewer than two samples give Error(InvalidMeasure).
IngestResult ingest_samples(std::istream& in, bool header);

// 0 if inside the carrier, else the midpoint of a finite carrier, else one
// unit inside the finite end.
Rational default_anchor(const Interval& carrier);

}  // namespace monoinv::cli
