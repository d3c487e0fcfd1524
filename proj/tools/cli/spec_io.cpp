#include "spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace monoinv::cli {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw Error(ErrorKind::ParseError, std::string("missing field '") + name + "'");
    return j.at(name);
}

const Json& array_field(const Json& j, const char* name) {
    static const Json empty = Json::array();
    if (!j.contains(name)) return empty;
    const Json& a = j.at(name);
    if (!a.is_array()) throw Error(ErrorKind::ParseError, std::string("'") + name + "' must be an array");
    return a;
}

}  // namespace

PiecewiseMeasure parse_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "spec must be a JSON object");

    Interval carrier = Interval::real_line();
    if (j.contains("carrier")) {
        const Json& c = j.at("carrier");
        ExtendedReal lo = extended_from_json(field(c, "lo"));
        ExtendedReal hi = extended_from_json(field(c, "hi"));
        if (!(lo < hi)) throw Error(ErrorKind::InvalidMeasure, "empty carrier");
        carrier = Interval::open(lo, hi);
    }
    std::vector<Atom> atoms;
    for (const auto& a : array_field(j, "atoms"))
        atoms.push_back({rational_from_json(field(a, "x")), rational_from_json(field(a, "mass"))});
    std::vector<UniformPiece> pieces;
    for (const auto& p : array_field(j, "uniform_pieces")) {
        ExtendedReal a = extended_from_json(field(p, "a"));
        ExtendedReal b = extended_from_json(field(p, "b"));
        bool has_mass = p.contains("mass"), has_density = p.contains("density");
        if (has_mass == has_density)
            throw Error(ErrorKind::InvalidMeasure, "each uniform piece needs exactly one of mass and density");
        if (!(a < b)) throw Error(ErrorKind::InvalidMeasure, "uniform piece with a >= b");
        Rational d;
        if (has_density) {
            d = rational_from_json(p.at("density"));
        } else {
            if (!a.is_finite() || !b.is_finite())
                throw Error(ErrorKind::InvalidMeasure, "a piece given by its mass needs finite ends");
            d = rational_from_json(p.at("mass")) / (b.value() - a.value());
        }
        pieces.push_back({a, b, d});
    }
    return PiecewiseMeasure(carrier, std::move(atoms), std::move(pieces));
}

PiecewiseMeasure read_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

Json spec_json(const PiecewiseMeasure& m) { return to_json(m); }

IngestResult ingest_samples(std::istream& in, bool header) {
    std::vector<Rational> xs;
    std::string line;
    bool first = true;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (first && header) {
            first = false;
            continue;
        }
        first = false;
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        try {
            xs.push_back(parse_rational(line.substr(begin, end - begin + 1)));
        } catch (const Error& e) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (xs.empty()) throw Error(ErrorKind::InvalidMeasure, "no samples");
    std::sort(xs.begin(), xs.end());

    IngestResult r;
    r.samples = xs.size();
    {
        auto copy = xs;
        r.distinct = static_cast<std::size_t>(std::unique(copy.begin(), copy.end()) - copy.begin());
    }

    Json atoms = Json::array();
    Json pieces = Json::array();
    if (xs.size() == 1 || r.distinct == 1) {
        atoms.push_back({{"x", to_json(xs.front())}, {"mass", "1"}});
    } else {
        Rational step(1, static_cast<long>(xs.size() - 1));
        std::map<Rational, Rational> tied;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            if (xs[i] == xs[i + 1])
                tied[xs[i]] += step;
            else
                pieces.push_back({{"a", to_json(xs[i])}, {"b", to_json(xs[i + 1])}, {"mass", to_json(step)}});
        }
        for (const auto& [x, mass] : tied) atoms.push_back({{"x", to_json(x)}, {"mass", to_json(mass)}});
    }
    r.spec = Json{{"carrier", {{"lo", "-inf"}, {"hi", "+inf"}}}, {"atoms", atoms}, {"uniform_pieces", pieces}};
    return r;
}

Rational default_anchor(const Interval& carrier) {
    if (carrier.contains(Rational(0))) return 0;
    return interior_point(carrier.lo, carrier.hi);
}

}  // namespace monoinv::cli
