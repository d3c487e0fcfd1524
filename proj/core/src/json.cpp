#include "monoinv/json.hpp"

namespace monoinv {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const ExtendedReal& x) { return to_string(x); }

Json to_json(const Interval& interval) {
    return Json{{"lo", to_json(interval.lo)},
                {"hi", to_json(interval.hi)},
                {"lo_closed", interval.lo_closed},
                {"hi_closed", interval.hi_closed},
                {"empty", interval.empty()}};
}

Json to_json(const ModalInterval& interval) { return Json::array({to_json(interval.lo), to_json(interval.hi)}); }

Json to_json(const PiecewiseMonotone& g) {
    Json knots = Json::array();
    for (const auto& k : g.knots()) knots.push_back(to_json(k));
    Json pieces = Json::array();
    for (const auto& p : g.pieces()) pieces.push_back({{"slope", to_json(p.slope)}, {"intercept", to_json(p.intercept)}});
    return Json{{"lo", to_json(g.lo())}, {"hi", to_json(g.hi())}, {"knots", knots}, {"pieces", pieces}};
}

Json to_json(const StepFunction& f) {
    Json knots = Json::array();
    for (const auto& k : f.knots()) knots.push_back(to_json(k));
    Json values = Json::array();
    for (const auto& v : f.values()) values.push_back(to_json(v));
    return Json{{"carrier", {{"lo", to_json(f.carrier().lo)}, {"hi", to_json(f.carrier().hi)}}},
                {"knots", knots},
                {"values", values}};
}

Json to_json(const PiecewiseMeasure& m) {
    Json atoms = Json::array();
    for (const auto& a : m.atoms()) atoms.push_back({{"x", to_json(a.location)}, {"mass", to_json(a.mass)}});
    Json pieces = Json::array();
    for (const auto& p : m.pieces())
        pieces.push_back({{"a", to_json(p.lo)}, {"b", to_json(p.hi)}, {"density", to_json(p.density)}});
    return Json{{"carrier", {{"lo", to_json(m.carrier().lo)}, {"hi", to_json(m.carrier().hi)}}},
                {"atoms", atoms},
                {"uniform_pieces", pieces}};
}

Json to_json(const Classification& c) {
    auto modal = [](const std::optional<ModalInterval>& m) { return m ? to_json(*m) : Json(nullptr); };
    Json atom = nullptr;
    if (c.atom_at_mode) atom = {{"x", to_json(c.atom_at_mode->location)}, {"mass", to_json(c.atom_at_mode->mass)}};
    return Json{{"cdf_unimodal", c.cdf_unimodal},
                {"modes", modal(c.modes)},
                {"dens_unimodal_abs_part", c.dens_unimodal_abs_part},
                {"abs_density_modes", modal(c.abs_modes)},
                {"quantile_unimodal", c.quantile_unimodal},
                {"quantile_modes", modal(c.quantile_modes)},
                {"atom_at_mode", atom},
                {"qf_absolutely_continuous", c.qf_absolutely_continuous}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.dump());
    throw Error(ErrorKind::ParseError, "expected an exact number (string or integer), got " + j.dump());
}

ExtendedReal extended_from_json(const Json& j) {
    if (j.is_string()) return parse_extended(j.get<std::string>());
    return rational_from_json(j);
}

PiecewiseMonotone monotone_from_json(const Json& j) {
    try {
        std::vector<Rational> knots;
        for (const auto& k : j.at("knots")) knots.push_back(rational_from_json(k));
        std::vector<Affine> pieces;
        for (const auto& p : j.at("pieces"))
            pieces.push_back({rational_from_json(p.at("slope")), rational_from_json(p.at("intercept"))});
        return PiecewiseMonotone::from_pieces(extended_from_json(j.at("lo")), extended_from_json(j.at("hi")),
                                              std::move(knots), std::move(pieces));
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

}  // namespace monoinv
