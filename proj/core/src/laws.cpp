#include <set>
#include <sstream>

#include "laws_internal.hpp"
#include "monoinv/measure.hpp"
#include "monoinv/unimodal.hpp"

namespace monoinv {

namespace {

LawOutcome fail(std::string expected, std::string got) { return {true, false, std::move(expected), std::move(got)}; }
LawOutcome skip() { return {false, true, {}, {}}; }
LawOutcome pass() { return {}; }

std::string str(const PiecewiseMeasure& m) { return to_json(m).dump(); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(const std::optional<ModalInterval>& m) { return m ? to_json(*m).dump() : "null"; }

// Knots and finite domain ends of every function given, their midpoints, and
// one point beyond each extreme.
std::vector<Rational> refinement_grid(std::initializer_list<const PiecewiseMonotone*> fs) {
    std::set<Rational> base;
    for (const auto* f : fs) {
        base.insert(f->knots().begin(), f->knots().end());
        if (f->lo().is_finite()) base.insert(f->lo().value());
        if (f->hi().is_finite()) base.insert(f->hi().value());
    }
    if (base.empty()) base.insert(0);
    std::vector<Rational> grid{*base.begin() - 1};
    for (auto it = base.begin(); it != base.end(); ++it) {
        if (it != base.begin()) grid.push_back(midpoint(*std::prev(it), *it));
        grid.push_back(*it);
    }
    grid.push_back(*base.rbegin() + 1);
    return grid;
}

// Points strictly inside m: two per gap between consecutive cuts (knots of g
// inside m and finite ends of m), plus the interior knots themselves.
std::vector<Rational> interior_samples(const PiecewiseMonotone& g, const Interval& m) {
    std::vector<ExtendedReal> cuts{m.lo};
    for (const auto& k : g.knots())
        if (m.contains(k)) cuts.emplace_back(k);
    cuts.push_back(m.hi);
    std::vector<Rational> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const auto& a = cuts[i];
        const auto& b = cuts[i + 1];
        if (a.is_finite() && b.is_finite()) {
            Rational third = (b.value() - a.value()) / 3;
            out.push_back(a.value() + third);
            out.push_back(a.value() + 2 * third);
        } else if (b.is_finite()) {
            out.push_back(b.value() - 2);
            out.push_back(b.value() - 1);
        } else if (a.is_finite()) {
            out.push_back(a.value() + 1);
            out.push_back(a.value() + 2);
        } else {
            out.push_back(-1);
            out.push_back(1);
        }
        if (i + 2 < cuts.size()) out.push_back(b.value());
    }
    return out;
}

LawOutcome galois(const PiecewiseMonotone& g) {
    auto hc = inverse_class(g);
    auto* h = std::get_if<PiecewiseMonotone>(&hc);
    if (!h) return skip();
    auto grid = refinement_grid({&g, h});
    std::vector<ExtendedReal> gl, gr, hl, hr;
    for (const auto& p : grid) {
        gl.push_back(eval(g, p, Version::Left));
        gr.push_back(eval(g, p, Version::Right));
        hl.push_back(eval(*h, p, Version::Left));
        hr.push_back(eval(*h, p, Version::Right));
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ExtendedReal x(grid[i]);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            ExtendedReal t(grid[j]);
            bool a1 = gl[i] > t, b1 = x > hr[j];
            bool a2 = gl[i] <= t, b2 = x <= hr[j];
            bool a3 = gr[i] < t, b3 = x < hl[j];
            if (a1 != b1 || a2 != b2 || a3 != b3) {
                std::ostringstream os;
                os << "x=" << to_string(grid[i]) << " t=" << to_string(grid[j]) << " G_l(x)=" << to_string(gl[i])
                   << " G_r(x)=" << to_string(gr[i]) << " H_l(t)=" << to_string(hl[j]) << " H_r(t)=" << to_string(hr[j]);
                return fail("Galois biconditionals", os.str());
            }
        }
    }
    return pass();
}

LawOutcome double_inverse(const PiecewiseMonotone& g) {
    auto hc = inverse_class(g);
    auto* h = std::get_if<PiecewiseMonotone>(&hc);
    if (!h) return skip();
    auto hhc = inverse_class(*h);
    auto* hh = std::get_if<PiecewiseMonotone>(&hhc);
    if (!hh) return fail("non-constant double inverse", "constant");
    if (!versions_equal(*hh, g)) return fail(to_json(g).dump(), to_json(*hh).dump());
    return pass();
}

LawOutcome push_forward(const PiecewiseMonotone& g) {
    auto hc = inverse_class(g);
    auto* h = std::get_if<PiecewiseMonotone>(&hc);
    if (!h) return skip();
    auto mu_g = associated_measure(g);
    auto image = pushforward(lebesgue_restricted(g, LebesgueMass::OfInverse), *h);
    if (!(image == mu_g)) return fail(str(mu_g), str(image));
    auto mu_h = associated_measure(*h);
    auto back = pushforward(lebesgue_restricted(g, LebesgueMass::Own), g);
    if (!(back == mu_h)) return fail(str(mu_h), str(back));
    return pass();
}

bool strictly_increasing_on_mass(const PiecewiseMonotone& g) {
    auto m = mass_interval(g);
    for (std::size_t i = 0; i < g.segment_count(); ++i)
        if (g.pieces()[i].slope == 0 && Interval::open(g.segment_lo(i), g.segment_hi(i)).overlaps(m)) return false;
    return true;
}

bool inverse_continuous(const InverseClass& hc) {
    auto* h = std::get_if<PiecewiseMonotone>(&hc);
    return !h || !has_jump(*h);
}

LawOutcome push_continuous(const PiecewiseMonotone& g) {
    auto hc = inverse_class(g);
    bool continuous = inverse_continuous(hc);
    bool strict = strictly_increasing_on_mass(g);
    if (continuous != strict) return fail("continuity == strict increase", str(continuous) + " vs " + str(strict));
    auto* h = std::get_if<PiecewiseMonotone>(&hc);
    if (!continuous || !h) return skip();
    auto lambda_g = lebesgue_restricted(g, LebesgueMass::Own);
    auto image = pushforward(associated_measure(*h), *h);
    if (!(image == lambda_g)) return fail(str(lambda_g), str(image));
    return pass();
}

LawOutcome continuity_equivalence(const PiecewiseMonotone& g) {
    auto hc = inverse_class(g);
    auto* h = std::get_if<PiecewiseMonotone>(&hc);
    auto m = mass_interval(g);

    bool continuous = inverse_continuous(hc);
    bool surjective = true;  // no jump gap of H meets M_G
    if (h)
        for (const auto& b : h->breakpoints())
            if (b.is_jump() && Interval::open(b.left_limit, b.right_limit).overlaps(m)) surjective = false;
    bool strict = strictly_increasing_on_mass(g);
    bool injective = true;
    std::vector<Rational> samples = m.empty() ? std::vector<Rational>{} : interior_samples(g, m);
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        if (!(eval(g, samples[i], Version::Right) < eval(g, samples[i + 1], Version::Left))) injective = false;
    if (!(continuous == surjective && surjective == injective && injective == strict))
        return fail("four equal verdicts", str(continuous) + str(surjective) + str(injective) + str(strict));
    if (!continuous || !h) return pass();

    for (const auto& x : samples) {
        ExtendedReal y = eval(g, x, Version::Right);
        if (!(eval(*h, y.value(), Version::Left) == ExtendedReal(x)) ||
            !(eval(*h, y.value(), Version::Right) == ExtendedReal(x)))
            return fail("H(G(x)) = x", "x=" + to_string(x));
    }
    auto image = Interval::open(h->lower_limit(), h->upper_limit());
    if (!(image == m)) return fail(to_string(m), to_string(image));
    return pass();
}

LawOutcome radon_nikodym(const PiecewiseMonotone& g) {
    auto mu = associated_measure(g);
    auto parts = lebesgue_decompose(mu);
    auto dens = density(parts.abs);
    for (const auto& rho : {lebesgue_restricted(g, LebesgueMass::Own), PiecewiseMeasure::lebesgue(g.regular_domain(), g.regular_domain())}) {
        // (i) mu << rho iff the singular part vanishes.
        if (is_abs_cont_wrt(mu, rho) != parts.sing.is_zero())
            return fail("mu << rho iff mu_sing = 0", str(rho));
        // (ii) rho << mu iff rho << mu_abs iff d(mu_abs)/d(rho) > 0 rho-a.e.
        bool positive = true;
        for (const auto& piece : rho.pieces())
            for (std::size_t i = 0; i < dens.segment_count(); ++i)
                if (dens.values()[i] == 0 &&
                    Interval::open(dens.segment_lo(i), dens.segment_hi(i)).overlaps(Interval::open(piece.lo, piece.hi)))
                    positive = false;
        bool a = is_abs_cont_wrt(rho, mu), b = is_abs_cont_wrt(rho, parts.abs);
        if (a != b || b != positive) return fail("three equal verdicts", str(a) + str(b) + str(positive));
    }
    return pass();
}

LawOutcome abs_cont_equivalence(const PiecewiseMonotone& g) {
    Interval ih = inverse_regular_domain(g);
    std::vector<Interval> tests{ih};
    Interval mh = inverse_mass_interval(g);
    if (!mh.empty()) tests.push_back(mh);
    auto hc = inverse_class(g);
    if (auto* h = std::get_if<PiecewiseMonotone>(&hc)) {
        auto grid = refinement_grid({h});
        std::vector<Rational> inside;
        for (const auto& p : grid)
            if (ih.contains(p)) inside.push_back(p);
        for (std::size_t i = 0; i + 1 < inside.size(); ++i) {
            tests.push_back(Interval::open(inside[i], inside[i + 1]));
            if (i + 2 < inside.size()) tests.push_back(Interval::open(inside[i], inside[i + 2]));
        }
        if (!inside.empty()) {
            tests.push_back(Interval::open(ih.lo, inside.front()));
            tests.push_back(Interval::open(inside.back(), ih.hi));
        }
    }
    for (const auto& interval : tests) gen_inverse_abs_cont(g, interval);  // throws on disagreement
    return pass();
}

LawOutcome inverse_rule(const PiecewiseMonotone& g) {
    if (!gen_inverse_abs_cont(g, inverse_regular_domain(g))) return skip();
    auto report = inverse_rule_check(g);
    if (!report.holds) {
        for (const auto& s : report.segments)
            if (!s.holds)
                return fail("g_abs * (h' o G) = 1", "on " + to_string(s.segment) + ": " + to_string(s.g_abs) + " * " +
                                                        to_string(s.h_prime_at_g));
    }
    // The compared segments tile M_G.
    ExtendedReal at = report.mass_interval.lo;
    for (const auto& s : report.segments) {
        if (!(s.segment.lo == at)) return fail("segments tiling M_G", to_string(s.segment));
        at = s.segment.hi;
    }
    if (!report.mass_interval.empty() && !(at == report.mass_interval.hi)) return fail("segments tiling M_G", "gap at the end");
    return pass();
}

LawOutcome qf_absolutely_continuous(const PiecewiseMonotone& g, bool expect_unimodal) {
    bool unimodal = cdf_shape_check(g).holds;
    if (expect_unimodal && !unimodal) return fail("generator built a unimodal instance", "cdf_shape_check false");
    if (!unimodal) return skip();
    auto qc = quantile_function(g);
    if (auto* q = std::get_if<PiecewiseMonotone>(&qc); q && has_jump(*q))
        return fail("no jumps in Q", "jump at " + to_string(jump_locations(*q).front()));
    return pass();
}

LawOutcome main_equivalence(const PiecewiseMonotone& g) {
    auto route1 = cdf_shape_check(g);

    ShapeVerdict route2;
    try {
        route2 = is_quasi_convex(quantile_density(g));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::QfNotAbsolutelyContinuous) throw;
    }

    ShapeVerdict route3;
    auto qc = quantile_function(g);
    if (auto* d = std::get_if<DegenerateInverse>(&qc))
        route3 = {true, ModalInterval{d->domain.lo, d->domain.hi}};
    else
        route3 = qf_shape_check(std::get<PiecewiseMonotone>(qc));

    auto c = classify(g);
    if (route1.holds != route2.holds || route2.holds != route3.holds || c.cdf_unimodal != route1.holds ||
        c.quantile_unimodal != route2.holds)
        return fail("equal verdicts", "cdf=" + str(route1.holds) + " qdensity=" + str(route2.holds) +
                                          " qf=" + str(route3.holds) + " classify=" + str(c.cdf_unimodal) + "/" +
                                          str(c.quantile_unimodal));
    if (route2.modes != route3.modes || c.quantile_modes != route2.modes || c.modes != route1.modes)
        return fail("equal modal intervals", str(route2.modes) + " " + str(route3.modes) + " " + str(c.quantile_modes));
    if (!modal_correspondence_holds(g, c)) return fail("Q maps quantile modes onto modes", str(c.modes) + " " + str(c.quantile_modes));
    return pass();
}

LawOutcome decomposition(const PiecewiseMonotone& g) {
    bool unimodal = cdf_shape_check(g).holds;
    auto parts = lebesgue_decompose(associated_measure(g));
    auto dens = is_quasi_concave(density(parts.abs), true);
    const auto& atoms = parts.sing.atoms();
    bool rhs = dens.holds && atoms.size() <= 1;
    if (rhs && atoms.size() == 1) {
        ExtendedReal x(atoms.front().location);
        rhs = dens.modes->lo <= x && x <= dens.modes->hi;
    }
    if (unimodal != rhs)
        return fail("unimodal iff quasi-concave density plus one atom at a mode",
                    "unimodal=" + str(unimodal) + " density=" + str(dens.holds) + " atoms=" + std::to_string(atoms.size()));
    return pass();
}

LawOutcome locally_finite(const PiecewiseMonotone& g) {
    for (auto* law : {&main_equivalence, &decomposition}) {
        auto out = law(g);
        if (!out.holds) return out;
    }
    auto out = qf_absolutely_continuous(g, false);
    return out.applicable ? out : pass();
}

}  // namespace

const std::vector<std::string>& law_ids() {
    static const std::vector<std::string> ids{"GALOIS",  "DOUBLE_INV", "PUSH_FWD", "PUSH_CONT", "CONT_EQUIV", "RN_LEMMA",
                                              "AC_EQUIV", "INV_RULE",   "QF_AC",    "MAIN_EQUIV", "DECOMP",     "GEN_LOCFIN"};
    return ids;
}

LawOutcome check_instance_unguarded(std::string_view law, const PiecewiseMonotone& g, bool expect_unimodal) {
    if (law == "GALOIS") return galois(g);
    if (law == "DOUBLE_INV") return double_inverse(g);
    if (law == "PUSH_FWD") return push_forward(g);
    if (law == "PUSH_CONT") return push_continuous(g);
    if (law == "CONT_EQUIV") return continuity_equivalence(g);
    if (law == "RN_LEMMA") return radon_nikodym(g);
    if (law == "AC_EQUIV") return abs_cont_equivalence(g);
    if (law == "INV_RULE") return inverse_rule(g);
    if (law == "QF_AC") return qf_absolutely_continuous(g, expect_unimodal);
    if (law == "MAIN_EQUIV") return main_equivalence(g);
    if (law == "DECOMP") return decomposition(g);
    if (law == "GEN_LOCFIN") return locally_finite(g);
    throw Error(ErrorKind::UnknownLaw, "unknown law '" + std::string(law) + "'");
}

LawOutcome check_instance(std::string_view law_id, const PiecewiseMonotone& g) {
    try {
        return check_instance_unguarded(law_id, g, false);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnknownLaw) throw;
        return fail("no error", e.what());
    }
}

}  // namespace monoinv
