#include "monoinv/measure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace monoinv {

namespace {

ExtendedReal length(const ExtendedReal& a, const ExtendedReal& b) {
    if (!a.is_finite() || !b.is_finite()) return ExtendedReal::pos_inf();
    return ExtendedReal(Rational(b.value() - a.value()));
}

ExtendedReal add(const ExtendedReal& a, const ExtendedReal& b) {
    if (!a.is_finite() || !b.is_finite()) return ExtendedReal::pos_inf();
    return ExtendedReal(Rational(a.value() + b.value()));
}

// Densities summed over the elementary intervals cut out by all endpoints.
std::vector<UniformPiece> overlay(const std::vector<UniformPiece>& a, const std::vector<UniformPiece>& b) {
    std::set<ExtendedReal> cuts;
    for (const auto* v : {&a, &b})
        for (const auto& p : *v) {
            cuts.insert(p.lo);
            cuts.insert(p.hi);
        }
    std::vector<UniformPiece> out;
    for (auto it = cuts.begin(); it != cuts.end() && std::next(it) != cuts.end(); ++it) {
        ExtendedReal lo = *it, hi = *std::next(it);
        Rational d = 0;
        for (const auto* v : {&a, &b})
            for (const auto& p : *v)
                if (p.lo <= lo && hi <= p.hi) d += p.density;
        if (d > 0) out.push_back({lo, hi, d});
    }
    return out;
}

}  // namespace

PiecewiseMeasure::PiecewiseMeasure(Interval carrier, std::vector<Atom> atoms, std::vector<UniformPiece> pieces)
    : carrier_(std::move(carrier)) {
    if (!carrier_.is_open() || carrier_.empty())
        throw Error(ErrorKind::InvalidMeasure, "carrier must be a nonempty open interval");
    for (const auto& a : atoms) {
        if (a.mass <= 0) throw Error(ErrorKind::InvalidMeasure, "atom mass must be positive");
        if (!carrier_.contains(a.location))
            throw Error(ErrorKind::InvalidMeasure, "atom at " + to_string(a.location) + " outside the carrier");
    }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.location < y.location; });
    for (auto& a : atoms) {
        if (!atoms_.empty() && atoms_.back().location == a.location)
            atoms_.back().mass += a.mass;
        else
            atoms_.push_back(std::move(a));
    }

    for (const auto& p : pieces) {
        if (p.density <= 0) throw Error(ErrorKind::InvalidMeasure, "piece density must be positive");
        if (!(p.lo < p.hi)) throw Error(ErrorKind::InvalidMeasure, "piece (" + to_string(p.lo) + ", " + to_string(p.hi) + ") is empty");
        if (!carrier_.contains(Interval::open(p.lo, p.hi)))
            throw Error(ErrorKind::InvalidMeasure, "piece (" + to_string(p.lo) + ", " + to_string(p.hi) + ") outside the carrier");
    }
    std::sort(pieces.begin(), pieces.end(), [](const UniformPiece& x, const UniformPiece& y) { return x.lo < y.lo; });
    for (auto& p : pieces) {
        if (!pieces_.empty()) {
            auto& last = pieces_.back();
            if (p.lo < last.hi) throw Error(ErrorKind::InvalidMeasure, "overlapping pieces at " + to_string(p.lo));
            if (p.lo == last.hi && p.density == last.density) {
                last.hi = p.hi;
                continue;
            }
        }
        pieces_.push_back(std::move(p));
    }
}

PiecewiseMeasure PiecewiseMeasure::zero(Interval carrier) { return PiecewiseMeasure(std::move(carrier), {}, {}); }

PiecewiseMeasure PiecewiseMeasure::lebesgue(Interval carrier, const Interval& support) {
    if (support.empty()) return zero(std::move(carrier));
    return PiecewiseMeasure(std::move(carrier), {}, {UniformPiece{support.lo, support.hi, 1}});
}

ExtendedReal PiecewiseMeasure::measure_of(const Interval& set) const {
    ExtendedReal total(0);
    if (set.empty()) return total;
    for (const auto& a : atoms_)
        if (set.contains(a.location)) total = add(total, a.mass);
    for (const auto& p : pieces_) {
        ExtendedReal lo = std::max(p.lo, set.lo);
        ExtendedReal hi = std::min(p.hi, set.hi);
        if (!(lo < hi)) continue;
        ExtendedReal len = length(lo, hi);
        total = add(total, len.is_finite() ? ExtendedReal(Rational(len.value() * p.density)) : len);
    }
    return total;
}

PiecewiseMeasure operator+(const PiecewiseMeasure& a, const PiecewiseMeasure& b) {
    if (!(a.carrier() == b.carrier())) throw Error(ErrorKind::CarrierMismatch, "sum of measures on different carriers");
    std::vector<Atom> atoms = a.atoms();
    atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
    return PiecewiseMeasure(a.carrier(), std::move(atoms), overlay(a.pieces(), b.pieces()));
}

PiecewiseMeasure associated_measure(const PiecewiseMonotone& g) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < g.knots().size(); ++i)
        if (g.is_jump(i)) atoms.push_back({g.knots()[i], g.right_limit(i) - g.left_limit(i)});
    std::vector<UniformPiece> pieces;
    for (std::size_t i = 0; i < g.segment_count(); ++i)
        if (g.pieces()[i].slope > 0) pieces.push_back({g.segment_lo(i), g.segment_hi(i), g.pieces()[i].slope});
    return PiecewiseMeasure(g.regular_domain(), std::move(atoms), std::move(pieces));
}

PiecewiseMonotone distribution_function(const PiecewiseMeasure& m, const Rational& anchor) {
    if (!m.carrier().contains(anchor))
        throw Error(ErrorKind::AnchorOutsideCarrier, to_string(anchor) + " is not in " + to_string(m.carrier()));
    if (m.is_zero()) throw Error(ErrorKind::ZeroMeasure, "the zero measure has no distribution function");

    std::map<Rational, Rational> jump;  // knot -> atom mass (possibly 0)
    for (const auto& a : m.atoms()) jump[a.location] += a.mass;
    for (const auto& p : m.pieces()) {
        if (p.lo.is_finite() && m.carrier().contains(p.lo.value())) jump.try_emplace(p.lo.value(), 0);
        if (p.hi.is_finite() && m.carrier().contains(p.hi.value())) jump.try_emplace(p.hi.value(), 0);
    }
    std::vector<Rational> knots;
    for (const auto& [x, mass] : jump) knots.push_back(x);

    auto slope_on = [&](const ExtendedReal& a, const ExtendedReal& b) {
        for (const auto& p : m.pieces())
            if (p.lo <= a && b <= p.hi) return p.density;
        return Rational(0);
    };
    std::vector<Affine> pieces;
    const ExtendedReal lo = m.carrier().lo, hi = m.carrier().hi;
    for (std::size_t i = 0; i <= knots.size(); ++i) {
        ExtendedReal a = i == 0 ? lo : ExtendedReal(knots[i - 1]);
        ExtendedReal b = i == knots.size() ? hi : ExtendedReal(knots[i]);
        Rational s = slope_on(a, b);
        Rational c = 0;
        if (i > 0) {
            const Rational& x = knots[i - 1];
            Rational right = pieces.back().at(x) + jump[x];
            c = right - s * x;
        }
        pieces.push_back({s, c});
    }
    // Shift so that G(anchor+) = 0.
    auto k = std::upper_bound(knots.begin(), knots.end(), anchor) - knots.begin();
    Rational shift = pieces[static_cast<std::size_t>(k)].at(anchor);
    for (auto& p : pieces) p.intercept -= shift;
    return PiecewiseMonotone::from_pieces(lo, hi, std::move(knots), std::move(pieces));
}

LebesgueDecomposition lebesgue_decompose(const PiecewiseMeasure& m) {
    return {PiecewiseMeasure(m.carrier(), {}, m.pieces()), PiecewiseMeasure(m.carrier(), m.atoms(), {})};
}

StepFunction density(const PiecewiseMeasure& m) {
    if (!m.atoms().empty())
        throw Error(ErrorKind::NotAbsolutelyContinuous, "measure has an atom at " + to_string(m.atoms().front().location));
    std::vector<Rational> knots;
    std::vector<Rational> values{0};
    auto inside = [&](const ExtendedReal& x) { return x.is_finite() && m.carrier().contains(x.value()); };
    for (const auto& p : m.pieces()) {
        if (!inside(p.lo) || (!knots.empty() && ExtendedReal(knots.back()) == p.lo)) {
            values.back() = p.density;  // starts at the carrier end or where the previous piece stopped
        } else {
            knots.push_back(p.lo.value());
            values.push_back(p.density);
        }
        if (inside(p.hi)) {
            knots.push_back(p.hi.value());
            values.push_back(0);
        }
    }
    return StepFunction(m.carrier(), std::move(knots), std::move(values));
}

PiecewiseMeasure pushforward(const PiecewiseMeasure& m, const PiecewiseMonotone& t) {
    if (!t.regular_domain().contains(m.carrier()))
        throw Error(ErrorKind::CarrierMismatch, to_string(m.carrier()) + " is not inside " + to_string(t.regular_domain()));
    Interval carrier = inverse_regular_domain(t);
    std::vector<Atom> atoms;
    std::vector<UniformPiece> pieces;
    auto put_atom = [&](const Rational& at, const Rational& mass) {
        if (!carrier.contains(at))
            throw Error(ErrorKind::CarrierMismatch, "mass lands on the boundary of " + to_string(carrier));
        atoms.push_back({at, mass});
    };
    for (const auto& a : m.atoms()) {
        if (auto k = t.knot_index(a.location); k && t.is_jump(*k))
            throw Error(ErrorKind::VersionAmbiguous, "atom at " + to_string(a.location) + " sits on a jump of the map");
        put_atom(eval(t, a.location, Version::Right).value(), a.mass);
    }
    for (const auto& p : m.pieces()) {
        for (std::size_t i = 0; i < t.segment_count(); ++i) {
            ExtendedReal a = std::max(p.lo, t.segment_lo(i));
            ExtendedReal b = std::min(p.hi, t.segment_hi(i));
            if (!(a < b)) continue;
            const Affine& f = t.pieces()[i];
            if (f.slope == 0) {
                if (!a.is_finite() || !b.is_finite())
                    throw Error(ErrorKind::CarrierMismatch, "infinite mass collapses onto " + to_string(f.intercept));
                put_atom(f.intercept, p.density * (b.value() - a.value()));
                continue;
            }
            pieces.push_back(
                {affine_image(f.slope, f.intercept, a), affine_image(f.slope, f.intercept, b), p.density / f.slope});
        }
    }
    return PiecewiseMeasure(carrier, std::move(atoms), std::move(pieces));
}

PiecewiseMeasure lebesgue_restricted(const PiecewiseMonotone& g, LebesgueMass which) {
    if (which == LebesgueMass::Own) return PiecewiseMeasure::lebesgue(g.regular_domain(), mass_interval(g));
    return PiecewiseMeasure::lebesgue(inverse_regular_domain(g), inverse_mass_interval(g));
}

bool is_abs_cont_wrt(const PiecewiseMeasure& a, const PiecewiseMeasure& b) {
    if (!(a.carrier() == b.carrier())) throw Error(ErrorKind::CarrierMismatch, "absolute continuity across carriers");
    for (const auto& atom : a.atoms()) {
        bool found = std::any_of(b.atoms().begin(), b.atoms().end(),
                                 [&](const Atom& other) { return other.location == atom.location; });
        if (!found) return false;
    }
    // Connected components of b's pieces; single shared endpoints are null.
    std::vector<std::pair<ExtendedReal, ExtendedReal>> cover;
    for (const auto& p : b.pieces()) {
        if (!cover.empty() && cover.back().second == p.lo)
            cover.back().second = p.hi;
        else
            cover.emplace_back(p.lo, p.hi);
    }
    for (const auto& p : a.pieces()) {
        bool inside = std::any_of(cover.begin(), cover.end(),
                                  [&](const auto& c) { return c.first <= p.lo && p.hi <= c.second; });
        if (!inside) return false;
    }
    return true;
}

AbsContinuityVerdicts abs_continuity_verdicts(const PiecewiseMonotone& g, const Interval& interval) {
    if (!interval.is_open() || interval.empty() || !inverse_regular_domain(g).contains(interval))
        throw Error(ErrorKind::PreconditionFailed, to_string(interval) + " is not an open subinterval of I_H");
    AbsContinuityVerdicts v;
    v.preimage = preimage_interior(g, interval);

    v.inverse_continuous = true;
    auto inverse = inverse_class(g);
    if (auto* h = std::get_if<PiecewiseMonotone>(&inverse)) {
        for (std::size_t i = 0; i < h->knots().size(); ++i)
            if (interval.contains(h->knots()[i]) && h->is_jump(i)) v.inverse_continuous = false;
    }

    v.positive_density = true;
    for (std::size_t i = 0; i < g.segment_count(); ++i)
        if (g.pieces()[i].slope == 0 && Interval::open(g.segment_lo(i), g.segment_hi(i)).overlaps(v.preimage))
            v.positive_density = false;

    v.lebesgue_dominated =
        is_abs_cont_wrt(PiecewiseMeasure::lebesgue(g.regular_domain(), v.preimage), associated_measure(g));
    return v;
}

bool gen_inverse_abs_cont(const PiecewiseMonotone& g, const Interval& interval) {
    auto v = abs_continuity_verdicts(g, interval);
    if (v.inverse_continuous != v.positive_density || v.positive_density != v.lebesgue_dominated)
        throw Error(ErrorKind::InternalInconsistency,
                    "absolute-continuity criteria disagree on " + to_string(interval) + ": " +
                        std::to_string(v.inverse_continuous) + std::to_string(v.positive_density) +
                        std::to_string(v.lebesgue_dominated));
    return v.inverse_continuous;
}

InverseRuleReport inverse_rule_check(const PiecewiseMonotone& g) {
    Interval domain = inverse_regular_domain(g);
    if (!gen_inverse_abs_cont(g, domain))
        throw Error(ErrorKind::PreconditionFailed, "generalized inverse is not absolutely continuous");
    InverseRuleReport report;
    report.mass_interval = mass_interval(g);
    if (report.mass_interval.empty()) return report;

    auto h = inverse_class(g);
    StepFunction h_prime = std::holds_alternative<PiecewiseMonotone>(h)
                               ? derivative(std::get<PiecewiseMonotone>(h))
                               : StepFunction::constant(domain, 0);
    StepFunction composed = step_compose(h_prime, g);
    if (!(composed.carrier() == report.mass_interval))
        throw Error(ErrorKind::InternalInconsistency, "h' o G lives on " + to_string(composed.carrier()) +
                                                          ", expected " + to_string(report.mass_interval));

    std::set<Rational> cuts(composed.knots().begin(), composed.knots().end());
    for (const auto& k : g.knots())
        if (report.mass_interval.contains(k)) cuts.insert(k);
    ExtendedReal from = report.mass_interval.lo;
    auto emit = [&](const ExtendedReal& to) {
        Rational x = interior_point(from, to);
        InverseRuleSegment s{Interval::open(from, to), g.pieces()[g.segment_of(x)].slope, composed.value_at(x), false};
        s.holds = s.g_abs * s.h_prime_at_g == 1;
        report.holds = report.holds && s.holds;
        report.segments.push_back(std::move(s));
        from = to;
    };
    for (const auto& c : cuts) emit(ExtendedReal(c));
    emit(report.mass_interval.hi);
    return report;
}

}  // namespace monoinv
