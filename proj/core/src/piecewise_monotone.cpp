#include "monoinv/piecewise_monotone.hpp"

#include <algorithm>
#include <cassert>

namespace monoinv {

namespace {

ExtendedReal min_e(const ExtendedReal& a, const ExtendedReal& b) { return a < b ? a : b; }
ExtendedReal max_e(const ExtendedReal& a, const ExtendedReal& b) { return a < b ? b : a; }

}  // namespace

PiecewiseMonotone PiecewiseMonotone::from_pieces(ExtendedReal lo, ExtendedReal hi, std::vector<Rational> knots,
                                                 std::vector<Affine> pieces) {
    if (lo.is_pos_inf() || hi.is_neg_inf() || !(lo < hi))
        throw Error(ErrorKind::InvalidInterval, "regular domain (" + to_string(lo) + ", " + to_string(hi) + ") is empty");
    if (pieces.size() != knots.size() + 1)
        throw Error(ErrorKind::InvalidInterval, "need exactly one affine piece more than knots");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        ExtendedReal x(knots[i]);
        if (!(lo < x && x < hi)) throw Error(ErrorKind::UnorderedBreakpoints, "knot " + to_string(x) + " outside domain");
        if (i > 0 && !(knots[i - 1] < knots[i])) throw Error(ErrorKind::UnorderedBreakpoints, "knots not increasing");
    }
    for (const auto& p : pieces)
        if (p.slope < 0) throw Error(ErrorKind::NonMonotone, "negative slope " + to_string(p.slope));
    for (std::size_t i = 0; i < knots.size(); ++i)
        if (pieces[i].at(knots[i]) > pieces[i + 1].at(knots[i]))
            throw Error(ErrorKind::NonMonotone, "downward jump at " + to_string(knots[i]));

    PiecewiseMonotone g;
    g.lo_ = std::move(lo);
    g.hi_ = std::move(hi);
    g.pieces_.push_back(std::move(pieces[0]));
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (pieces[i + 1] == g.pieces_.back()) continue;
        g.knots_.push_back(std::move(knots[i]));
        g.pieces_.push_back(std::move(pieces[i + 1]));
    }
    if (g.pieces_.size() == 1 && g.pieces_[0].slope == 0)
        throw Error(ErrorKind::ConstantFunction, "constant on its whole regular domain");
    return g;
}

PiecewiseMonotone PiecewiseMonotone::from_breakpoints(const Interval& domain, const std::vector<Breakpoint>& breakpoints,
                                                      const std::vector<Rational>& slopes) {
    if (!domain.is_open()) throw Error(ErrorKind::InvalidInterval, "regular domain must be open");
    if (breakpoints.empty()) throw Error(ErrorKind::InconsistentBreakpoints, "need at least one breakpoint");
    if (slopes.size() != breakpoints.size() + 1)
        throw Error(ErrorKind::InconsistentBreakpoints, "need one slope more than breakpoints");
    std::vector<Rational> knots;
    std::vector<Affine> pieces;
    const auto& first = breakpoints.front();
    pieces.push_back({slopes[0], first.left_limit - slopes[0] * first.x});
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        const auto& b = breakpoints[i];
        knots.push_back(b.x);
        Affine next{slopes[i + 1], b.right_limit - slopes[i + 1] * b.x};
        if (i + 1 < breakpoints.size() && next.at(breakpoints[i + 1].x) != breakpoints[i + 1].left_limit)
            throw Error(ErrorKind::InconsistentBreakpoints,
                        "left limit at " + to_string(breakpoints[i + 1].x) + " does not follow from the slope");
        pieces.push_back(std::move(next));
    }
    return from_pieces(domain.lo, domain.hi, std::move(knots), std::move(pieces));
}

PiecewiseMonotone PiecewiseMonotone::affine(const Interval& domain, Rational slope, Rational intercept) {
    if (!domain.is_open()) throw Error(ErrorKind::InvalidInterval, "regular domain must be open");
    return from_pieces(domain.lo, domain.hi, {}, {Affine{std::move(slope), std::move(intercept)}});
}

PiecewiseMonotone PiecewiseMonotone::identity(const Interval& domain) { return affine(domain, 1, 0); }

ExtendedReal PiecewiseMonotone::segment_lo(std::size_t i) const { return i == 0 ? lo_ : ExtendedReal(knots_[i - 1]); }

ExtendedReal PiecewiseMonotone::segment_hi(std::size_t i) const {
    return i == knots_.size() ? hi_ : ExtendedReal(knots_[i]);
}

std::vector<Breakpoint> PiecewiseMonotone::breakpoints() const {
    std::vector<Breakpoint> out;
    out.reserve(knots_.size());
    for (std::size_t i = 0; i < knots_.size(); ++i) out.push_back({knots_[i], left_limit(i), right_limit(i)});
    return out;
}

std::size_t PiecewiseMonotone::segment_of(const Rational& x) const {
    return static_cast<std::size_t>(std::upper_bound(knots_.begin(), knots_.end(), x) - knots_.begin());
}

std::optional<std::size_t> PiecewiseMonotone::knot_index(const Rational& x) const {
    auto it = std::lower_bound(knots_.begin(), knots_.end(), x);
    if (it == knots_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - knots_.begin());
}

ExtendedReal PiecewiseMonotone::lower_limit() const {
    const Affine& p = pieces_.front();
    if (lo_.is_finite()) return ExtendedReal(p.at(lo_.value()));
    return p.slope > 0 ? ExtendedReal::neg_inf() : ExtendedReal(p.intercept);
}

ExtendedReal PiecewiseMonotone::upper_limit() const {
    const Affine& p = pieces_.back();
    if (hi_.is_finite()) return ExtendedReal(p.at(hi_.value()));
    return p.slope > 0 ? ExtendedReal::pos_inf() : ExtendedReal(p.intercept);
}

void validate(const PiecewiseMonotone& g) {
    auto again = PiecewiseMonotone::from_pieces(g.lo(), g.hi(), {g.knots().begin(), g.knots().end()},
                                                {g.pieces().begin(), g.pieces().end()});
    if (!(again == g)) throw Error(ErrorKind::InconsistentBreakpoints, "representation is not canonical");
}

ExtendedReal eval(const PiecewiseMonotone& g, const Rational& x, Version version) {
    ExtendedReal e(x);
    if (e < g.lo()) return ExtendedReal::neg_inf();
    if (e > g.hi()) return ExtendedReal::pos_inf();
    if (e == g.lo()) return version == Version::Left ? ExtendedReal::neg_inf() : g.lower_limit();
    if (e == g.hi()) return version == Version::Right ? ExtendedReal::pos_inf() : g.upper_limit();
    if (auto k = g.knot_index(x)) return version == Version::Left ? g.left_limit(*k) : g.right_limit(*k);
    return g.pieces()[g.segment_of(x)].at(x);
}

namespace {

// One piece of the flipped graph: `map` on the value interval (from, to).
struct Component {
    ExtendedReal from;
    ExtendedReal to;
    Affine map;
};

std::vector<Component> flip_graph(const PiecewiseMonotone& g) {
    std::vector<Component> out;
    if (g.lo().is_finite()) out.push_back({ExtendedReal::neg_inf(), g.lower_limit(), Affine{0, g.lo().value()}});
    for (std::size_t i = 0; i < g.segment_count(); ++i) {
        const Affine& p = g.pieces()[i];
        if (p.slope > 0) {
            Rational inv = 1 / p.slope;
            out.push_back({affine_image(p.slope, p.intercept, g.segment_lo(i)),
                           affine_image(p.slope, p.intercept, g.segment_hi(i)), Affine{inv, -p.intercept * inv}});
        }
        if (i + 1 < g.segment_count() && g.is_jump(i))
            out.push_back({g.left_limit(i), g.right_limit(i), Affine{0, g.knots()[i]}});
    }
    if (g.hi().is_finite()) out.push_back({g.upper_limit(), ExtendedReal::pos_inf(), Affine{0, g.hi().value()}});
    return out;
}

}  // namespace

InverseClass inverse_class(const PiecewiseMonotone& g) {
    auto comps = flip_graph(g);
    assert(!comps.empty());
    if (comps.size() == 1 && comps[0].map.slope == 0)
        return DegenerateInverse{Interval::open(comps[0].from, comps[0].to), comps[0].map.intercept};
    std::vector<Rational> knots;
    std::vector<Affine> pieces;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i > 0) {
            assert(comps[i - 1].to == comps[i].from);
            knots.push_back(comps[i].from.value());
        }
        pieces.push_back(comps[i].map);
    }
    return PiecewiseMonotone::from_pieces(comps.front().from, comps.back().to, std::move(knots), std::move(pieces));
}

PiecewiseMonotone generalized_inverse(const PiecewiseMonotone& g) {
    auto h = inverse_class(g);
    if (auto* d = std::get_if<DegenerateInverse>(&h))
        throw Error(ErrorKind::ConstantFunction,
                    "generalized inverse is constant " + to_string(d->value) + " on " + to_string(d->domain));
    return std::get<PiecewiseMonotone>(std::move(h));
}

Interval regular_domain(const PiecewiseMonotone& g) { return g.regular_domain(); }

Interval mass_interval(const PiecewiseMonotone& g) {
    auto k = g.knots();
    ExtendedReal lo = g.lo().is_neg_inf() && g.pieces().front().slope == 0 ? ExtendedReal(k.front()) : g.lo();
    ExtendedReal hi = g.hi().is_pos_inf() && g.pieces().back().slope == 0 ? ExtendedReal(k.back()) : g.hi();
    return Interval::open(lo, hi);
}

Interval supporting_interval(const PiecewiseMonotone& g) {
    auto k = g.knots();
    ExtendedReal lo = g.pieces().front().slope == 0 ? ExtendedReal(k.front()) : g.lo();
    ExtendedReal hi = g.pieces().back().slope == 0 ? ExtendedReal(k.back()) : g.hi();
    return Interval::closed(lo, hi);
}

Interval inverse_regular_domain(const PiecewiseMonotone& g) {
    return Interval::open(g.lo().is_finite() ? ExtendedReal::neg_inf() : g.lower_limit(),
                          g.hi().is_finite() ? ExtendedReal::pos_inf() : g.upper_limit());
}

Interval inverse_mass_interval(const PiecewiseMonotone& g) { return Interval::open(g.lower_limit(), g.upper_limit()); }

PiecewiseMonotone restrict(const PiecewiseMonotone& g, const Interval& interval) {
    if (interval.empty()) throw Error(ErrorKind::EmptyInterval, "cannot restrict to " + to_string(interval));
    if (!interval.is_open() || !g.regular_domain().contains(interval))
        throw Error(ErrorKind::InvalidInterval, to_string(interval) + " is not an open subinterval of the domain");
    std::vector<Rational> knots;
    std::vector<Affine> pieces;
    for (std::size_t i = 0; i < g.segment_count(); ++i) {
        if (!Interval::open(g.segment_lo(i), g.segment_hi(i)).overlaps(interval)) continue;
        if (!pieces.empty()) knots.push_back(g.segment_lo(i).value());
        pieces.push_back(g.pieces()[i]);
    }
    return PiecewiseMonotone::from_pieces(interval.lo, interval.hi, std::move(knots), std::move(pieces));
}

bool versions_equal(const PiecewiseMonotone& a, const PiecewiseMonotone& b) { return a == b; }

std::vector<Interval> constancy_set(const PiecewiseMonotone& g) {
    Interval m = mass_interval(g);
    std::vector<Interval> out;
    for (std::size_t i = 0; i < g.segment_count(); ++i) {
        if (g.pieces()[i].slope != 0) continue;
        ExtendedReal a = max_e(g.segment_lo(i), m.lo);
        ExtendedReal b = min_e(g.segment_hi(i), m.hi);
        if (a < b) out.push_back(Interval::open(a, b));
    }
    return out;
}

std::vector<Rational> jump_locations(const PiecewiseMonotone& g) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < g.knots().size(); ++i)
        if (g.is_jump(i)) out.push_back(g.knots()[i]);
    return out;
}

bool has_jump(const PiecewiseMonotone& g) {
    for (std::size_t i = 0; i < g.knots().size(); ++i)
        if (g.is_jump(i)) return true;
    return false;
}

PiecewiseMonotone extend_to_line(const PiecewiseMonotone& g) {
    std::vector<Rational> knots(g.knots().begin(), g.knots().end());
    std::vector<Affine> pieces(g.pieces().begin(), g.pieces().end());
    if (g.lo().is_finite()) {
        knots.insert(knots.begin(), g.lo().value());
        pieces.insert(pieces.begin(), Affine{0, g.lower_limit().value()});
    }
    if (g.hi().is_finite()) {
        knots.push_back(g.hi().value());
        pieces.push_back(Affine{0, g.upper_limit().value()});
    }
    return PiecewiseMonotone::from_pieces(ExtendedReal::neg_inf(), ExtendedReal::pos_inf(), std::move(knots),
                                          std::move(pieces));
}

PiecewiseMonotone mirror(const PiecewiseMonotone& g) {
    std::vector<Rational> knots;
    std::vector<Affine> pieces;
    for (auto it = g.knots().rbegin(); it != g.knots().rend(); ++it) knots.push_back(-*it);
    for (auto it = g.pieces().rbegin(); it != g.pieces().rend(); ++it) pieces.push_back({it->slope, -it->intercept});
    return PiecewiseMonotone::from_pieces(-g.hi(), -g.lo(), std::move(knots), std::move(pieces));
}

ExtendedReal lower_inverse(const PiecewiseMonotone& g, const ExtendedReal& t) {
    if (t.is_neg_inf()) return t;
    if (t.is_pos_inf()) return g.hi();  // +inf when the domain is unbounded above
    const Rational& v = t.value();
    ExtendedReal below = g.lower_limit();
    if (t <= below) return g.lo();
    for (std::size_t i = 0; i < g.segment_count(); ++i) {
        const Affine& p = g.pieces()[i];
        ExtendedReal b = g.segment_hi(i);
        if (p.slope > 0) {
            ExtendedReal x((v - p.intercept) / p.slope);
            if (x < b) return x;
        }
        if (i + 1 < g.segment_count() && v <= g.right_limit(i)) return b;
    }
    return g.hi();
}

ExtendedReal upper_inverse(const PiecewiseMonotone& g, const ExtendedReal& t) { return -lower_inverse(mirror(g), -t); }

Interval preimage_interior(const PiecewiseMonotone& g, const Interval& interval) {
    ExtendedReal a = upper_inverse(g, interval.lo);
    ExtendedReal b = lower_inverse(g, interval.hi);
    if (!(a < b)) return Interval::open(a, a);
    return Interval::open(a, b);
}

}  // namespace monoinv
