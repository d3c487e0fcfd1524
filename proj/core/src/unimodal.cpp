#include "monoinv/unimodal.hpp"

#include <functional>

namespace monoinv {

namespace {

struct Run {
    std::vector<Rational> values;
    std::vector<ExtendedReal> bounds;  // values.size() + 1 segment ends
};

Run segments_of(const StepFunction& f, bool extend_by_zero) {
    Run r;
    if (extend_by_zero && f.carrier().lo.is_finite()) {
        r.values.push_back(0);
        r.bounds.push_back(ExtendedReal::neg_inf());
    }
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
        r.values.push_back(f.values()[i]);
        r.bounds.push_back(f.segment_lo(i));
    }
    r.bounds.push_back(f.carrier().hi);
    if (extend_by_zero && f.carrier().hi.is_finite()) {
        r.values.push_back(0);
        r.bounds.push_back(ExtendedReal::pos_inf());
    }
    return r;
}

// Up to the first extreme value the sequence moves towards it (better), after
// the last one away from it, and every value in between is extreme.
ShapeVerdict unimodal_run(const Run& r, const std::function<bool(const Rational&, const Rational&)>& better) {
    const auto& v = r.values;
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (better(v[i], v[best])) best = i;
    std::size_t first = v.size(), last = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == v[best]) {
            first = std::min(first, i);
            last = i;
        }
    for (std::size_t i = 0; i < first; ++i)
        if (better(v[i], v[i + 1])) return {};
    for (std::size_t i = first; i <= last; ++i)
        if (v[i] != v[best]) return {};
    for (std::size_t i = last; i + 1 < v.size(); ++i)
        if (better(v[i + 1], v[i])) return {};
    return {true, ModalInterval{r.bounds[first], r.bounds[last + 1]}};
}

// Indices P and q on a slope sequence: s_0..s_P ordered by `up`, s_q..s_k by `down`.
std::pair<std::size_t, std::size_t> split_indices(const std::vector<Rational>& s,
                                                  const std::function<bool(const Rational&, const Rational&)>& ok) {
    std::size_t p = 0;
    while (p + 1 < s.size() && ok(s[p], s[p + 1])) ++p;
    std::size_t q = s.size() - 1;
    while (q > 0 && ok(s[q], s[q - 1])) --q;
    return {p, q};
}

std::vector<Rational> slopes(const PiecewiseMonotone& g) {
    std::vector<Rational> out;
    for (const auto& p : g.pieces()) out.push_back(p.slope);
    return out;
}

// Segment ends: X(0) = lo, X(i) = knot i-1, X(k+1) = hi.
ExtendedReal end_point(const PiecewiseMonotone& g, std::size_t i) {
    if (i == 0) return g.lo();
    if (i == g.segment_count()) return g.hi();
    return ExtendedReal(g.knots()[i - 1]);
}

ExtendedReal right_at(const PiecewiseMonotone& q, const ExtendedReal& a) {
    if (a.is_neg_inf()) return q.lower_limit();
    if (a.is_pos_inf()) return ExtendedReal::pos_inf();
    return eval(q, a.value(), Version::Right);
}

ExtendedReal left_at(const PiecewiseMonotone& q, const ExtendedReal& a) {
    if (a.is_pos_inf()) return q.upper_limit();
    if (a.is_neg_inf()) return ExtendedReal::neg_inf();
    return eval(q, a.value(), Version::Left);
}

}  // namespace

ShapeVerdict is_quasi_concave(const StepFunction& f, bool extend_by_zero) {
    return unimodal_run(segments_of(f, extend_by_zero), std::greater<Rational>());
}

ShapeVerdict is_quasi_convex(const StepFunction& f) {
    return unimodal_run(segments_of(f, false), std::less<Rational>());
}

ShapeVerdict cdf_shape_check(const PiecewiseMonotone& F) {
    PiecewiseMonotone e = extend_to_line(F);
    auto s = slopes(e);
    auto [p, q] = split_indices(s, std::less_equal<Rational>());
    auto jumps = jump_locations(e);
    if (jumps.size() > 1) return {};
    if (jumps.size() == 1) {
        std::size_t j = *e.knot_index(jumps.front()) + 1;
        if (j < q || j - 1 > p) return {};
        return {true, ModalInterval{jumps.front(), jumps.front()}};
    }
    if (q > p + 1) return {};
    return {true, ModalInterval{end_point(e, q), end_point(e, p + 1)}};
}

ShapeVerdict qf_shape_check(const PiecewiseMonotone& Q) {
    if (has_jump(Q)) return {};
    auto s = slopes(Q);
    auto [p, q] = split_indices(s, std::greater_equal<Rational>());
    if (q > p + 1) return {};
    return {true, ModalInterval{end_point(Q, q), end_point(Q, p + 1)}};
}

InverseClass quantile_function(const PiecewiseMonotone& F) { return inverse_class(extend_to_line(F)); }

StepFunction quantile_density(const PiecewiseMonotone& F) {
    auto q = quantile_function(F);
    if (auto* d = std::get_if<DegenerateInverse>(&q)) return StepFunction::constant(d->domain, 0);
    const auto& Q = std::get<PiecewiseMonotone>(q);
    if (has_jump(Q))
        throw Error(ErrorKind::QfNotAbsolutelyContinuous,
                    "quantile function jumps at " + to_string(jump_locations(Q).front()));
    return derivative(Q);
}

Classification classify(const PiecewiseMonotone& F) {
    Classification c;
    auto cdf = cdf_shape_check(F);
    c.cdf_unimodal = cdf.holds;
    c.modes = cdf.modes;

    auto mu = associated_measure(F);
    auto parts = lebesgue_decompose(mu);
    auto dens = is_quasi_concave(density(parts.abs), true);
    c.dens_unimodal_abs_part = dens.holds;
    c.abs_modes = dens.modes;

    auto q = quantile_function(F);
    if (auto* d = std::get_if<DegenerateInverse>(&q)) {
        c.qf_absolutely_continuous = true;
        c.quantile_unimodal = true;
        c.quantile_modes = ModalInterval{d->domain.lo, d->domain.hi};
    } else {
        c.qf_absolutely_continuous = !has_jump(std::get<PiecewiseMonotone>(q));
        if (c.qf_absolutely_continuous) {
            auto v = is_quasi_convex(quantile_density(F));
            c.quantile_unimodal = v.holds;
            c.quantile_modes = v.modes;
        }
    }

    if (c.cdf_unimodal) {
        if (mu.atoms().size() > 1)
            throw Error(ErrorKind::InternalInconsistency, "unimodal distribution function with several atoms");
        if (!mu.atoms().empty()) c.atom_at_mode = mu.atoms().front();
        if (!c.quantile_unimodal || !c.qf_absolutely_continuous || !c.dens_unimodal_abs_part)
            throw Error(ErrorKind::InternalInconsistency, "unimodal distribution function with inconsistent verdicts");
    }
    return c;
}

bool modal_correspondence_holds(const PiecewiseMonotone& F, const Classification& c) {
    if (!c.cdf_unimodal) return true;
    if (!c.modes || !c.quantile_modes) return false;
    auto q = quantile_function(F);
    if (auto* d = std::get_if<DegenerateInverse>(&q))
        return c.modes->lo == ExtendedReal(d->value) && c.modes->hi == ExtendedReal(d->value);
    const auto& Q = std::get<PiecewiseMonotone>(q);
    return right_at(Q, c.quantile_modes->lo) == c.modes->lo && left_at(Q, c.quantile_modes->hi) == c.modes->hi;
}

}  // namespace monoinv
