#include "fixtures.hpp"

#include <random>

#include "monoinv/harness.hpp"
#include "monoinv/json.hpp"
#include "monoinv/step_function.hpp"
#include "monoinv/unimodal.hpp"

using namespace fx;

namespace {

struct Segs {
    std::vector<ExtendedReal> lo, hi;
    std::vector<Rational> v;
};

Segs segments(const StepFunction& f, bool extend_by_zero) {
    Segs s;
    if (extend_by_zero && f.carrier().lo.is_finite()) {
        s.lo.push_back(ninf());
        s.hi.push_back(f.carrier().lo);
        s.v.push_back(0);
    }
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
        s.lo.push_back(f.segment_lo(i));
        s.hi.push_back(f.segment_hi(i));
        s.v.push_back(f.values()[i]);
    }
    if (extend_by_zero && f.carrier().hi.is_finite()) {
        s.lo.push_back(f.carrier().hi);
        s.hi.push_back(pinf());
        s.v.push_back(0);
    }
    return s;
}

// f(wx + (1-w)y) >= min(f(x), f(y)): a point of segment k lies between points of i < k < j
std::optional<ModalInterval> brute_quasi_concave(const StepFunction& f, bool extend_by_zero) {
    auto s = segments(f, extend_by_zero);
    std::size_t n = s.v.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j)
            for (std::size_t k = i + 1; k < j; ++k)
                if (s.v[k] < std::min(s.v[i], s.v[j])) return std::nullopt;
    Rational best = *std::max_element(s.v.begin(), s.v.end());
    std::optional<ModalInterval> out;
    for (std::size_t i = 0; i < n; ++i)
        if (s.v[i] == best) {
            if (!out) out = ModalInterval{s.lo[i], s.hi[i]};
            out->hi = s.hi[i];
        }
    return out;
}

StepFunction negate_shift(const StepFunction& f) {
    Rational top = *std::max_element(f.values().begin(), f.values().end());
    std::vector<Rational> vals;
    for (const auto& v : f.values()) vals.push_back(top - v);
    return StepFunction(f.carrier(), {f.knots().begin(), f.knots().end()}, vals);
}

StepFunction random_step(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 7), val(0, 4), gap(1, 3), kind(0, 3);
    int n = count(rng);
    std::vector<Rational> knots;
    Rational x = q(val(rng) - 2);
    for (int i = 1; i < n; ++i) {
        knots.push_back(x);
        x += q(gap(rng), 2);
    }
    std::vector<Rational> vals;
    for (int i = 0; i < n; ++i) vals.push_back(q(val(rng)));
    ExtendedReal lo = ninf(), hi = pinf();
    int k = kind(rng);
    Rational first = knots.empty() ? q(0) : knots.front(), last = knots.empty() ? q(0) : knots.back();
    if (k & 1) lo = ExtendedReal(Rational(first - 1));
    if (k & 2) hi = ExtendedReal(Rational(last + 1));
    return StepFunction(Interval::open(lo, hi), knots, vals);
}

// Grid of a class on the real line: knots, a midpoint between neighbours, one
// point beyond each outer knot.
std::vector<Rational> grid_points(const PiecewiseMonotone& g) {
    std::vector<Rational> out;
    auto k = g.knots();
    if (k.empty()) return {q(-1), q(0), q(1)};
    out.push_back(k.front() - 1);
    for (std::size_t i = 0; i < k.size(); ++i) {
        out.push_back(k[i]);
        if (i + 1 < k.size()) out.push_back(midpoint(k[i], k[i + 1]));
    }
    out.push_back(k.back() + 1);
    return out;
}

bool chords(const std::vector<std::pair<Rational, Rational>>& pts, bool convex) {
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
        Rational s1 = (pts[i + 1].second - pts[i].second) / (pts[i + 1].first - pts[i].first);
        Rational s2 = (pts[i + 2].second - pts[i + 1].second) / (pts[i + 2].first - pts[i + 1].first);
        if (convex ? s2 < s1 : s2 > s1) return false;
    }
    return true;
}

Rational val(const PiecewiseMonotone& g, const Rational& x, Version v) { return eval(g, x, v).value(); }

// Convex and concave functions are continuous on open intervals, so a jump
// may only sit at nu itself; the chords then see the slopes.
bool cdf_admissible(const PiecewiseMonotone& F, const std::vector<Rational>& grid, const ExtendedReal& nu) {
    for (const auto& j : jump_locations(F))
        if (ExtendedReal(j) != nu) return false;
    std::vector<std::pair<Rational, Rational>> left, right;
    for (const auto& x : grid) {
        if (ExtendedReal(x) < nu) left.emplace_back(x, val(F, x, Version::Right));
        if (ExtendedReal(x) > nu) right.emplace_back(x, val(F, x, Version::Left));
    }
    if (nu.is_finite()) {
        Rational at = val(F, nu.value(), Version::Right);
        left.emplace_back(nu.value(), at);
        right.insert(right.begin(), {nu.value(), at});
    }
    return chords(left, true) && chords(right, false);
}

// continuous on both open parts and at alpha
bool qf_admissible(const PiecewiseMonotone& Q, const std::vector<Rational>& grid, const ExtendedReal& alpha) {
    if (has_jump(Q)) return false;
    std::vector<std::pair<Rational, Rational>> left, right;
    for (const auto& x : grid) {
        if (ExtendedReal(x) <= Q.lo() || ExtendedReal(x) >= Q.hi()) continue;
        if (ExtendedReal(x) <= alpha) left.emplace_back(x, val(Q, x, Version::Left));
        if (ExtendedReal(x) >= alpha) right.emplace_back(x, val(Q, x, Version::Right));
    }
    return chords(left, false) && chords(right, true);
}

std::vector<Rational> qf_grid(const PiecewiseMonotone& Q) {
    std::vector<Rational> out;
    for (std::size_t s = 0; s < Q.segment_count(); ++s) {
        auto lo = Q.segment_lo(s), hi = Q.segment_hi(s);
        if (lo.is_finite() && s > 0) out.push_back(lo.value());
        if (!lo.is_finite() && hi.is_finite()) {
            out.push_back(hi.value() - 2);
            out.push_back(hi.value() - 1);
        } else if (lo.is_finite() && hi.is_finite()) {
            Rational w = hi.value() - lo.value();
            out.push_back(lo.value() + w / 3);
            out.push_back(lo.value() + 2 * w / 3);
        } else if (lo.is_finite()) {
            out.push_back(lo.value() + 1);
            out.push_back(lo.value() + 2);
        } else {
            out.push_back(-1);
            out.push_back(1);
        }
    }
    return out;
}

template <class Admissible>
void check_against_oracle(const ShapeVerdict& v, const std::vector<ExtendedReal>& candidates, Admissible admissible) {
    bool any = false;
    for (const auto& nu : candidates) {
        bool ok = admissible(nu);
        INFO(to_string(nu));
        any = any || ok;
        if (v.holds) CHECK(ok == (v.modes->lo <= nu && nu <= v.modes->hi));
    }
    CHECK(any == v.holds);
}

}  // namespace

TEST_CASE("quasi-concave examples") {
    StepFunction f(Interval::open(e(0), e(4)), {1, 2, 3}, {1, 2, 2, 1});
    auto v = is_quasi_concave(f, false);
    REQUIRE(v.holds);
    CHECK(*v.modes == ModalInterval{e(1), e(3)});
    CHECK(brute_quasi_concave(f, false) == v.modes);

    auto fa = density(associated_measure(fix_a()));
    CHECK(!is_quasi_concave(fa, true).holds);
    StepFunction fa_inner(Interval::open(e(0), e(2)), {q(1, 2), q(3, 2)}, {1, 0, 1});
    CHECK(!is_quasi_concave(fa_inner, true).holds);

    auto c = is_quasi_concave(StepFunction::constant(Interval::open(e(0), e(1)), 1), true);
    REQUIRE(c.holds);
    CHECK(*c.modes == ModalInterval{e(0), e(1)});
}

TEST_CASE("quasi-convex examples") {
    StepFunction qd(Interval::open(e(0), e(1)), {q(1, 4), q(3, 4)}, {2, 0, 2});
    auto v = is_quasi_convex(qd);
    REQUIRE(v.holds);
    CHECK(*v.modes == ModalInterval{e(1, 4), e(3, 4)});
    CHECK(!is_quasi_convex(StepFunction(Interval::open(e(0), e(3)), {1, 2}, {1, 3, 1})).holds);
    auto single = is_quasi_convex(StepFunction::constant(Interval::open(e(0), e(1)), 5));
    REQUIRE(single.holds);
    CHECK(*single.modes == ModalInterval{e(0), e(1)});
}

TEST_CASE("random step functions against the defining inequality") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 3000; ++i) {
        auto f = random_step(rng);
        for (bool ext : {false, true}) {
            if (ext && std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return v == 0; }))
                continue;
            auto v = is_quasi_concave(f, ext);
            auto brute = brute_quasi_concave(f, ext);
            CHECK(v.holds == brute.has_value());
            if (v.holds && brute) CHECK(*v.modes == *brute);
        }
        // duality
        auto cv = is_quasi_convex(f);
        auto cc = is_quasi_concave(negate_shift(f), false);
        CHECK(cv.holds == cc.holds);
        CHECK(cv.modes == cc.modes);
    }
}

TEST_CASE("monotone step functions are quasi-convex and quasi-concave") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        auto f = random_step(rng);
        std::vector<Rational> vals(f.values().begin(), f.values().end());
        std::sort(vals.begin(), vals.end());
        if (i % 2) std::reverse(vals.begin(), vals.end());
        StepFunction m(f.carrier(), {f.knots().begin(), f.knots().end()}, vals);
        CHECK(is_quasi_convex(m).holds);
        CHECK(is_quasi_concave(m, false).holds);
    }
}

TEST_CASE("classify fixtures") {
    auto a = classify(fix_a());
    CHECK(!a.cdf_unimodal);
    CHECK(!a.quantile_unimodal);
    CHECK(!a.qf_absolutely_continuous);
    CHECK(!a.dens_unimodal_abs_part);

    auto d = classify(fix_d());
    CHECK(d.cdf_unimodal);
    CHECK(*d.modes == ModalInterval{e(1, 2), e(1, 2)});
    CHECK(*d.quantile_modes == ModalInterval{e(1, 4), e(3, 4)});
    REQUIRE(d.atom_at_mode.has_value());
    CHECK(*d.atom_at_mode == Atom{q(1, 2), q(1, 2)});
    CHECK(d.qf_absolutely_continuous);
    CHECK(d.dens_unimodal_abs_part);
    CHECK(modal_correspondence_holds(fix_d(), d));

    auto c = classify(fix_c());
    CHECK(c.cdf_unimodal);
    CHECK(*c.modes == ModalInterval{e(0), e(0)});
    CHECK(c.qf_absolutely_continuous);
    CHECK(c.quantile_unimodal);

    auto b = classify(fix_b());
    CHECK(b.cdf_unimodal);
    CHECK(*b.modes == ModalInterval{e(0), e(1)});
    CHECK(!b.atom_at_mode.has_value());
}

TEST_CASE("qf_shape_check examples") {
    CHECK(!qf_shape_check(generalized_inverse(fix_a())).holds);
    auto d = qf_shape_check(generalized_inverse(fix_d()));
    REQUIRE(d.holds);
    CHECK(*d.modes == ModalInterval{e(1, 4), e(3, 4)});
    auto id = qf_shape_check(PiecewiseMonotone::identity(Interval::open(e(0), e(1))));
    REQUIRE(id.holds);
    CHECK(*id.modes == ModalInterval{e(0), e(1)});
}

TEST_CASE("quantile_density") {
    CHECK(quantile_density(fix_b()) == StepFunction::constant(Interval::open(e(0), e(1)), 1));
    CHECK(quantile_density(fix_d()) == StepFunction(Interval::open(e(0), e(1)), {q(1, 4), q(3, 4)}, {2, 0, 2}));
    CHECK(error_kind([] { quantile_density(fix_a()); }) == ErrorKind::QfNotAbsolutelyContinuous);
    CHECK(quantile_density(fix_c()) == StepFunction::constant(Interval::open(e(0), e(1)), 0));
}

TEST_CASE("finite domains are extended before inversion") {
    auto g = PiecewiseMonotone::identity(Interval::open(e(0), e(1)));
    auto qf = std::get<PiecewiseMonotone>(quantile_function(g));
    CHECK(qf == PiecewiseMonotone::identity(Interval::open(e(0), e(1))));
}

TEST_CASE("random classes: cdf shape against chord oracle") {
    GenConfig cfg;
    cfg.seed = 21;
    for (std::uint64_t i = 0; i < 1500; ++i) {
        auto icfg = instance_config(cfg, i);
        icfg.force_unimodal = i % 3 == 0;
        auto F = gen_monotone(icfg);
        auto line = extend_to_line(F);
        INFO(to_json(F).dump());
        auto grid = grid_points(line);
        std::vector<ExtendedReal> cand{ninf(), pinf()};
        for (const auto& x : grid) cand.emplace_back(x);
        check_against_oracle(cdf_shape_check(F), cand, [&](const ExtendedReal& nu) { return cdf_admissible(line, grid, nu); });
    }
}

TEST_CASE("random classes: qf shape against chord oracle") {
    GenConfig cfg;
    cfg.seed = 23;
    for (std::uint64_t i = 0; i < 1500; ++i) {
        auto icfg = instance_config(cfg, i);
        icfg.force_unimodal = i % 3 == 0;
        auto inv = quantile_function(gen_monotone(icfg));
        if (!std::holds_alternative<PiecewiseMonotone>(inv)) continue;
        const auto& Q = std::get<PiecewiseMonotone>(inv);
        INFO(to_json(Q).dump());
        auto grid = qf_grid(Q);
        std::vector<ExtendedReal> cand{Q.lo(), Q.hi()};
        for (const auto& x : grid) cand.emplace_back(x);
        for (const auto& k : Q.knots()) cand.emplace_back(k);
        check_against_oracle(qf_shape_check(Q), cand, [&](const ExtendedReal& a) { return qf_admissible(Q, grid, a); });
    }
}

TEST_CASE("random classes: classification invariants") {
    GenConfig cfg;
    cfg.seed = 29;
    int unimodal = 0;
    for (std::uint64_t i = 0; i < 1500; ++i) {
        auto icfg = instance_config(cfg, i);
        icfg.force_unimodal = i % 2 == 0;
        auto F = gen_monotone(icfg);
        auto c = classify(F);
        if (!c.cdf_unimodal) continue;
        ++unimodal;
        CHECK(c.quantile_unimodal);
        CHECK(c.qf_absolutely_continuous);
        CHECK(c.dens_unimodal_abs_part);
        CHECK(jump_locations(F).size() <= 1);
        CHECK(modal_correspondence_holds(F, c));
        if (c.atom_at_mode) {
            CHECK(c.modes->lo <= ExtendedReal(c.atom_at_mode->location));
            CHECK(ExtendedReal(c.atom_at_mode->location) <= c.modes->hi);
        }
    }
    CHECK(unimodal >= 750);
}
