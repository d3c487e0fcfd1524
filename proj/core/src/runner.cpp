#include <algorithm>
#include <thread>

#include "laws_internal.hpp"

namespace monoinv {

namespace {

struct Instance {
    PiecewiseMonotone g;
    bool expect_unimodal = false;
};

std::vector<Instance> instances_for(std::string_view law, const GenConfig& cfg, std::uint64_t index) {
    GenConfig c = instance_config(cfg, index);
    if (law == "GEN_LOCFIN") {
        if (index == 0) return {{PiecewiseMonotone::identity(), false}};
        c.force_real_line = true;
        return {{gen_monotone(c), false}};
    }
    std::vector<Instance> out{{gen_monotone(c), false}};
    if (law == "QF_AC") {
        c.force_unimodal = true;
        out.push_back({gen_monotone(c), true});
    }
    return out;
}

LawOutcome outcome_of(std::string_view law, const Instance& inst) {
    try {
        return check_instance_unguarded(law, inst.g, inst.expect_unimodal);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnknownLaw) throw;
        return LawOutcome{true, false, "no error", e.what()};
    }
}

// A failure in the sense of the run: negate flips the verdict of applicable checks.
std::optional<LawOutcome> as_failure(const LawOutcome& out, bool negate) {
    if (!out.applicable) return std::nullopt;
    if (negate) {
        if (!out.holds) return std::nullopt;
        return LawOutcome{true, false, "law fails (negated run)", "law holds"};
    }
    if (out.holds) return std::nullopt;
    return out;
}

struct IndexResult {
    bool checked = false;
    std::optional<CheckFailure> failure;
    std::optional<Instance> witness;
};

IndexResult run_index(std::string_view law, const GenConfig& cfg, std::uint64_t index, bool negate) {
    IndexResult r;
    for (auto& inst : instances_for(law, cfg, index)) {
        LawOutcome out = outcome_of(law, inst);
        r.checked = r.checked || out.applicable;
        if (auto f = as_failure(out, negate)) {
            r.failure = CheckFailure{index, to_json(inst.g), f->expected, f->got};
            r.witness = std::move(inst);
            break;
        }
    }
    return r;
}

PiecewiseMonotone rebuild(const PiecewiseMonotone& g, std::vector<Rational> knots, std::vector<Affine> pieces) {
    return PiecewiseMonotone::from_pieces(g.lo(), g.hi(), std::move(knots), std::move(pieces));
}

std::vector<Rational> simpler(const Rational& q) {
    std::vector<Rational> out;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    for (const Rational& c : {Rational(0), Rational(fl), Rational(fl + 1)})
        if (c != q) out.push_back(c);
    if (q.get_den() > 2) out.push_back(Rational(fl) + Rational(1, 2));
    return out;
}

// Shrinking only ever moves to strictly smaller instances, so it terminates.
std::pair<std::size_t, mpz_class> complexity(const PiecewiseMonotone& g) {
    mpz_class size = 0;
    auto add = [&](const Rational& q) { size += abs(q.get_num()) + q.get_den(); };
    for (const auto& k : g.knots()) add(k);
    for (const auto& p : g.pieces()) {
        add(p.slope);
        add(p.intercept);
    }
    return {g.knots().size(), size};
}

}  // namespace

PiecewiseMonotone shrink(std::string_view law_id, const PiecewiseMonotone& g, bool negate) {
    auto fails = [&](const PiecewiseMonotone& c) {
        return as_failure(outcome_of(law_id, Instance{c, false}), negate).has_value();
    };
    PiecewiseMonotone best = g;
    for (bool progress = true; progress;) {
        progress = false;
        std::vector<PiecewiseMonotone> candidates;
        auto add = [&](auto make) {
            try {
                candidates.push_back(make());
            } catch (const Error&) {
            }
        };
        const auto k = best.knots().size();
        std::vector<Rational> knots(best.knots().begin(), best.knots().end());
        std::vector<Affine> pieces(best.pieces().begin(), best.pieces().end());
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t drop : {i, i + 1}) {
                add([&] {
                    auto ks = knots;
                    auto ps = pieces;
                    ks.erase(ks.begin() + static_cast<long>(i));
                    ps.erase(ps.begin() + static_cast<long>(drop));
                    return rebuild(best, ks, ps);
                });
            }
        }
        for (std::size_t i = 0; i < k; ++i)
            for (const auto& c : simpler(knots[i]))
                add([&] {
                    auto ks = knots;
                    ks[i] = c;
                    return rebuild(best, ks, pieces);
                });
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            for (const auto& c : simpler(pieces[i].slope))
                add([&] {
                    auto ps = pieces;
                    ps[i].slope = c;
                    return rebuild(best, knots, ps);
                });
            for (const auto& c : simpler(pieces[i].intercept))
                add([&] {
                    auto ps = pieces;
                    ps[i].intercept = c;
                    return rebuild(best, knots, ps);
                });
        }
        for (auto& c : candidates) {
            if (!(complexity(c) < complexity(best)) || !fails(c)) continue;
            best = std::move(c);
            progress = true;
            break;
        }
    }
    return best;
}

CheckReport run_law(std::string_view law_id, std::uint64_t n, const GenConfig& cfg, const RunOptions& options) {
    const auto& ids = law_ids();
    if (std::find(ids.begin(), ids.end(), law_id) == ids.end())
        throw Error(ErrorKind::UnknownLaw, "unknown law '" + std::string(law_id) + "'");
    check_config(cfg);

    std::vector<IndexResult> results(n);
    unsigned threads = std::max(1U, options.threads);
    auto work = [&](unsigned w) {
        for (std::uint64_t i = w; i < n; i += threads) results[i] = run_index(law_id, cfg, i, options.negate);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    CheckReport report;
    report.law = std::string(law_id);
    report.instances_run = n;
    const Instance* first = nullptr;
    for (auto& r : results) {
        if (r.checked) ++report.instances_checked;
        if (!r.failure) continue;
        ++report.failure_count;
        if (!first) first = &*r.witness;
        if (report.failures.size() < options.max_recorded_failures) report.failures.push_back(std::move(*r.failure));
    }
    if (first) {
        PiecewiseMonotone w = first->expect_unimodal ? first->g : shrink(law_id, first->g, options.negate);
        report.shrunk_witness = to_json(w);
    }
    return report;
}

Json to_json(const CheckReport& report) {
    Json failures = Json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"index", f.index}, {"instance", f.instance}, {"expected", f.expected}, {"got", f.got}});
    return Json{{"law", report.law},
                {"instances_run", report.instances_run},
                {"instances_checked", report.instances_checked},
                {"failures", failures},
                {"failure_count", report.failure_count},
                {"shrunk_witness", report.shrunk_witness ? *report.shrunk_witness : Json(nullptr)},
                {"passed", report.passed()}};
}

}  // namespace monoinv
