#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoinv/json.hpp"
#include "monoinv/piecewise_monotone.hpp"

namespace monoinv {

struct GenConfig {
    std::uint64_t seed = 0;
    int max_knots = 12;  // upper bound on the number of affine segments
    bool allow_jumps = true;
    bool allow_flats = true;
    bool allow_infinite_domain = true;
    bool force_unimodal = false;
    Rational value_bound = 1000;
    bool force_real_line = false;  // only (-inf, +inf) domains
};

// Throws Error(InvalidInterval) for max_knots < 1 or value_bound < 1.
void check_config(const GenConfig& cfg);

// Deterministic in cfg; always a valid non-constant class.
PiecewiseMonotone gen_monotone(const GenConfig& cfg);

// Config for instance i of a run: the same for every law.
GenConfig instance_config(const GenConfig& cfg, std::uint64_t index);

struct CheckFailure {
    std::uint64_t index = 0;
    Json instance;
    std::string expected;
    std::string got;
};

struct CheckReport {
    std::string law;
    std::uint64_t instances_run = 0;
    std::uint64_t instances_checked = 0;  // those meeting the law's precondition
    std::uint64_t failure_count = 0;
    std::vector<CheckFailure> failures;  // the first few, by index
    std::optional<Json> shrunk_witness;  // from the first failure

    bool passed() const { return failure_count == 0; }
};

struct RunOptions {
    bool negate = false;  // invert every verdict (checks the checker)
    unsigned threads = 1;
    std::size_t max_recorded_failures = 20;
};

const std::vector<std::string>& law_ids();

// Error(UnknownLaw) for an unknown id.
CheckReport run_law(std::string_view law_id, std::uint64_t n, const GenConfig& cfg, const RunOptions& options = {});

// Outcome of one law on one instance. expected/got are filled on failure.
struct LawOutcome {
    bool applicable = true;
    bool holds = true;
    std::string expected;
    std::string got;
};
LawOutcome check_instance(std::string_view law_id, const PiecewiseMonotone& g);

// Greedy shrink: drop knots, then simplify rationals, keeping the failure.
PiecewiseMonotone shrink(std::string_view law_id, const PiecewiseMonotone& g, bool negate);

Json to_json(const CheckReport& report);

}  // namespace monoinv
