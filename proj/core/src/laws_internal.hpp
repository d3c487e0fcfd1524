#pragma once

#include "monoinv/harness.hpp"

namespace monoinv {

// check_instance without the exception guard; expect_unimodal adds the
// generator-side oracle for force_unimodal instances.
LawOutcome check_instance_unguarded(std::string_view law, const PiecewiseMonotone& g, bool expect_unimodal);

}  // namespace monoinv
