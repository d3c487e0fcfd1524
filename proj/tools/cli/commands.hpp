#pragma once

#include <ostream>

namespace monoinv::cli {

// Exit codes: 0 ok / unimodal, 1 parse or usage error, 2 invalid input or
// domain error, 3 not unimodal, 4 quantile function not absolutely
// continuous, 5 a verified law failed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monoinv::cli
