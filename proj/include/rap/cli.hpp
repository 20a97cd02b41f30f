#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "rap/scalar.hpp"

namespace rap {

/// Parsed command line, validated before dispatch.
struct RunConfig {
    std::string subcommand;
    int root_order = 1;
    std::string coeffs;
    Mode mode = Mode::Exact;
    double tol = kDefaultTol;
    int rows = 7;
    int count = 60;
    std::string out;
    std::string format = "text";
    std::uint64_t seed = 20261016;
    int kmax = 30;
    int mu = 0;
    std::string suite;
    std::string family;
};

/// Exit codes: 0 success, 1 negative result (not periodic, failed check),
/// 2 usage or input error, 3 I/O or internal error.
enum ExitCode { kExitOk = 0, kExitNegative = 1, kExitUsage = 2, kExitInternal = 3 };

/// Entry point shared by the rapsum binary and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rap
