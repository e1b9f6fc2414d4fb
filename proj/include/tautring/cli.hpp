#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tautring/pontryagin.hpp"

namespace tautring {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
inline constexpr int domain = 3;
}  // namespace exit_code

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Identity suites: "fourier", "dual", "convolution", "poincare", or "all".
/// Deterministic: random pairs come from a fixed seed.
std::vector<CheckResult> run_suite(const VandermondeBridge& bridge, std::string_view suite);

/// Runs the command line `args` (without the program name). Documents go to
/// `out`, warnings and errors to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tautring
