#pragma once

// Acceptance criteria for the library, runnable from the acceptance test binary
// and from `ads_lorentz selftest`.

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ads/killing.hpp"
#include "ads/numerics.hpp"

namespace ads::acceptance {

using CliRunner =
    std::function<int(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)>;

struct Config {
  // Fields checked by the Killing-suite criterion; tests swap in broken ones.
  std::array<VectorField, 3> killing_fields{as_vector_field(KillingField::K1),
                                            as_vector_field(KillingField::K2),
                                            as_vector_field(KillingField::K3)};
  // Path to the CLI binary; when set, the CLI criterion runs it as a
  // subprocess, including `selftest`.
  std::string cli_executable;
  // In-process CLI entry point, used when no executable is given. `selftest`
  // is not re-entered in that mode.
  CliRunner cli;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<CriterionResult> results;

  bool all_passed() const;
};

Report run(const Config& config);

void print(const Report& report, std::ostream& out);

// Oracle for the bypass-length criterion: integrates the three constant-control
// pieces of the bypass curve with RK4 (the last one backwards from the target to
// locate the junction) and evaluates the length functional on the samples.
struct SampledBypass {
  double length = 0.0;
  double endpoint_error = 0.0;
};

SampledBypass sampled_bypass_length(const Point& target, double alpha, double step = 1e-4);

}  // namespace ads::acceptance
