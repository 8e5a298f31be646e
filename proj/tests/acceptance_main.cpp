// Runs every acceptance criterion and prints one pass/fail line per criterion.
// Usage: ads_acceptance_tests <path to ads_lorentz>

#include <iostream>

#include "ads/acceptance.hpp"

int main(int argc, char** argv) {
  ads::acceptance::Config config;
  if (argc > 1) config.cli_executable = argv[1];
  const ads::acceptance::Report report = ads::acceptance::run(config);
  ads::acceptance::print(report, std::cout);
  return report.all_passed() ? 0 : 1;
}
