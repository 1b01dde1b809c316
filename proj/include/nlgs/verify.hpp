#pragma once

// Property suites run by `nlgs verify`. Each check reports the largest
// observed error against its tolerance.

#include <cstdint>
#include <string>
#include <vector>

#include "nlgs/pauli.hpp"
#include "nlgs/rotation.hpp"

namespace nlgs {

struct CheckResult {
  std::string suite;
  std::string name;
  double tolerance = 0.0;
  double max_error = 0.0;
  bool passed = false;
};

/// Named small codes used across suites (n <= 4).
struct ToyCode {
  std::string name;
  CssCode code;
};
std::vector<ToyCode> toy_codes();

/// One rotation setup: code, mapping register extension and ancilla policy.
struct RotationSetup {
  std::string name;
  CssCode code;
  AncillaPolicy policy = AncillaPolicy::shared;
  int extra_ancillas = 0;
};
std::vector<RotationSetup> rotation_setups();

std::vector<std::string> suite_names();  // algebra, wick, rotation, spectrum

/// Throws std::invalid_argument for an unknown suite; "all" runs every suite.
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed = 7);

std::vector<CheckResult> run_algebra_suite(std::uint64_t seed);
std::vector<CheckResult> run_wick_suite(std::uint64_t seed);
std::vector<CheckResult> run_rotation_suite(std::uint64_t seed);
std::vector<CheckResult> run_spectrum_suite(std::uint64_t seed);

}  // namespace nlgs
