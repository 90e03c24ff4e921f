#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "murphy/report.hpp"

namespace murphy {

struct SuiteOptions {
  long count = 200;       // random pairs for the core suite
  std::uint64_t seed = 20240601;
  long bits = num::kDefaultPrecisionBits;
};

struct SuiteCheck {
  std::string name;
  bool passed = false;
  report::json detail;
};

struct SuiteResult {
  std::string suite;
  long precision_bits = 0;
  std::vector<SuiteCheck> checks;
  bool passed() const;
  report::json to_json() const;
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& suite, const SuiteOptions& opt);

// Deterministic rational pairs with m^2 - 4 not a square: numerators in
// [-40, 40], denominators in [1, 7].
std::vector<Params> random_params(long count, std::uint64_t seed);

}  // namespace murphy
