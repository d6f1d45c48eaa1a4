#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dunkl_lab/measures.hpp"

namespace dunkl_lab {

/// One verified statement. `reference` names the mathematical result the
/// check certifies, and a failure message repeats it.
struct Check {
  std::string suite;
  std::string name;
  std::string reference;
  bool passed = false;
  double value = 0.0;      ///< measured quantity
  double tolerance = 0.0;  ///< bound the value was compared against
  std::string detail;
};

struct Tolerances {
  double identity = 1e-12;     // sharp constant vs Ma(0)
  double mellin_tail = 0.05;   // |Ma(eta)| |eta|^beta against its limit
  double pitt = 1e-6;          // ratio <= c (1 + tol)
  double uncertainty = 1e-6;   // gap >= -tol mass
  double closed_form = 1e-7;   // Gaussian ratio and derivative identity
  double gaussian_gap = 1e-6;  // Gaussian gap / mass

  /// Sets one field by name; returns false for an unknown name.
  bool set(const std::string& name, double value);
  std::vector<std::pair<std::string, double>> items() const;
};

struct RunConfig {
  GridSpec grid;
  Tolerances tolerances;
  std::uint64_t seed = 1;
  std::size_t suite_size = 30;
};

struct SuiteReport {
  std::string suite;
  RunConfig config;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
  /// Versioned JSON (`schema: 1`), keys in a fixed order.
  std::string to_json() const;
};

}  // namespace dunkl_lab
