#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/relations.hpp"

namespace jacobi {

struct VerifyConfig {
  /// Working degree; negative selects each suite's default.
  int degree = -1;
  std::uint64_t seed = 1;
  /// Parameter range for the denominator obligations.
  int max = 50;
  /// bseries: only the generator-level computation.
  bool symbolic = false;
};

struct CheckRecord {
  std::string name;
  bool pass = true;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckRecord> checks;
  bool pass() const;
};

/// slide, stu4t, pbw, eigen, vogel, psi, bseries, coboundary,
/// pentagon-hexagon, denominators, eqtwist.
const std::vector<std::string>& suite_names();
/// Throws DomainError for unknown suites.
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);

/// "[pass] suite/check: k=v ..." lines followed by a result line.
std::string format_text(const SuiteResult& r);
/// "suite=... check=... status=... k=v" records followed by a result record.
std::string format_structured(const SuiteResult& r);

/// A random sliding configuration on a diagram of the given support and
/// degree, or nothing when the sampled data is not admissible.
std::optional<SlideSpec> random_slide_spec(std::mt19937_64& rng, const Support& support, int degree);

}  // namespace jacobi
