// Verification suites: operator identities, eigen-relations, cross-method
// and oracle agreement.  Every suite is deterministic given its seed.

#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace macdet::verify {

struct IdentityResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string counterexample;  // first failure, if any
  double seconds = 0.0;

  bool passed() const { return failures == 0 && instances > 0; }
  nlohmann::json to_json() const;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int max_weight = 0;
  std::vector<IdentityResult> results;

  bool passed() const;
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int max_weight = 6;
  /// Random instances per sampled identity.
  int instances = 100;
};

/// Operator identities of the divided-difference calculus.  max_weight caps
/// the degrees used (|lambda|, j) where an identity has such a parameter.
SuiteReport appendix_suite(const SuiteOptions& opt);
/// M_1 J_lambda = [|lambda|] J_lambda for |lambda| <= max_weight.
SuiteReport eigen_suite(const SuiteOptions& opt);
/// All constructions of J_lambda agree with each other.
SuiteReport cross_suite(const SuiteOptions& opt);
/// All constructions of J_lambda agree with the Gram-Schmidt oracle.
SuiteReport oracle_suite(const SuiteOptions& opt);

/// "eigen", "appendix", "cross", "oracle" or "all".
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt);

}  // namespace macdet::verify
