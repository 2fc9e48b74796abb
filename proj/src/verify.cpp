#include "macdet/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace macdet::verify {

nlohmann::json IdentityResult::to_json() const {
  nlohmann::json j = {{"name", name},     {"instances", instances}, {"failures", failures},
                      {"passed", passed()}, {"seconds", seconds}};
  if (!counterexample.empty()) j["counterexample"] = counterexample;
  return j;
}

bool SuiteReport::passed() const {
  return !results.empty() && std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j = {{"suite", suite}, {"seed", seed}, {"max_weight", max_weight}, {"passed", passed()}};
  j["results"] = nlohmann::json::array();
  for (const auto& r : results) j["results"].push_back(r.to_json());
  return j;
}

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt) {
  if (name == "eigen") return {eigen_suite(opt)};
  if (name == "appendix") return {appendix_suite(opt)};
  if (name == "cross") return {cross_suite(opt)};
  if (name == "oracle") return {oracle_suite(opt)};
  if (name == "all") return {eigen_suite(opt), appendix_suite(opt), cross_suite(opt), oracle_suite(opt)};
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace macdet::verify
