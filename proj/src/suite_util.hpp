// Shared bookkeeping for the verification suites.

#pragma once

#include <chrono>
#include <exception>
#include <functional>
#include <string>
#include <utility>

#include "macdet/verify.hpp"

namespace macdet::verify {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  // describe() is only evaluated for the first failure.
  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++result_.instances;
    if (ok) return;
    if (result_.failures++ == 0) result_.counterexample = describe();
  }

  // Runs body; an exception counts as a failure.
  template <class Body, class Describe>
  void attempt(Body&& body, Describe&& describe) {
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = std::string(" threw: ") + e.what();
    }
    check(ok, [&] { return describe() + why; });
  }

  IdentityResult result() const { return result_; }

 private:
  IdentityResult result_;
};

// Times fn; an escaping exception becomes a single failed instance.
inline IdentityResult run_timed(const std::string& label, const std::function<IdentityResult()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  IdentityResult r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r = IdentityResult{};
    r.name = label;
    r.instances = 1;
    r.failures = 1;
    r.counterexample = std::string("threw: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace macdet::verify
