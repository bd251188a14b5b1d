#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hilb {

// A violated mathematical hypothesis. The message names the failed
// inequality (e.g. "alpha + beta <= 0 violated"). The CLI maps this family
// to exit code 2.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// No asymptotic case of the closed-form estimators matches the requested
// invariants (e.g. an Euler asymptotic for chi < 0).
class unsupported_hypothesis_error : public precondition_error {
 public:
  explicit unsupported_hypothesis_error(const std::string& what)
      : precondition_error(what) {}
};

// The adaptive truncation driver hit its cap without stabilizing, or an
// assembled sum failed the realness tolerance (a symptom of a wrong inverse
// convention or insufficient precision). Carries the last per-term report,
// serialized, for diagnosis. The CLI maps this to exit code 3.
class nonconvergence_error : public std::runtime_error {
 public:
  nonconvergence_error(const std::string& what, std::string last_report_json)
      : std::runtime_error(what), last_report(std::move(last_report_json)) {}

  std::string last_report;
};

}  // namespace hilb
