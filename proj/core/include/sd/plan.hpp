#pragma once

#include <cstdint>
#include <vector>

#include "sd/census.hpp"
#include "sd/templates.hpp"

namespace sd {

/// One executable census rewrite.  F1a{m} inserts two sibling circles into
/// a piece with m-2 boundary circuits; F1b inserts two nested circles into
/// a disc.
struct SurgeryStep {
  enum class Kind { F1a, F1b };

  Kind kind = Kind::F1b;
  std::uint64_t m = 0;  // F1a only, m >= 3

  static SurgeryStep f1a(std::uint64_t m);
  static SurgeryStep f1b() { return {Kind::F1b, 0}; }

  friend bool operator==(const SurgeryStep&, const SurgeryStep&) = default;
};

/// Census effect of a step:
///   F1a{m>=4} -> {a1:+2, a_{m-2}:-1, a_m:+1}
///   F1a{m=3}  -> {a1:+1, a3:+1}   (host and a1 coincide)
///   F1b       -> {a2:+2}
CensusDelta step_delta(const SurgeryStep& step);

/// Recipe reaching a census from a base template: apply the steps in order
/// starting from the base.  trace[0] is the base census and trace[i+1] the
/// census after steps[i]; trace.back() is the target.
struct SurgeryPlan {
  BaseTemplate base;
  std::vector<SurgeryStep> steps;
  std::vector<Census> trace;
};

/// Reduce a feasible census to its base case by inverting F1a steps for the
/// largest index m >= 3 first, then F1b steps until a2 <= 1; the returned
/// plan lists the steps in execution (reverse) order.  Throws
/// NotFeasibleError on an unrealizable census.
SurgeryPlan plan_reduction(const Census& census);

}  // namespace sd
