#include "sd/plan.hpp"

#include <algorithm>

namespace sd {

namespace {

Census apply_inverse(const Census& census, const CensusDelta& delta) {
  CensusDelta inverse;
  for (const auto& [k, d] : delta) inverse[k] = -d;
  try {
    return census.apply(inverse);
  } catch (const Error& e) {
    // the reduction theory guarantees non-negative counts; reaching this
    // point means the reducer itself is broken
    throw Error(errc::internal_invariant, std::string("plan_reduction: ") + e.what());
  }
}

BaseTemplate deduce_base(const Census& reduced, std::uint64_t n) {
  BaseTemplate base;
  if (n == 0) {
    base = BaseTemplate::circles();
  } else if (reduced.count(2) == 0) {
    base = BaseTemplate::discs(n);
  } else {
    base = BaseTemplate::annulus(n);
  }
  if (reduced != base_census(base))
    throw Error(errc::internal_invariant,
                "plan_reduction: reduced census " + reduced.to_text() + " does not match the " +
                    base_kind_name(base.kind) + " base");
  return base;
}

}  // namespace

SurgeryStep SurgeryStep::f1a(std::uint64_t m) {
  if (m < 3) throw Error(errc::invalid_parameter, "F1a step needs m >= 3");
  return {Kind::F1a, m};
}

CensusDelta step_delta(const SurgeryStep& step) {
  if (step.kind == SurgeryStep::Kind::F1b) return {{2, +2}};
  if (step.m < 3) throw Error(errc::invalid_parameter, "F1a step needs m >= 3");
  if (step.m == 3) return {{1, +1}, {3, +1}};
  return {{1, +2}, {step.m - 2, -1}, {step.m, +1}};
}

SurgeryPlan plan_reduction(const Census& census) {
  const std::uint64_t n = require_feasible(census);

  // walk the reduction downward, recording the inverted steps
  std::vector<SurgeryStep> steps;
  std::vector<Census> trace{census};
  Census cur = census;
  while (cur.max_index() >= 3) {
    const SurgeryStep step = SurgeryStep::f1a(cur.max_index());
    cur = apply_inverse(cur, step_delta(step));
    steps.push_back(step);
    trace.push_back(cur);
  }
  while (cur.count(2) >= 2) {
    const SurgeryStep step = SurgeryStep::f1b();
    cur = apply_inverse(cur, step_delta(step));
    steps.push_back(step);
    trace.push_back(cur);
  }

  SurgeryPlan plan;
  plan.base = deduce_base(cur, n);
  std::reverse(steps.begin(), steps.end());
  std::reverse(trace.begin(), trace.end());
  plan.steps = std::move(steps);
  plan.trace = std::move(trace);
  return plan;
}

}  // namespace sd
