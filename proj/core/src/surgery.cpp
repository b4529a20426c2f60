#include "sd/surgery.hpp"

namespace sd {

namespace {

void require_valid(const Certificate& cert, const char* op) {
  const VerifyReport rep = verify(cert);
  if (rep.ok()) return;
  std::string detail = "incomplete";
  for (const CheckResult& c : rep.checks) {
    if (!c.pass) {
      detail = c.name + ": " + c.detail;
      break;
    }
  }
  throw Error(errc::bad_certificate, std::string(op) + ": input certificate fails verification (" +
                                         detail + ")");
}

LocalFaceRef select_host(const Certificate& cert, std::uint64_t k, const char* op) {
  for (const GlobalFace& cls : global_faces(cert)) {  // sorted by minimal member
    if (cls.size() == k) return cls.front();
  }
  throw Error(errc::no_host_face, std::string(op) + ": no piece with " + std::to_string(k) +
                                      " boundary circuits to host the surgery");
}

void append_circle(Certificate& cert, std::size_t parent, std::uint64_t parent_face) {
  const std::size_t child = cert.components.size();
  cert.components.emplace_back(FreeCircle{});
  cert.attachments.push_back({child, parent, parent_face, 0});  // side0 faces the parent
}

void expect_census(const Certificate& cert, const Census& want, std::size_t step_index) {
  const Census got = certificate_census(cert);
  if (got != want)
    throw Error(errc::internal_invariant,
                "realize: census " + got.to_text() + " after step " + std::to_string(step_index) +
                    " does not match the planned " + want.to_text());
}

}  // namespace

Certificate apply_f1a(const Certificate& cert, std::uint64_t m) {
  if (m < 3) throw Error(errc::invalid_parameter, "apply_f1a: m must be at least 3");
  require_valid(cert, "apply_f1a");
  const LocalFaceRef host = select_host(cert, m - 2, "apply_f1a");
  Certificate out = cert;
  append_circle(out, host.component, host.face);
  append_circle(out, host.component, host.face);
  return out;
}

Certificate apply_f1b(const Certificate& cert) {
  require_valid(cert, "apply_f1b");
  const LocalFaceRef host = select_host(cert, 1, "apply_f1b");
  Certificate out = cert;
  const std::size_t outer = out.components.size();
  append_circle(out, host.component, host.face);
  append_circle(out, outer, 1);  // nested: the second circle sits in side1 of the first
  return out;
}

Certificate realize(const Census& census) {
  const SurgeryPlan plan = plan_reduction(census);
  Certificate cert = instantiate_base(plan.base);
  expect_census(cert, plan.trace.front(), 0);
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const SurgeryStep& step = plan.steps[i];
    try {
      cert = step.kind == SurgeryStep::Kind::F1a ? apply_f1a(cert, step.m) : apply_f1b(cert);
    } catch (const Error& e) {
      // the plan guarantees a valid host for every step; a refused surgery
      // means the planner and the executor disagree
      throw Error(errc::internal_invariant,
                  "realize: step " + std::to_string(i + 1) + " refused: " + e.what());
    }
    expect_census(cert, plan.trace[i + 1], i + 1);
  }
  const VerifyReport rep = verify(cert);
  if (!rep.ok() || !rep.census || *rep.census != census)
    throw Error(errc::internal_invariant, "realize: final certificate failed verification");
  return cert;
}

}  // namespace sd
