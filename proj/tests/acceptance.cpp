// Acceptance suite: one timed pass/fail line per criterion, exit code is
// the number of failures.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "sd/json_io.hpp"
#include "sd/oracle.hpp"
#include "sd/surgery.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(std::ostream&)> body;  // streams failure details
};

sd::Census cen(std::initializer_list<std::uint64_t> dense) {
  return sd::Census::from_counts(dense);
}

void expect(std::ostream& fail, bool ok, const std::string& what) {
  if (!ok) fail << "  " << what << "\n";
}

// 1. smallest realizations
void base_cases(std::ostream& fail) {
  {
    const auto t0 = Clock::now();
    const sd::Certificate cert = sd::realize(cen({2, 1}));
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    const sd::VerifyReport rep = sd::verify(cert);
    expect(fail, rep.ok() && *rep.n == 0 && *rep.census == cen({2, 1}), "realize(2,1) with n=0");
    expect(fail, s < 0.1, "realize(2,1) under 0.1 s");
  }
  for (const sd::Census& target : {cen({8}), cen({8, 1})}) {
    const auto t0 = Clock::now();
    const sd::Certificate cert = sd::realize(target);
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    const sd::VerifyReport rep = sd::verify(cert);
    expect(fail,
           rep.ok() && *rep.n == 1 && *rep.census == target && cert.total_vertices() == 6 &&
               cert.total_edges() == 12,
           "realize(" + target.to_text() + ") with n=1, V=6, E=12");
    expect(fail, s < 0.1, "realize(" + target.to_text() + ") under 0.1 s");
  }
}

// 2. inductive family 1 <= n <= 50
void inductive_family(std::ostream& fail) {
  for (std::uint64_t n = 1; n <= 50; ++n) {
    const sd::Census discs = sd::Census::from_entries({{1, 2 + 6 * n}});
    const sd::Census annuli = sd::Census::from_entries({{1, 2 + 6 * n}, {2, 1}});
    for (const sd::Census& target : {discs, annuli}) {
      const sd::Certificate cert = sd::realize(target);
      const sd::VerifyReport rep = sd::verify(cert);
      const bool ok = rep.ok() && *rep.census == target && cert.total_vertices() == 6 * n &&
                      cert.total_edges() == 12 * n;
      expect(fail, ok, "realize(" + target.to_text() + ") with 6n vertices and 12n edges, n=" +
                           std::to_string(n));
      if (!ok) return;
    }
  }
}

// 3. general realization round-trip, 1000 random censuses
void random_round_trip(std::ostream& fail) {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 1000; ++i) {
    const sd::Census target = sdtest::random_feasible_census(rng, 200);
    const sd::Certificate cert = sd::realize(target);
    const sd::VerifyReport rep = sd::verify(cert);
    const bool ok = rep.ok() && rep.census->to_text() == target.to_text();
    expect(fail, ok, "round-trip of census " + target.to_text());
    if (!ok) return;
  }
}

// 4. negative gate and exhaustive small sweep
void negative_gate(std::ostream& fail) {
  {
    const auto v = sd::check_feasibility(cen({2}));
    expect(fail,
           !sd::is_feasible(v) &&
               std::get<sd::Infeasible>(v).reason == sd::InfeasibleReason::PViolation,
           "check(2) infeasible by (P)");
  }
  {
    const auto v = sd::check_feasibility(cen({3}));
    expect(fail,
           !sd::is_feasible(v) &&
               std::get<sd::Infeasible>(v).reason == sd::InfeasibleReason::EViolation,
           "check(3) infeasible by (E)");
  }

  std::uint64_t feasible_count = 0, infeasible_count = 0;
  std::vector<std::uint64_t> dense(5, 0);
  bool all_ok = true;
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t idx, std::uint64_t left) {
    if (!all_ok) return;
    if (idx == dense.size()) {
      const sd::Census c = sd::Census::from_counts(dense);
      const bool feasible = sd::is_feasible(sd::check_feasibility(c));
      bool realized = false;
      try {
        const sd::VerifyReport rep = sd::verify(sd::realize(c));
        realized = rep.ok() && *rep.census == c;
      } catch (const sd::NotFeasibleError&) {
        realized = false;
      }
      if (realized != feasible) {
        expect(fail, false, "realize vs feasibility disagree on " + c.to_text());
        all_ok = false;
      }
      feasible ? ++feasible_count : ++infeasible_count;
      return;
    }
    for (std::uint64_t v = 0; v <= left; ++v) {
      dense[idx] = v;
      walk(idx + 1, left - v);
    }
    dense[idx] = 0;
  };
  walk(0, 9);
  expect(fail, feasible_count > 0 && infeasible_count > 0,
         "sweep covered both feasible and infeasible censuses");
}

// 5. verifier identity (E) as emergent property
void verifier_identity(std::ostream& fail) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const sd::Certificate cert = sd::random_certificate(seed, {.max_faces = 80, .max_n = 6});
    const sd::Census census = sd::census_from_classes(sd::global_faces(cert));
    const std::uint64_t v = cert.total_vertices();
    const bool ok = census.euler_sum() == static_cast<std::int64_t>(v + 2);
    expect(fail, ok, "identity sum (2-k) a_k = V + 2 at seed " + std::to_string(seed));
    if (!ok) return;
  }
}

// 6. n=0 oracle equivalence
void oracle_equivalence(std::ostream& fail) {
  const std::set<sd::Census> enumerated = sd::enumerate_n0(8);
  std::set<sd::Census> predicted;
  std::vector<std::uint64_t> dense(10, 0);
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t idx, std::uint64_t left) {
    if (idx == dense.size()) {
      const sd::Census c = sd::Census::from_counts(dense);
      const auto v = sd::check_feasibility(c);
      if (sd::is_feasible(v) && std::get<sd::Feasible>(v).n == 0) predicted.insert(c);
      return;
    }
    for (std::uint64_t v = 0; v <= left; ++v) {
      dense[idx] = v;
      walk(idx + 1, left - v);
    }
    dense[idx] = 0;
  };
  walk(0, 9);
  expect(fail, enumerated == predicted,
         "enumerate_n0(8) equals the (E)+(P) censuses with at most 9 pieces (" +
             std::to_string(enumerated.size()) + " vs " + std::to_string(predicted.size()) + ")");
}

// 7. surgery delta conformance
void surgery_deltas(std::ostream& fail) {
  std::mt19937_64 rng(1312);
  int f1a_done = 0, f1b_done = 0;
  while (f1a_done < 200 || f1b_done < 200) {
    const sd::Certificate before = sd::random_certificate(rng(), {.max_faces = 60, .max_n = 4});
    const sd::VerifyReport repBefore = sd::verify(before);
    if (!repBefore.ok()) {
      expect(fail, false, "fuzzed host certificate failed verification");
      return;
    }

    const bool doF1a = f1a_done < 200 && (f1b_done >= 200 || rng() % 2 == 0);
    sd::Certificate after;
    sd::CensusDelta delta;
    if (doF1a) {
      std::vector<std::uint64_t> ks;
      for (const auto& [k, count] : repBefore.census->entries()) ks.push_back(k);
      const std::uint64_t m = ks[rng() % ks.size()] + 2;
      after = sd::apply_f1a(before, m);
      delta = sd::step_delta(sd::SurgeryStep::f1a(m));
      ++f1a_done;
    } else {
      after = sd::apply_f1b(before);
      delta = sd::step_delta(sd::SurgeryStep::f1b());
      ++f1b_done;
    }

    const sd::VerifyReport repAfter = sd::verify(after);
    const bool ok = repAfter.ok() && *repAfter.census == repBefore.census->apply(delta) &&
                    after.total_vertices() == before.total_vertices();
    expect(fail, ok, std::string("delta conformance for ") + (doF1a ? "F1a" : "F1b"));
    if (!ok) return;
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "base-case realizations", 0.4, base_cases},
      {2, "inductive family n=1..50", 1.0, inductive_family},
      {3, "1000-census realization round-trip", 60.0, random_round_trip},
      {4, "negative gate and exhaustive sweep", 10.0, negative_gate},
      {5, "verifier identity over 1000 fuzzed certificates", 60.0, verifier_identity},
      {6, "n=0 oracle equivalence", 5.0, oracle_equivalence},
      {7, "surgery delta conformance", 60.0, surgery_deltas},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream detail;
    bool threw = false;
    const auto t0 = Clock::now();
    try {
      c.body(detail);
    } catch (const std::exception& e) {
      threw = true;
      detail << "  unexpected exception: " << e.what() << "\n";
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_budget = seconds <= c.budget_seconds;
    if (!in_budget) detail << "  took " << seconds << " s, budget " << c.budget_seconds << " s\n";
    const bool pass = !threw && detail.str().empty() && in_budget;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  ("
              << static_cast<int>(seconds * 1000) << " ms)\n";
    if (!pass) {
      std::cout << detail.str();
      ++failures;
    }
  }
  return failures;
}
