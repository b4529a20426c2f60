// sdcert - decide, synthesize and verify sphere dissection certificates.
//
// Exit codes: 0 ok, 1 infeasible or failed verification, 2 input error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sd/census.hpp"
#include "sd/dot.hpp"
#include "sd/json_io.hpp"
#include "sd/oracle.hpp"
#include "sd/plan.hpp"
#include "sd/surgery.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sd::Error(sd::errc::parse_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sd::Error(sd::errc::parse_error, "cannot write '" + path + "'");
  out << content;
}

int run_check(const std::string& censusText) {
  const sd::Census census = sd::Census::parse(censusText);
  const sd::FeasibilityVerdict verdict = sd::check_feasibility(census);
  if (const auto* f = std::get_if<sd::Feasible>(&verdict)) {
    std::cout << "feasible n=" << f->n << "\n";
    return kExitOk;
  }
  std::cout << "infeasible reason=" << sd::reason_letter(std::get<sd::Infeasible>(verdict).reason)
            << "\n";
  return kExitFailed;
}

int run_plan(const std::string& censusText, const std::string& outPath) {
  const sd::Census census = sd::Census::parse(censusText);
  const sd::SurgeryPlan plan = sd::plan_reduction(census);
  write_output(outPath, sd::plan_to_json(plan));
  return kExitOk;
}

int run_realize(const std::string& censusText, const std::string& outPath) {
  const sd::Census census = sd::Census::parse(censusText);
  const sd::Certificate cert = sd::realize(census);
  // a written certificate is always a verified certificate
  const sd::VerifyReport rep = sd::verify(cert);
  if (!rep.ok())
    throw sd::Error(sd::errc::internal_invariant, "realized certificate failed verification");
  write_output(outPath, sd::certificate_to_json(cert));
  std::ostream& summary = outPath == "-" ? std::cerr : std::cout;
  summary << "n=" << *rep.n << " vertices=" << cert.total_vertices()
          << " edges=" << cert.total_edges() << " circles=" << cert.circle_count()
          << " census=" << rep.census->to_text() << "\n";
  return kExitOk;
}

int run_verify(const std::string& certPath) {
  const sd::Certificate cert = sd::certificate_from_json(read_file(certPath));
  const sd::VerifyReport rep = sd::verify(cert);
  for (const sd::CheckResult& check : rep.checks) {
    std::cout << check.name << ": " << (check.pass ? "pass" : "FAIL");
    if (!check.pass) std::cout << " (" << check.detail << ")";
    std::cout << "\n";
  }
  if (rep.census) std::cout << "census=" << rep.census->to_text() << "\n";
  if (rep.n) std::cout << "n=" << *rep.n << "\n";
  return rep.ok() ? kExitOk : kExitFailed;
}

int run_export(const std::string& certPath, const std::string& outPath) {
  const sd::Certificate cert = sd::certificate_from_json(read_file(certPath));
  write_output(outPath, sd::certificate_to_dot(cert));
  return kExitOk;
}

int run_enumerate(std::uint64_t maxCircles) {
  for (const sd::Census& census : sd::enumerate_n0(maxCircles))
    std::cout << sd::census_to_json(census) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sphere dissection censuses and certificates"};
  app.require_subcommand(1);

  std::string censusText;
  std::string certPath;
  std::string outPath = "-";
  std::uint64_t maxCircles = 8;

  auto* check = app.add_subcommand("check", "decide whether a face census is realizable");
  check->add_option("census", censusText, "census as \"a1,a2,...\"")->required();

  auto* plan = app.add_subcommand("plan", "print the surgery plan for a feasible census");
  plan->add_option("census", censusText, "census as \"a1,a2,...\"")->required();
  plan->add_option("-o,--output", outPath, "output path, '-' for stdout");

  auto* realize = app.add_subcommand("realize", "synthesize a dissection certificate");
  realize->add_option("census", censusText, "census as \"a1,a2,...\"")->required();
  realize->add_option("-o,--output", outPath, "certificate path, '-' for stdout");

  auto* verify = app.add_subcommand("verify", "re-check a certificate from scratch");
  verify->add_option("certificate", certPath, "sd-cert/1 JSON file")->required();

  auto* exp = app.add_subcommand("export", "render a certificate as Graphviz DOT");
  exp->add_option("certificate", certPath, "sd-cert/1 JSON file")->required();
  exp->add_option("-o,--output", outPath, "output path, '-' for stdout");

  auto* enumerate = app.add_subcommand("enumerate", "list all censuses realizable without triple points");
  enumerate->add_option("--max-circles", maxCircles, "even circle budget, 2..12")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (check->parsed()) return run_check(censusText);
    if (plan->parsed()) return run_plan(censusText, outPath);
    if (realize->parsed()) return run_realize(censusText, outPath);
    if (verify->parsed()) return run_verify(certPath);
    if (exp->parsed()) return run_export(certPath, outPath);
    if (enumerate->parsed()) return run_enumerate(maxCircles);
  } catch (const sd::NotFeasibleError& e) {
    std::cerr << "infeasible reason=" << sd::reason_letter(e.reason()) << "\n";
    return kExitFailed;
  } catch (const sd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case sd::errc::parse_error:
      case sd::errc::invalid_parameter:
        return kExitInput;
      case sd::errc::internal_invariant:
        return kExitInternal;
      default:
        return kExitFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
