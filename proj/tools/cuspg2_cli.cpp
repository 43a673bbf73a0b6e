// Command-line frontend: verification suites and invariant computations with JSON or text reports.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuspg2/errors.hpp"
#include "cuspg2/suite.hpp"

namespace {

using namespace cuspg2;
using nlohmann::ordered_json;

struct Output {
  std::string format = "json";
  bool timing = false;
};

ordered_json reports_json(const suite::Reports& reports, const Output& out) {
  ordered_json j = ordered_json::array();
  for (const auto& r : reports) j.push_back(report::to_json(r, out.timing));
  return j;
}

int emit(const suite::Reports& reports, const Output& out) {
  if (out.format == "json") {
    std::cout << reports_json(reports, out).dump(2) << '\n';
  } else {
    for (const auto& r : reports) std::cout << report::to_text(r, out.timing) << '\n';
  }
  return report::any_failed(reports) ? 1 : 0;
}

int emit(const std::vector<suite::Criterion>& criteria, const Output& out) {
  bool failed = false;
  ordered_json all = ordered_json::array();
  for (const auto& c : criteria) {
    failed = failed || !c.passed();
    if (out.format == "json") {
      all.push_back({{"criterion", c.id},
                     {"title", c.title},
                     {"status", c.passed() ? "pass" : "fail"},
                     {"checks", reports_json(c.checks, out)}});
    } else {
      std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << '\n';
      for (const auto& r : c.checks) {
        std::string line = report::to_text(r, out.timing);
        for (std::size_t pos = 0; (pos = line.find('\n', pos)) != std::string::npos; pos += 3) line.insert(pos + 1, "  ");
        std::cout << "  " << line << '\n';
      }
    }
  }
  if (out.format == "json") std::cout << all.dump(2) << '\n';
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the cuspidal-curve G2 structures and Wilczynski invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  suite::Options options;
  app.add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", out.timing, "Include per-check timings (milliseconds)");
  app.add_option("--samples", options.samples, "Number of sample points")->check(CLI::PositiveNumber);
  app.add_option("--seed", options.seed, "Seed selecting the sample points");

  std::optional<int> result;

  auto* g2 = app.add_subcommand("g2", "G2-structure pipeline and signatures for a real form");
  std::string realform;
  g2->add_option("--realform", realform, "su21 | split | su3")->required()->check(CLI::IsMember({"su21", "split", "su3"}));
  g2->callback([&] { result = emit(suite::g2_report(*orbit::parse_real_form(realform)), out); });

  auto* ode = app.add_subcommand("ode", "Invariants of ordinary differential equations");
  ode->require_subcommand(1);
  auto* curvature = ode->add_subcommand("curvature", "Projective curvature of y = x^gamma (or y = ln x)");
  std::string gamma;
  curvature->add_option("--gamma", gamma, "Rational exponent or 'ln'")->required();
  curvature->callback([&] { result = emit(suite::curvature_report(gamma), out); });

  auto* generalized = ode->add_subcommand("generalized", "Generalized Wilczynski invariants");
  std::string kappa, rhs;
  int order = 7;
  auto* kappa_opt = generalized->add_option("--kappa", kappa, "Curvature equation with constant kappa (rational or k)");
  auto* rhs_opt = generalized->add_option("--rhs", rhs, "Right-hand side F of y^(n) = F");
  generalized->add_option("--order", order, "Order n of the equation given by --rhs")->check(CLI::Range(3, 7));
  kappa_opt->excludes(rhs_opt);
  generalized->callback([&] {
    if (kappa_opt->count()) {
      result = emit(suite::generalized_kappa_report(kappa), out);
    } else if (rhs_opt->count()) {
      result = emit(suite::generalized_report(wilczynski::parse_ode(order, rhs)), out);
    } else {
      throw CLI::RequiredError("--kappa or --rhs");
    }
  });

  auto* sample = ode->add_subcommand("sample", "Exact-jet membership oracle along PGL(3) images of (t^p, t^q)");
  int sp = 2, sq = 3;
  sample->add_option("p", sp, "Exponent p (default 2)");
  sample->add_option("q", sq, "Exponent q (default 3)");
  sample->callback([&] { result = emit(suite::sample_report(sp, sq, options), out); });

  auto* orbit_cmd = app.add_subcommand("orbit", "Family sextic, stabilizer, indices and lift of y^p = x^q");
  int p = 0, q = 0;
  orbit_cmd->add_option("p", p, "Exponent p")->required();
  orbit_cmd->add_option("q", q, "Exponent q")->required();
  orbit_cmd->callback([&] { result = emit(suite::orbit_report(p, q), out); });

  auto* forms = app.add_subcommand("forms", "Transvectants and invariants of binary forms");
  forms->require_subcommand(1);
  auto* i2 = forms->add_subcommand("i2", "I2 of a sextic");
  std::string fv;
  i2->add_option("form", fv, "Coefficients v0..v6, e.g. '1,0,0,0,0,0,1'")->required();
  i2->callback([&] { result = emit(suite::forms_i2_report(fv), out); });
  auto* i3 = forms->add_subcommand("i3", "I3 of three sextics");
  std::vector<std::string> triple;
  i3->add_option("forms", triple, "Three sextics")->required()->expected(3);
  i3->callback([&] { result = emit(suite::forms_i3_report(triple[0], triple[1], triple[2]), out); });
  auto* trans = forms->add_subcommand("transvectant", "p-th transvectant of two forms");
  std::vector<std::string> pair;
  int tp = 0;
  bool calibrated = false;
  trans->add_option("forms", pair, "Two forms")->required()->expected(2);
  trans->add_option("--order", tp, "Transvectant order p")->required();
  trans->add_flag("--calibrated", calibrated, "Apply the calibration constant");
  trans->callback([&] { result = emit(suite::forms_transvectant_report(pair[0], pair[1], tp, calibrated), out); });

  auto* verify = app.add_subcommand("verify-all", "Run the complete acceptance suite");
  std::vector<int> only;
  verify->add_option("--criterion", only, "Run only the given criteria")->check(CLI::Range(1, suite::kCriteria));
  verify->callback([&] {
    if (only.empty()) {
      result = emit(suite::run_acceptance(options), out);
    } else {
      std::vector<suite::Criterion> criteria;
      for (int id : only) criteria.push_back(suite::run_criterion(id, options));
      result = emit(criteria, out);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DivisionByZero& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return result.value_or(0);
}
