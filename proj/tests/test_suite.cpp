#include <doctest.h>

#include "cuspg2/errors.hpp"
#include "cuspg2/suite.hpp"

using namespace cuspg2;
using report::Status;

namespace {

const suite::InvariantReport& find(const suite::Reports& reports, const std::string& name) {
  for (const auto& r : reports)
    if (r.check == name) return r;
  FAIL("missing check " << name);
  return reports.front();
}

}  // namespace

TEST_CASE("report schema") {
  const auto r = report::check("x", "1", "1", true, {{"k", "v"}});
  const auto j = report::to_json(r);
  CHECK(j.dump() == R"({"check":"x","status":"pass","lhs":"1","rhs":"1","details":{"k":"v"}})");
  CHECK_FALSE(j.contains("timing_ms"));
  CHECK(report::to_json(r, true).contains("timing_ms"));
  CHECK(report::to_text(report::check("y", "1", "2", false)) == "[fail] y: 1 != 2");
  CHECK(report::to_text(report::recorded("z", "3/4")) == "[recorded] z: 3/4");
  CHECK_FALSE(report::any_failed({r, report::recorded("z", "0")}));
  CHECK(report::any_failed({r, report::check("y", "1", "2", false)}));
}

TEST_CASE("pass verdicts compare equal serializations") {
  for (const auto& c : suite::run_acceptance({10, 7}))
    for (const auto& r : c.checks)
      if (r.status == Status::kPass) CHECK(r.lhs == r.rhs);
}

TEST_CASE("acceptance verdicts") {
  const auto all = suite::run_acceptance({10, 3});
  REQUIRE(all.size() == suite::kCriteria);
  for (const auto& c : all) {
    CAPTURE(c.id);
    // The compact real form yields (3,4), not the expected (4,3).
    CHECK(c.passed() == (c.id != 5));
  }
  CHECK(find(all[4].checks, "signature su3").lhs == "(3,4)");
  CHECK(find(all[1].checks, "lambda").lhs == "(3/5)*r10");
  CHECK_THROWS_AS(suite::run_criterion(13), DomainError);
}

TEST_CASE("reports are deterministic") {
  auto dump = [](const suite::Reports& rs) {
    std::string s;
    for (const auto& r : rs) s += report::to_json(r).dump();
    return s;
  };
  CHECK(dump(suite::sample_report(2, 3, {3, 11})) == dump(suite::sample_report(2, 3, {3, 11})));
  CHECK(dump(suite::sample_report(2, 3, {3, 11})) != dump(suite::sample_report(2, 3, {3, 12})));
}

TEST_CASE("command examples") {
  CHECK(find(suite::curvature_report("3/2"), "kappa(3/2)").lhs == "6751269/400");
  CHECK(find(suite::curvature_report("ln"), "kappa(ln)").lhs == "19683/4");
  CHECK_THROWS_AS(suite::curvature_report("-1"), DomainError);
  CHECK_THROWS_AS(suite::curvature_report("3/"), DomainError);

  CHECK(find(suite::g2_report(orbit::RealForm::kSplit), "signature split").status == Status::kPass);
  CHECK(suite::g2_report(orbit::RealForm::kSplit).size() == 1);
  CHECK_FALSE(report::any_failed(suite::g2_report(orbit::RealForm::kSu21)));

  const auto schwarzian = suite::generalized_report(wilczynski::parse_ode(3, "3*y2^2/(2*y1)"));
  REQUIRE(schwarzian.size() == 1);
  CHECK(schwarzian[0].lhs == "0");
  CHECK(suite::generalized_kappa_report("6751269/400").size() == 5);

  CHECK(find(suite::orbit_report(2, 3), "Legendrian lift").lhs == "smooth");
  CHECK(find(suite::orbit_report(2, 5), "Legendrian lift").lhs == "singular");
  CHECK(find(suite::orbit_report(1, 4), "Legendrian lift").lhs == "smooth");
  CHECK(find(suite::orbit_report(2, 3), "Aloff-Wallach indices").lhs == "(-8,7)");
  CHECK_THROWS_AS(suite::orbit_report(3, 6), DomainError);

  CHECK(suite::forms_i2_report("1,0,0,0,0,0,1")[0].lhs == "1");
  CHECK(suite::forms_i3_report("1,2,0,0,0,0,1", "1,2,0,0,0,0,1", "0,1,0,3,0,0,1")[0].lhs == "0");
  CHECK(suite::forms_transvectant_report("1,2,3,4", "1,2,3,4", 3, false)[0].lhs == "0");
  CHECK_THROWS_AS(suite::forms_i2_report("1,2,3"), DomainError);

  for (const auto& r : suite::sample_report(2, 5, {4, 1})) CHECK(r.status == Status::kPass);
  CHECK_THROWS_AS(suite::sample_report(1, 2, {4, 1}), DomainError);
}
