#include <catch2/catch_amalgamated.hpp>

#include "griff/verify.hpp"

using griff::Report;
using griff::SuiteParams;
using griff::SuiteStatus;

namespace {

SuiteParams capped(long max_n) {
  SuiteParams p;
  p.bounds["max-n"] = max_n;
  return p;
}

}  // namespace

TEST_CASE("every registered suite is runnable and acceptable at reduced bounds") {
  for (const auto& name : griff::suite_names()) {
    CAPTURE(name);
    Report rep = griff::run_suite(name, capped(4));
    CHECK(rep.suite == name);
    CHECK(rep.checks_run > 0);
    CHECK(griff::report_acceptable(rep));
  }
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(griff::run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("reruns produce identical reports") {
  for (const auto& name : {"td-ratio-deg2", "cy-semistable", "pe-sigma"}) {
    Report a = griff::run_suite(name, capped(4));
    Report b = griff::run_suite(name, capped(4));
    CHECK(a.status == b.status);
    CHECK(a.checks_run == b.checks_run);
    CHECK(a.witnesses.size() == b.witnesses.size());
  }
}

TEST_CASE("the documented deviation is reported with its exact witnesses") {
  Report rep = griff::run_suite("squared-closed-as-printed");
  CHECK(rep.status == SuiteStatus::DISCREPANCY);
  REQUIRE(rep.witnesses.size() == 2);
  CHECK(rep.witnesses[0].input.find("(n,r,a)=(2,1,2)") != std::string::npos);
  CHECK(rep.witnesses[0].expected == "-1");
  CHECK(rep.witnesses[0].actual == "3");
  CHECK(rep.witnesses[1].expected == "-1");
  CHECK(rep.witnesses[1].actual == "-1");
  CHECK(griff::report_acceptable(rep));
}

TEST_CASE("acceptability rejects PASS with witnesses and altered discrepancies") {
  Report fake{"pe-sigma", SuiteStatus::PASS, 1, {{"x", "1", "2"}}};
  CHECK_FALSE(griff::report_acceptable(fake));
  Report wrong{"squared-closed-as-printed", SuiteStatus::PASS, 4, {}};
  CHECK_FALSE(griff::report_acceptable(wrong));
  Report drifted{"squared-closed-as-printed",
                 SuiteStatus::DISCREPANCY,
                 4,
                 {{"(n,r,a)=(2,1,2)", "-1", "4"}, {"(n,r,a)=(2,1,2)", "-1", "-1"}}};
  CHECK_FALSE(griff::report_acceptable(drifted));
}

TEST_CASE("suite check counts scale with the requested bounds") {
  Report small = griff::run_suite("v-from-u", capped(5));
  Report large = griff::run_suite("v-from-u", capped(20));
  CHECK(small.checks_run < large.checks_run);
  // max-n only caps; it never extends past the registered default.
  Report over = griff::run_suite("rho-split", capped(1000));
  Report def = griff::run_suite("rho-split", SuiteParams{});
  CHECK(over.checks_run == def.checks_run);
}
