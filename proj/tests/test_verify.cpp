#include <doctest.h>

#include "robinbox/verify.hpp"

using namespace robinbox::verify;

namespace {

void require_all_pass(Suite suite) {
  const auto checks = run_suite(suite);
  CHECK_FALSE(checks.empty());
  for (const auto& c : checks) {
    INFO(report_line(c, 6));
    CHECK(c.passed());
  }
}

}  // namespace

TEST_CASE("suite names round-trip") {
  for (Suite s : {Suite::lemmas, Suite::interval, Suite::box, Suite::shapes, Suite::oracle, Suite::all}) {
    CHECK(parse_suite(to_string(s)) == s);
  }
  CHECK_FALSE(parse_suite("everything").has_value());
}

TEST_CASE("report line format") {
  CHECK(report_line({"x.y", 0.25, 0.0}, 6) == "PASS x.y 0.25 0");
  CHECK(report_line({"x.z", -1e-3, 1e-4}, 3) == "FAIL x.z -0.001 0.0001");
}

TEST_CASE("lemma suite") { require_all_pass(Suite::lemmas); }
TEST_CASE("interval suite") { require_all_pass(Suite::interval); }
TEST_CASE("box suite") { require_all_pass(Suite::box); }
TEST_CASE("oracle suite") { require_all_pass(Suite::oracle); }
TEST_CASE("shapes suite") { require_all_pass(Suite::shapes); }

TEST_CASE("a zero tolerance makes the oracle comparison fail") {
  Config cfg;
  cfg.tol_abs = 0.0;
  cfg.tol_rel = 0.0;
  bool any_failed = false;
  for (const auto& c : run_suite(Suite::oracle, cfg)) any_failed |= !c.passed();
  CHECK(any_failed);
}
