#include <doctest.h>

#include "coxkit/systems.hpp"
#include "coxkit/verify.hpp"

using namespace coxkit;

TEST_CASE("all suites pass on small systems") {
  for (const auto& sys : {type_a(2), type_a(3), type_b(2), dihedral(5), free_coxeter(2), right_angled_path3()}) {
    VerifyOptions opt;
    opt.radius = 3;
    opt.cutoff = 6;
    opt.kmax = 6;
    opt.random_pairs = 20;
    opt.max_syllables = 2;
    const VerificationReport r = run_suite(*sys, "all", opt);
    INFO(report_text(r));
    CHECK(r.ok());
    CHECK(r.passed() > 0);
  }
}

TEST_CASE("inapplicable suites are skipped") {
  const auto sys = type_a(2);
  const VerificationReport r = run_suite(*sys, "artin", VerifyOptions{});
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].skipped);
  CHECK(r.ok());
  CHECK(r.skipped() == 1);
}

TEST_CASE("reports are deterministic") {
  const auto sys = right_angled_commuting_pair();
  VerifyOptions one, four;
  one.radius = four.radius = 3;
  one.max_syllables = four.max_syllables = 2;
  four.threads = 4;
  CHECK(report_json(run_suite(*sys, "all", one)) == report_json(run_suite(*sys, "all", four)));
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(run_suite(*type_a(2), "nope", VerifyOptions{}), InvalidArgument);
  CHECK(suite_names().size() == 13);
}
