#include <doctest.h>

#include <json.hpp>

#include "oddlen/verifier.hpp"

using namespace oddlen;

TEST_CASE("identity catalog") {
  const auto& ids = all_identities();
  CHECK(ids.size() == 23);
  for (IdentityId id : ids) {
    CHECK(identity_from_name(identity_name(id)) == id);
    const RankCaps caps = default_caps(id);
    CHECK((caps.a > 0 || caps.b > 0));
  }
  CHECK(!identity_from_name("thm9_9").has_value());
  CHECK(default_caps(IdentityId::thm4_1_plus).a == 10);
  CHECK(default_caps(IdentityId::thm5_4_conjB).b == 8);
  CHECK(default_caps(IdentityId::defA_equivalence).a == 7);
}

TEST_CASE("single checks pass at small caps") {
  TableCache cache(2);
  CheckParams params;
  params.max_n_a = 4;
  params.max_n_b = 3;
  params.threads = 2;

  const CheckReport r1 = check_identity(IdentityId::cor4_4_full, params, cache);
  CHECK(r1.pass);
  CHECK(r1.instances == 4);
  CHECK(!r1.counterexample);
  CHECK(!r1.error);

  const CheckReport r2 = check_identity(IdentityId::thm5_4_conjB, params, cache);
  CHECK(r2.pass);
  CHECK(r2.instances == 2 + 4 + 8);

  const CheckReport r3 = check_identity(IdentityId::prop2_1_additivity, params, cache);
  CHECK(r3.pass);
  // sum over n<=4 of n! 2^(n-1) plus sum over n<=3 of (2^n n!) 2^n
  CHECK(r3.instances == (1 + 4 + 24 + 192) + (4 + 32 + 384));
}

TEST_CASE("vacuous ranges are errors, not passes") {
  TableCache cache(1);
  CheckParams params;
  params.max_n_a = 1;  // no even rank in range, so no instances
  const CheckReport r = check_identity(IdentityId::thm4_1_minus, params, cache);
  CHECK(!r.pass);
  CHECK(r.error.has_value());
  CHECK(!r.counterexample.has_value());
  CHECK(r.instances == 0);
}

TEST_CASE("replaying a single instance") {
  TableCache cache(1);
  CheckParams params;
  params.max_n_a = 4;
  params.only_instance = "n=4 I={1,3}";
  const CheckReport r = check_identity(IdentityId::thm4_1_plus, params, cache);
  CHECK(r.pass);
  CHECK(r.instances == 1);

  params.only_instance = "n=4 I={7}";  // no such instance
  const CheckReport miss = check_identity(IdentityId::thm4_1_plus, params, cache);
  CHECK(!miss.pass);
  CHECK(miss.error.has_value());
}

TEST_CASE("suite runs in catalog order and aggregates") {
  TableCache cache(2);
  SuiteConfig config;
  config.params.max_n_a = 3;
  config.params.max_n_b = 2;
  config.params.threads = 2;
  config.ids = {IdentityId::cor4_4_full, IdentityId::prop2_7_ascending,
                IdentityId::cor4_4_full};  // duplicate collapses

  const auto reports = run_suite(config, cache);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].id == IdentityId::prop2_7_ascending);
  CHECK(reports[1].id == IdentityId::cor4_4_full);
  CHECK(all_passed(reports));

  const auto none = run_suite(SuiteConfig{}, cache);
  CHECK(none.empty());
  CHECK(!all_passed(none));
}

TEST_CASE("report serialization") {
  TableCache cache(1);
  SuiteConfig config;
  config.params.max_n_a = 3;
  config.ids = {IdentityId::cor4_4_full, IdentityId::eq_chessA0};
  const auto reports = run_suite(config, cache);

  const auto doc = nlohmann::json::parse(reports_to_json(reports));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["identity"] == "eq_chessA0");
  CHECK(doc[0]["status"] == "pass");
  CHECK(doc[0]["instances"] == 7);
  CHECK(doc[1]["identity"] == "cor4_4_full");
  CHECK(doc[1].contains("elapsed_ms"));
  CHECK(!doc[0].contains("counterexample"));

  // counterexamples serialize with both polynomial routes
  CheckReport failing;
  failing.id = IdentityId::thm4_1_plus;
  failing.params = "A: n<=2, exhaustive";
  failing.pass = false;
  failing.instances = 3;
  failing.counterexample =
      Counterexample{"n=2 I={}", IntPolynomial::one(), IntPolynomial::one_minus_power(2)};
  const auto failed_doc = nlohmann::json::parse(reports_to_json({failing}));
  CHECK(failed_doc[0]["status"] == "fail");
  CHECK(failed_doc[0]["counterexample"]["instance"] == "n=2 I={}");
  CHECK(failed_doc[0]["counterexample"]["lhs"]["coeffs"] == nlohmann::json::array({1}));
  CHECK(failed_doc[0]["counterexample"]["rhs"]["coeffs"] == nlohmann::json::array({1, 0, -1}));

  const std::string line = report_line(failing);
  CHECK(line.find("FAIL") != std::string::npos);
  CHECK(line.find("n=2 I={}") != std::string::npos);
}

TEST_CASE("resource refusals surface as report errors through the suite") {
  TableCache cache(1);
  SuiteConfig config;
  config.params.max_n_b = 9;  // beyond the kind B limit
  config.ids = {IdentityId::thm5_4_conjB};
  const auto reports = run_suite(config, cache);
  REQUIRE(reports.size() == 1);
  CHECK(!reports[0].pass);
  CHECK(reports[0].error.has_value());
}
