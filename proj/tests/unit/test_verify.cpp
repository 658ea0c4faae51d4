#include <doctest.h>

#include <json.hpp>

#include "cuntzlab/errors.hpp"
#include "cuntzlab/verify.hpp"

using namespace cuntzlab;

TEST_CASE("every suite passes at its defaults") {
  for (const auto& name : verify_suite_names()) {
    CAPTURE(name);
    const auto r = run_verify_suite(name);
    CHECK(r.passed());
    CHECK(r.cases > 0);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["suite"] == name);
    CHECK(j["status"] == "pass");
  }
  CHECK(verify_suite_names().size() == 8);
}

TEST_CASE("suite metrics") {
  const auto lemma1 = run_verify_suite("lemma1");
  CHECK(lemma1.metrics.at("max_ratio") <= 1.0 + 1e-9);
  const auto oracles = run_verify_suite("oracles");
  CHECK(oracles.cases == 17);
  // Images of single monomials are partial permutation sums, mostly not single monomials.
  const auto lemma2 = run_verify_suite("lemma2");
  CHECK(lemma2.metrics.at("single_monomial_images") < lemma2.metrics.at("images"));
}

TEST_CASE("seeds make runs reproducible") {
  VerifyOptions opts;
  opts.seed = 99;
  opts.depth = 20;
  CHECK(run_verify_suite("relations", opts).to_json() == run_verify_suite("relations", opts).to_json());
  CHECK_THROWS_AS(run_verify_suite("nope"), ParseError);
}
