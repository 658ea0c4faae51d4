#include <doctest.h>

#include <json.hpp>

#include "cuntzlab/block_map.hpp"
#include "cuntzlab/endomorphism.hpp"
#include "cuntzlab/entropy.hpp"
#include "cuntzlab/errors.hpp"
#include "cuntzlab/oracles.hpp"
#include "cuntzlab/parse.hpp"
#include "cuntzlab/verify.hpp"

using namespace cuntzlab;

namespace {

EndomorphismSpec perm(const std::string& cycles) {
  return EndomorphismSpec::from_permutation(Permutation::parse(cycles, 2, 2));
}

MultiIndex w(const char* digits) { return MultiIndex::from_digits(digits); }

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

}  // namespace

TEST_CASE("block map examples") {
  const auto shift = block_map(perm("(2 3)"), 2);
  CHECK(shift.window() == 3);
  for (const auto& x : all_words(2, 3)) CHECK(shift.image(x) == x.suffix_from(1));

  const auto id = block_map(EndomorphismSpec::identity(2), 2);
  CHECK(id.window() == 2);
  for (const auto& x : all_words(2, 2)) CHECK(id.image(x) == x);

  const auto t13 = block_map(perm("(1 3)"), 1);
  for (const auto& x : all_words(2, 2)) CHECK(t13.image(x) == MultiIndex{x[0] != x[1] ? 1 : 2});

  CHECK_THROWS_AS(block_map(perm("(1 2)"), 0), DomainError);
}

TEST_CASE("block maps partition the word space and are prefix consistent") {
  for (const auto& sigma : all_permutations(2, 2)) {
    CAPTURE(sigma.label());
    const auto e = EndomorphismSpec::from_permutation(sigma);
    const auto t = standard_masa_map(e, 9, 4);
    for (int p = 1; p <= 8; ++p) {
      const auto shallow = t.table(p);
      const auto deep = t.table(p + 1);
      CHECK(prefix_consistent(shallow, deep));
      // Every output word of length p has a preimage of the same measure.
      std::vector<std::uint64_t> hits(word_space_size(2, p));
      for (auto v : shallow.entries()) ++hits[v];
      for (auto h : hits) CHECK(h == 2);
    }
    for (int p = 1; p <= 4; ++p) {
      const auto symbolic = block_map(e, p);
      CHECK(symbolic == t.table(p));
      CHECK(prefix_consistent(symbolic, block_map(e, p + 1)));
    }
  }
}

TEST_CASE("letter-swapped rows are conjugate by the global flip") {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"(1 2)", "(3 4)"},     {"(1 3 2 4)", "(1 4 2 3)"}, {"(1 3)", "(2 4)"},
      {"(1 4 3 2)", "(1 2 3 4)"}, {"(1 2 3)", "(2 4 3)"},     {"(1 4 2)", "(1 3 4)"}};
  for (const auto& [a, b] : pairs) {
    CAPTURE(a);
    for (int p = 1; p <= 4; ++p) CHECK(letter_swapped(block_map(perm(a), p)) == block_map(perm(b), p));
  }
}

TEST_CASE("diagonal invariance") {
  for (const auto& sigma : all_permutations(2, 2)) {
    CHECK(diagonal_invariant(EndomorphismSpec::from_permutation(sigma), 4));
  }
  CHECK(diagonal_invariant(EndomorphismSpec::from_unitary(parse_element("1i", 2)), 3));
  const auto mixing = EndomorphismSpec::from_unitary(
      parse_element("1/2+1/2i * s[1] t[1] + 1/2-1/2i * s[1] t[2] + 1/2-1/2i * s[2] t[1] + 1/2+1/2i * s[2] t[2]", 2));
  CHECK_FALSE(diagonal_invariant(mixing, 2));
  CHECK_THROWS_AS(block_map(mixing, 1), DomainError);
}

TEST_CASE("letter-by-letter maps agree with the symbolic tables") {
  for (const auto& sigma : all_permutations(2, 2)) {
    const auto fast = CantorMap::from_permutation(sigma);
    const auto e = EndomorphismSpec::from_permutation(sigma);
    for (int p = 1; p <= 5; ++p) CHECK(fast.table(p) == block_map(e, p));
  }
  for (int n = 2; n <= 3; ++n) {
    const auto sigma = Permutation::parse("(1 2 3)", n, 2);
    const auto fast = CantorMap::from_permutation(sigma);
    for (int p = 1; p <= 3; ++p) CHECK(fast.table(p) == block_map(EndomorphismSpec::from_permutation(sigma), p));
  }
  const auto rank3 = Permutation::parse("(1 5 2)(3 8)", 2, 3);
  const auto fast = CantorMap::from_permutation(rank3);
  for (int p = 1; p <= 3; ++p) CHECK(fast.table(p) == block_map(EndomorphismSpec::from_permutation(rank3), p));
}

TEST_CASE("join counts") {
  const auto id = standard_masa_map(EndomorphismSpec::identity(2), 8);
  const auto shift = standard_masa_map(perm("(2 3)"), 20);
  const auto flip = standard_masa_map(perm("(1 3)(2 4)"), 20);
  for (int p = 1; p <= 4; ++p) {
    const auto ci = join_counts(id, p, 8);
    const auto cs = join_counts(shift, p, 8);
    const auto cf = join_counts(flip, p, 8);
    for (int n = 1; n <= 8; ++n) {
      CHECK(ci[n - 1] == pow2(p));
      CHECK(cs[n - 1] == pow2(p + n - 1));
      CHECK(cf[n - 1] == pow2(p));
    }
  }
  CHECK(join_count(shift, 3, 5) == pow2(7));
  CHECK_THROWS_AS(join_counts(shift, 4, 16, 1000), BudgetExceeded);
}

TEST_CASE("property: join counts are monotone and bounded") {
  for (const auto& sigma : all_permutations(2, 2)) {
    const auto t = CantorMap::from_permutation(sigma);
    std::vector<std::uint64_t> previous;
    for (int p = 1; p <= 4; ++p) {
      const auto c = join_counts(t, p, 8);
      CHECK(c[0] <= pow2(p));
      for (int n = 1; n <= 8; ++n) {
        CHECK(c[n - 1] <= pow2(p + n - 1));
        if (n > 1) CHECK(c[n - 1] >= c[n - 2]);
        if (!previous.empty()) CHECK(c[n - 1] >= previous[n - 1]);
      }
      previous = c;
    }
  }
}

TEST_CASE("entropy verdicts") {
  const auto shift = entropy_estimate(perm("(2 3)"), 4, 16);
  CHECK(shift.verdict == Verdict::log2);
  CHECK(shift.estimate_nats == doctest::Approx(0.693147).epsilon(1e-6));
  for (const auto& r : shift.reports) {
    REQUIRE(r.increments.size() == 15);
    for (const auto& inc : r.increments) CHECK(inc.exact_bits == std::optional<long>(1));
  }
  CHECK(entropy_estimate(perm("(1 2)"), 4, 16).verdict == Verdict::zero);
  CHECK(entropy_estimate(perm("(1 2 3)"), 4, 16).verdict == Verdict::log2);
  CHECK(entropy_estimate(EndomorphismSpec::identity(2), 4, 16).verdict == Verdict::zero);
  CHECK(entropy_estimate(EndomorphismSpec::identity(2), 4, 16).estimate_nats == 0.0);
}

TEST_CASE("report rules on synthetic counts") {
  CHECK(make_report("x", "standard", 1, {2, 4, 8, 16, 32}).verdict == Verdict::log2);
  CHECK(make_report("x", "standard", 1, {2, 3, 4, 4, 4, 4}).verdict == Verdict::zero);
  const auto r = make_report("x", "standard", 1, {2, 3, 5, 8, 13, 21, 34, 55});
  CHECK(r.verdict == Verdict::inconclusive);
  CHECK(r.estimate_nats == doctest::Approx(0.48).epsilon(0.05));
  CHECK_FALSE(r.increments[1].exact_bits.has_value());
  CHECK(summarize({make_report("x", "s", 1, {2, 2, 2, 2, 2}), make_report("x", "s", 2, {4, 8, 16, 32, 64})}).verdict ==
        Verdict::log2);
}

TEST_CASE("report json shape") {
  const auto summary = entropy_estimate(perm("(2 3)"), 2, 6);
  const auto j = nlohmann::json::parse(summary.to_json());
  CHECK(j["summary"]["verdict"] == "log2");
  REQUIRE(j["reports"].size() == 2);
  for (const auto& r : j["reports"]) {
    CHECK(r["perm"].is_string());
    CHECK(r["masa"] == "standard");
    CHECK(r["p"].is_number_integer());
    CHECK(r["verdict"].is_string());
    CHECK(r["estimate_nats"].is_number());
    CHECK(r["increments"].is_array());
    for (const auto& c : r["counts"]) {
      CHECK(c[0].is_number_integer());
      CHECK(c[1].is_string());
    }
  }
  CHECK(j["reports"][0]["counts"][5][1] == "64");
}

TEST_CASE("separation check") {
  CHECK(separation_check(perm("(1 3)"), 10));
  CHECK_FALSE(separation_check(EndomorphismSpec::identity(2), 6));
  CHECK(separation_check(oracle_cantor_map(OracleId::tEF), 10));
  for (const auto& sigma : all_permutations(2, 2)) {
    const auto e = EndomorphismSpec::from_permutation(sigma);
    if (separation_check(e, 8)) CHECK(entropy_estimate(e, 4, 16).verdict == Verdict::log2);
  }
}

TEST_CASE("oracle formulas") {
  CHECK(oracle_map(OracleId::t13, w("1111")) == w("222"));
  CHECK(oracle_map(OracleId::psi12, w("1212")) == w("1122"));
  CHECK(oracle_map(OracleId::tEF, w("1122")) == w("121"));
  CHECK(oracle_map(OracleId::shift, w("1122")) == w("122"));
  CHECK(oracle_map(OracleId::flip, w("12")) == w("21"));
  CHECK(oracle_map(OracleId::first_letter_flip, w("122")) == w("222"));
  CHECK(oracle_map(OracleId::t1432, w("1122")) == w("112"));
  CHECK(oracle_map(OracleId::case2A, w("1212")) == w("121"));
  CHECK(oracle_map(OracleId::case2B, w("1212")) == w("212"));
  CHECK_THROWS_AS(oracle_map(OracleId::tEF, w("1")), DomainError);
  CHECK_THROWS_AS(oracle_map(OracleId::id, w("13")), DomainError);
  for (auto o : all_oracles()) CHECK(parse_oracle(oracle_name(o)) == o);
  CHECK_THROWS_AS(parse_oracle("nope"), ParseError);
}

TEST_CASE("t142 letter one follows rho(s1 s1^*)") {
  // rho(s_1 s_1^*) = s_22 s_22^* + s_11 s_11^*: (Tw)_1 = 1 exactly when w_1 = w_2.
  const auto e = perm("(1 4 2)");
  CHECK(equals(apply(e, parse_element("s[1] t[1]", 2)), parse_element("s[22] t[22] + s[11] t[11]", 2)));
  for (const auto& x : all_words(2, 3)) {
    CHECK(oracle_map(OracleId::t142, x)[0] == (x[0] == x[1] ? 1 : 2));
  }
}

TEST_CASE("oracle equivalence") {
  CHECK(oracle_equivalence(perm("(1 2)"), OracleId::psi12, 12));
  CHECK(oracle_equivalence(perm("(2 3)"), OracleId::shift, 12));
  const auto e14 = perm("(1 4)");
  const auto chosen = case2_selector(e14);
  REQUIRE(chosen.has_value());
  CHECK(oracle_equivalence(e14, *chosen, 12));
  CHECK_FALSE(oracle_equivalence(perm("(1 2)"), OracleId::psi1324, 4));
  CHECK_FALSE(case2_selector(perm("(1 2)")).has_value());
  std::size_t selected = 0;
  for (const auto& pairing : oracle_pairings()) {
    CAPTURE(pairing.perm);
    const auto e = perm(pairing.perm);
    auto o = pairing.oracle;
    if (!o) {
      o = case2_selector(e);
      ++selected;
    }
    REQUIRE(o.has_value());
    CHECK(oracle_equivalence(e, *o, 12));
    const auto t7 = standard_masa_map(e, 8).table(7);
    const auto oracle_map_fast = oracle_cantor_map(*o);
    for (const auto& x : all_words(2, 8)) {
      const auto out = MultiIndex::from_rank(oracle_map_fast.apply(x.rank(2), 8), 8 - oracle_map_fast.lag(), 2);
      CHECK(out.prefix(7) == oracle_map(*o, x).prefix(7));
      CHECK(out.prefix(7) == t7.image(x));
    }
  }
  CHECK(oracle_pairings().size() == 17);
  CHECK(selected == 7);
}
