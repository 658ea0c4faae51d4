#include <doctest.h>

#include <random>

#include "cuntzlab/errors.hpp"
#include "cuntzlab/parse.hpp"
#include "cuntzlab/permutation.hpp"
#include "cuntzlab/verify.hpp"

using namespace cuntzlab;

TEST_CASE("element grammar") {
  const auto x = parse_element("s[1] t[2] + s[2] t[1]", 2);
  AlgebraElement expected(2);
  expected.add_term({{1}, {2}}, 1);
  expected.add_term({{2}, {1}}, 1);
  CHECK(x.same_representation(expected));

  const auto e = parse_element("1/2 + 1/2 * s[1] t[2] + 1/2 * s[2] t[1]", 2);
  CHECK(equals(e, (AlgebraElement::identity(2) + x) * Scalar(Rational(1, 2))));

  const auto m = parse_element("s[12] t[21]", 2);
  CHECK(m.same_representation(AlgebraElement::monomial(2, {1, 2}, {2, 1})));

  CHECK(equals(parse_element("3/4 - 1/3i", 2), AlgebraElement::scalar(2, Scalar(Rational(3, 4), Rational(-1, 3)))));
  CHECK(equals(parse_element("t[1] s[1]", 2), AlgebraElement::identity(2)));
  CHECK(parse_element("t[1] s[2]", 2).empty());
  CHECK(equals(parse_element(" s[ 1 ]t[1]+ s[2]t[2] ", 2), AlgebraElement::identity(2)));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_element("s[1] + s[3]", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.position() == 9);
  }
  CHECK_THROWS_AS(parse_element("s[1", 2), ParseError);
  CHECK_THROWS_AS(parse_element("", 2), ParseError);
  CHECK_THROWS_AS(parse_element("1/0", 2), ParseError);
  CHECK_THROWS_AS(parse_element("s[1] +", 2), ParseError);
  CHECK_THROWS_AS(parse_element("q[1]", 2), ParseError);
}

TEST_CASE("format round-trips") {
  CHECK(format_element(AlgebraElement::zero(2)) == "0");
  CHECK(format_element(parse_element("s[11] t[11] + s[12] t[12]", 2)) == "s[1] t[1]");
  CHECK(format_element(parse_element("s[1] t[1] + s[2] t[2]", 2)) == "1");
  CHECK(format_element(parse_element("-1i * s[1] + -3+1/2i * s[2]", 2)) == "-1i * s[1] + -3+1/2i * s[2]");
  CHECK(format_element(parse_element("-3+1/2i", 2)) == "-3+1/2i");
  CHECK(format_element(parse_element("-s[1] - 2 * s[2]", 2)) == "-s[1] - 2 * s[2]");
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_element(rng, 2 + t % 3, 3, 4);
    CHECK(equals(parse_element(format_element(a), a.n_gens()), a));
    CHECK(equals(parse_element(format_raw(a), a.n_gens()), a));
  }
}

TEST_CASE("permutation notations") {
  const auto swap = Permutation::from_cycles("(1 2)", 2, 2);
  CHECK(swap.images() == std::vector<std::uint32_t>{1, 0, 2, 3});
  CHECK(Permutation::from_cycles("(12)", 2, 2) == swap);
  CHECK(Permutation::from_cycles("(1,2)", 2, 2) == swap);
  CHECK(Permutation::from_image_word("2134", 2, 2) == swap);
  CHECK(Permutation::parse("perm-word 2134", 2, 2) == swap);
  CHECK(Permutation::parse("shift", 2, 2) == Permutation::from_cycles("(2 3)", 2, 2));
  CHECK(Permutation::parse("flip", 2, 2) == Permutation::from_cycles("(1 3)(2 4)", 2, 2));
  CHECK(Permutation::parse("id", 2, 2).is_identity());

  const auto c = Permutation::from_cycles("(1 3 2 4)", 2, 2);
  CHECK(c(MultiIndex{1, 1}) == MultiIndex{2, 1});
  CHECK(c.inverse()(MultiIndex{2, 1}) == MultiIndex{1, 1});
  CHECK(c.cycle_string() == "(1 3 2 4)");
  CHECK(c.label() == "1324");
  CHECK(Permutation::from_cycles("(2 4)(1 3)", 2, 2).label() == "(13)(24)");
  CHECK(Permutation::identity(2, 2).cycle_string() == "id");
}

TEST_CASE("permutation input errors") {
  CHECK_THROWS_AS(Permutation::from_cycles("(1 5)", 2, 2), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2)(2 3)", 2, 2), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2", 2, 2), ParseError);
  CHECK_THROWS_AS(Permutation::from_image_word("1134", 2, 2), ParseError);
  CHECK_THROWS_AS(Permutation::from_image_word("213", 2, 2), ParseError);
}

TEST_CASE("all permutations of J_2") {
  const auto all = all_permutations(2, 2);
  CHECK(all.size() == 24);
  for (const auto& p : all) CHECK(Permutation::parse(p.cycle_string(), 2, 2) == p);
}
