#include <doctest.h>

#include <random>

#include "cuntzlab/element.hpp"
#include "cuntzlab/errors.hpp"
#include "cuntzlab/parse.hpp"
#include "cuntzlab/verify.hpp"
#include "support/word_oracle.hpp"

using namespace cuntzlab;

namespace {

AlgebraElement el(const char* text, int n = 2) { return parse_element(text, n); }

std::vector<MultiIndex> words_up_to(int n, int max_len) {
  std::vector<MultiIndex> out;
  for (int len = 0; len <= max_len; ++len) {
    for (auto& w : all_words(n, len)) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("products of generators follow the Cuntz relations") {
  const auto s1 = AlgebraElement::generator(2, 1);
  const auto s2 = AlgebraElement::generator(2, 2);
  CHECK(equals(mul(adjoint(s1), s1), AlgebraElement::identity(2)));
  CHECK(is_zero(mul(adjoint(s1), s2)));
  CHECK(equals(mul(el("s[1] t[2]"), el("s[2] t[1]")), el("s[1] t[1]")));
}

TEST_CASE("relations hold for N = 2, 3, 4") {
  for (int n = 2; n <= 4; ++n) {
    AlgebraElement range(n);
    for (int i = 1; i <= n; ++i) {
      const auto si = AlgebraElement::generator(n, i);
      range += mul(si, adjoint(si));
      for (int j = 1; j <= n; ++j) {
        const auto expected = i == j ? AlgebraElement::identity(n) : AlgebraElement::zero(n);
        CHECK(equals(mul(adjoint(si), AlgebraElement::generator(n, j)), expected));
      }
    }
    CHECK(equals(range, AlgebraElement::identity(n)));
  }
}

TEST_CASE("adjoint") {
  const auto a = adjoint(AlgebraElement::generator(2, 1));
  REQUIRE(a.size() == 1);
  CHECK(a.terms().begin()->first.left.empty());
  CHECK(a.terms().begin()->first.right == MultiIndex{1});
  CHECK(equals(adjoint(el("1i * s[1] t[2]")), el("-1i * s[2] t[1]")));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_element(rng, 2, 3, 4);
    CHECK(adjoint(adjoint(x)).same_representation(x));
  }
}

TEST_CASE("level inserts the range projections on the right") {
  CHECK(level(AlgebraElement::identity(2), {{0, 1}}).same_representation(el("s[1] t[1] + s[2] t[2]")));
  CHECK(level(el("s[1] t[1]"), {{0, 2}}).same_representation(el("s[11] t[11] + s[12] t[12]")));
  const auto leveled = level(AlgebraElement::generator(2, 1), {{1, 1}});
  CHECK(leveled.same_representation(el("s[11] t[1] + s[12] t[2]")));
  CHECK(equals(leveled, mul(AlgebraElement::generator(2, 1), AlgebraElement::identity(2))));
  CHECK_THROWS_AS(level(el("s[11] t[11]"), {{0, 1}}), DomainError);
}

TEST_CASE("equals decides equality modulo both relations") {
  CHECK(equals(el("s[1] t[1] + s[2] t[2]"), AlgebraElement::identity(2)));
  CHECK_FALSE(equals(el("s[1] t[2]"), el("s[2] t[1]")));
  CHECK(equals(el("s[11] t[11] + s[12] t[12] + s[2] t[2]"), AlgebraElement::identity(2)));
}

TEST_CASE("gauge components and expectation") {
  const auto parts = gauge_components(el("s[1] + s[1] t[1]"));
  REQUIRE(parts.size() == 2);
  CHECK(equals(parts.at(1), el("s[1]")));
  CHECK(equals(parts.at(0), el("s[1] t[1]")));
  // s_1 s_2^* has gauge degree 0 and survives.
  CHECK(equals(expectation(el("s[1] t[2] + 2 * s[2] t[2]")), el("s[1] t[2] + 2 * s[2] t[2]")));
  CHECK(equals(expectation(el("s[1] + 2 * s[2] t[2]")), el("2 * s[2] t[2]")));
  CHECK(equals(expectation(el("s[1] t[21]")), AlgebraElement::zero(2)));
}

TEST_CASE("trace state") {
  CHECK(trace_state(AlgebraElement::identity(2)) == Scalar(1));
  CHECK(trace_state(el("s[1] t[1]")) == Scalar(Rational(1, 2)));
  CHECK(trace_state(el("s[1] t[2]")) == Scalar(0));
  CHECK(trace_state(el("s[12] t[12]", 3)) == Scalar(Rational(1, 9)));
  CHECK(trace_state(el("s[1]")) == Scalar(0));
}

TEST_CASE("monomial products agree with word rewriting for |I|,|J| <= 3") {
  const auto words = words_up_to(2, 3);
  std::vector<Monomial> monomials;
  for (const auto& i : words) {
    for (const auto& j : words) monomials.push_back({i, j});
  }
  std::size_t failures = 0;
  for (const auto& a : monomials) {
    const auto ea = AlgebraElement::monomial(2, a.left, a.right);
    for (const auto& b : monomials) {
      const auto product = mul(ea, AlgebraElement::monomial(2, b.left, b.right));
      if (!product.same_representation(testing::oracle_product(2, a, b))) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("rewriting oracle sanity") {
  using testing::oracle_product;
  CHECK(oracle_product(2, {{1}, {2}}, {{2}, {1}}).same_representation(el("s[1] t[1]")));
  CHECK(oracle_product(2, {{}, {1}}, {{2}, {}}).empty());
  CHECK(oracle_product(2, {{}, {1, 2}}, {{1}, {}}).same_representation(AlgebraElement::monomial(2, {}, {2})));
}

TEST_CASE("property: ring axioms on random elements") {
  std::mt19937_64 rng(20240607);
  for (int t = 0; t < 200; ++t) {
    CAPTURE(t);
    const int n = 2 + t % 3;
    const auto a = random_element(rng, n, 4, 1 + t % 6);
    const auto b = random_element(rng, n, 4, 1 + (t + 2) % 6);
    const auto c = random_element(rng, n, 4, 1 + (t + 4) % 6);
    CHECK(equals(mul(mul(a, b), c), mul(a, mul(b, c))));
    CHECK(equals(adjoint(mul(a, b)), mul(adjoint(b), adjoint(a))));
    CHECK(equals(mul(a, b + c), mul(a, b) + mul(a, c)));
    CHECK(equals(mul(a + b, c), mul(a, c) + mul(b, c)));
  }
}

TEST_CASE("property: canonical forms") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    CAPTURE(t);
    const auto a = random_element(rng, 2, 3, 4);
    const auto c = canonicalize(a);
    CHECK(equals(a, c));
    CHECK(canonicalize(c).same_representation(c));
    CHECK(equals(a, level_to_max(a)));
    auto targets = max_right_lengths(a);
    for (auto& [d, len] : targets) len += 1 + t % 2;
    CHECK(equals(a, level(a, targets)));
    // Equal elements written differently share one canonical form.
    CHECK(canonicalize(level(a, targets)).same_representation(c));
  }
}

TEST_CASE("property: trace of a a^* is nonnegative") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_element(rng, 2 + t % 2, 3, 3);
    const auto tr = trace_state(mul(a, adjoint(a)));
    CHECK(tr.is_real());
    CHECK(tr.re() >= 0);
  }
}
