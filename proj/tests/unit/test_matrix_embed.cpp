#include <doctest.h>

#include <random>

#include "cuntzlab/endomorphism.hpp"
#include "cuntzlab/errors.hpp"
#include "cuntzlab/matrix_embed.hpp"
#include "cuntzlab/parse.hpp"
#include "cuntzlab/verify.hpp"
#include "support/eigen_norm.hpp"

using namespace cuntzlab;

namespace {

AlgebraElement el(const char* text, int n = 2) { return parse_element(text, n); }

bool all_scalar(const OperatorMatrix& m) {
  for (const auto& e : m.entries) {
    const auto c = canonicalize(e);
    for (const auto& [mono, coeff] : c.terms()) {
      if (!mono.left.empty() || !mono.right.empty()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("psi examples") {
  const auto id = psi(AlgebraElement::identity(2), 1);
  REQUIRE(id.dim == 2);
  CHECK(equals(id.at(0, 0), AlgebraElement::identity(2)));
  CHECK(equals(id.at(1, 1), AlgebraElement::identity(2)));
  CHECK(id.at(0, 1).empty());

  const auto s1 = psi(el("s[1]"), 1);
  CHECK(equals(s1.at(0, 0), el("s[1]")));
  CHECK(equals(s1.at(0, 1), el("s[2]")));
  CHECK(is_zero(s1.at(1, 0)));
  CHECK(is_zero(s1.at(1, 1)));

  CHECK(all_scalar(psi(mul(el("s[1] t[2]"), el("s[1] t[1]")), 2)));
  CHECK(all_scalar(psi(el("s[1] t[2] + 1/2 * s[2] t[2]"), 2)));
  CHECK_FALSE(all_scalar(psi(el("s[11] t[2]"), 1)));
}

TEST_CASE("property: psi is a *-homomorphism") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const int k = 1 + t % 3;
    const auto a = random_element(rng, 2, 3, 3);
    const auto b = random_element(rng, 2, 3, 3);
    CHECK(equals(psi(mul(a, b), k), matmul(psi(a, k), psi(b, k))));
    CHECK(equals(psi(adjoint(a), k), conjugate_transpose(psi(a, k))));
  }
}

TEST_CASE("lemma1 decomposition examples") {
  const auto d = lemma1_decompose(el("s[1]"), 1);
  CHECK(d.direction == Direction::creation);
  REQUIRE(d.parts.size() == 2);
  const auto& t1 = d.parts.at(MultiIndex{1});
  const auto& t2 = d.parts.at(MultiIndex{2});
  CHECK(t1.at(0, 0) == Scalar(1));
  CHECK(t1.at(0, 1) == Scalar(0));
  CHECK(t1.at(1, 0) == Scalar(0));
  CHECK(t2.at(0, 1) == Scalar(1));
  CHECK(t2.at(0, 0) == Scalar(0));

  const auto x = el("s[1] t[2] + 3 * s[2] t[2]");
  const auto s = lemma1_decompose(x, 1);
  CHECK(s.direction == Direction::scalar);
  REQUIRE(s.parts.size() == 1);
  const auto& tm = s.parts.begin()->second;
  CHECK(tm.at(0, 1) == Scalar(1));
  CHECK(tm.at(1, 1) == Scalar(3));
  CHECK(tm.at(0, 0) == Scalar(0));

  CHECK(lemma1_decompose(el("t[21]"), 2).direction == Direction::annihilation);
}

TEST_CASE("property: lemma1 bound and reconstruction") {
  std::mt19937_64 rng(20240607);
  for (int t = 0; t < 100; ++t) {
    CAPTURE(t);
    const int p = t % 4;
    const int l = (t / 4) % 4;
    const auto x = random_homogeneous(rng, 2, p, l, 1 + t % 4);
    const double norm = operator_norm(x);
    CHECK(norm == doctest::Approx(testing::svd_norm_homogeneous(x, p, l)).epsilon(1e-9));
    const auto d = lemma1_decompose(x, 3);
    for (const auto& [j, part] : d.parts) {
      const auto numeric = NumericMatrix::from_exact(part);
      const double tj = spectral_norm(numeric);
      CHECK(tj == doctest::Approx(testing::svd_norm(numeric)).epsilon(1e-9));
      CHECK(tj <= norm + 1e-9);
    }
    CHECK(equals(reconstruct(d, 2), psi(x, 3)));
  }
  for (int t = 0; t < 20; ++t) {
    const auto x = random_homogeneous(rng, 2, 2, 1, 3);
    const auto d = lemma1_decompose(x, 2);
    for (const auto& [j, part] : d.parts) CHECK(spectral_norm(d.numeric(j)) <= operator_norm(x) + 1e-9);
  }
}

TEST_CASE("embedding of degree-0 elements") {
  const auto one = embed_degree0(AlgebraElement::identity(2));
  for (std::size_t r = 0; r < one.rows(); ++r) {
    for (std::size_t c = 0; c < one.cols(); ++c) CHECK(one(r, c) == std::complex<double>(r == c ? 1.0 : 0.0));
  }
  const auto sigma = Permutation::parse("(1 3 2 4)", 2, 2);
  const auto pm = embed_degree0_exact(perm_unitary(sigma));
  REQUIRE(pm.dim == 4);
  for (std::uint32_t j = 0; j < 4; ++j) {
    for (std::uint32_t i = 0; i < 4; ++i) CHECK(pm.at(i, j) == Scalar(sigma(j) == i ? 1 : 0));
  }
  const auto e = embed_degree0_exact(el("1/2 + 1/2 * s[1] t[2] + 1/2 * s[2] t[1]"));
  REQUIRE(e.dim == 2);
  for (const auto& v : e.data) CHECK(v == Scalar(Rational(1, 2)));
  CHECK_THROWS_AS(embed_degree0(el("s[1]")), DomainError);
}

TEST_CASE("operator norms") {
  CHECK(operator_norm(el("s[1]")) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(el("s[1] t[2] + s[2] t[1]")) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(el("2 * s[11] t[2]")) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(operator_norm(AlgebraElement::zero(2)) == 0.0);
  const auto b = norm_bounds(el("s[1] + 3 * s[1] t[1]"));
  CHECK(b.lower == doctest::Approx(3.0));
  CHECK(b.upper == doctest::Approx(4.0));
  CHECK_THROWS_AS(operator_norm(el("s[1] + s[1] t[1]")), DomainError);
}

TEST_CASE("property: embedding is multiplicative and isometric on F_{m,m}") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const int m = 1 + t % 3;
    const auto a = random_homogeneous(rng, 2, m, m, 1 + t % 5);
    const auto b = random_homogeneous(rng, 2, m, m, 1 + (t + 1) % 5);
    const auto ea = embed_degree0_exact(a);
    const auto eb = embed_degree0_exact(b);
    const auto ab = mul(a, b);
    const auto eab = ab.empty() ? ExactMatrix(ea.dim) : embed_degree0_exact(level(ab, {{0, static_cast<std::size_t>(m)}}));
    REQUIRE(eab.dim == ea.dim);
    bool same = true;
    for (std::size_t r = 0; r < ea.dim; ++r) {
      for (std::size_t c = 0; c < ea.dim; ++c) {
        Scalar acc;
        for (std::size_t i = 0; i < ea.dim; ++i) acc += ea.at(r, i) * eb.at(i, c);
        if (acc != eab.at(r, c)) same = false;
      }
    }
    CHECK(same);
    const double svd = testing::svd_norm(NumericMatrix::from_exact(ea));
    CHECK(operator_norm(a) == doctest::Approx(svd).epsilon(1e-9));
    CHECK(spectral_norm(NumericMatrix::from_exact(ea)) == doctest::Approx(svd).epsilon(1e-9));
  }
}
