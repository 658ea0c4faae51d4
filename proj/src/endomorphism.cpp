#include "cuntzlab/endomorphism.hpp"

#include <algorithm>
#include <set>

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

namespace {

int unitary_rank(const AlgebraElement& u) {
  std::size_t k = 1;
  const auto canonical = canonicalize(u);
  for (const auto& [m, c] : canonical.terms()) {
    k = std::max({k, m.left.size(), m.right.size()});
  }
  return static_cast<int>(k);
}

bool is_unitary(const AlgebraElement& u) {
  const auto one = AlgebraElement::identity(u.n_gens());
  return equals(mul(adjoint(u), u), one) && equals(mul(u, adjoint(u)), one);
}

}  // namespace

EndomorphismSpec EndomorphismSpec::from_permutation(const Permutation& sigma) {
  return EndomorphismSpec(perm_unitary(sigma), sigma.rank(), Origin::permutation, sigma);
}

EndomorphismSpec EndomorphismSpec::from_unitary(const AlgebraElement& u) {
  if (!is_unitary(u)) throw DomainError("element is not unitary");
  return EndomorphismSpec(u, unitary_rank(u), Origin::unitary, std::nullopt);
}

EndomorphismSpec EndomorphismSpec::shift(int n_gens) {
  AlgebraElement u(n_gens);
  for (int i = 1; i <= n_gens; ++i) {
    for (int j = 1; j <= n_gens; ++j) {
      u.add_term(Monomial{MultiIndex{i, j}, MultiIndex{j, i}}, Scalar(1));
    }
  }
  return EndomorphismSpec(std::move(u), 2, Origin::shift,
                          Permutation::parse("shift", n_gens, 2));
}

EndomorphismSpec EndomorphismSpec::identity(int n_gens) {
  return EndomorphismSpec(AlgebraElement::identity(n_gens), 1, Origin::identity,
                          Permutation::identity(n_gens, 1));
}

std::string EndomorphismSpec::label() const {
  switch (origin_) {
    case Origin::permutation:
      return sigma_->label();
    case Origin::shift:
      return "shift";
    case Origin::identity:
      return "identity";
    case Origin::unitary:
      break;
  }
  return "unitary";
}

AlgebraElement theta(const AlgebraElement& a) {
  AlgebraElement out(a.n_gens());
  for (const auto& [m, c] : a.terms()) {
    for (int i = 1; i <= a.n_gens(); ++i) {
      out.add_term(Monomial{MultiIndex{i} + m.left, MultiIndex{i} + m.right}, c);
    }
  }
  return out;
}

AlgebraElement theta_power(const AlgebraElement& a, int m) {
  AlgebraElement out = a;
  for (int i = 0; i < m; ++i) out = theta(out);
  return out;
}

AlgebraElement perm_unitary(const Permutation& sigma) {
  AlgebraElement u(sigma.n_gens());
  for (std::uint32_t r = 0; r < sigma.degree(); ++r) {
    u.add_term(Monomial{MultiIndex::from_rank(sigma(r), sigma.rank(), sigma.n_gens()),
                        MultiIndex::from_rank(r, sigma.rank(), sigma.n_gens())},
               Scalar(1));
  }
  return u;
}

std::vector<AlgebraElement> cocycles(const EndomorphismSpec& e, int kmax) {
  std::vector<AlgebraElement> out;
  out.push_back(AlgebraElement::identity(e.n_gens()));
  AlgebraElement shifted = e.unitary();  // theta^{j}(u)
  for (int j = 0; j < kmax; ++j) {
    out.push_back(j == 0 ? e.unitary() : mul(out.back(), shifted));
    shifted = theta(shifted);
  }
  return out;
}

AlgebraElement cocycle(const EndomorphismSpec& e, int k) {
  if (k < 0) throw DomainError("cocycle index must be nonnegative");
  return cocycles(e, k).back();
}

AlgebraElement apply(const EndomorphismSpec& e, const AlgebraElement& a) {
  if (a.n_gens() != e.n_gens()) throw DomainError("alphabet size mismatch");
  std::map<std::pair<std::size_t, std::size_t>, AlgebraElement> blocks;
  std::size_t longest = 0;
  for (const auto& [m, c] : a.terms()) {
    blocks.try_emplace({m.left.size(), m.right.size()}, a.n_gens())
        .first->second.add_term(m, c);
    longest = std::max({longest, m.left.size(), m.right.size()});
  }
  const auto u = cocycles(e, static_cast<int>(longest));
  std::vector<std::optional<AlgebraElement>> u_star(u.size());

  AlgebraElement out(a.n_gens());
  for (const auto& [lengths, block] : blocks) {
    const auto [p, l] = lengths;
    if (!u_star[l]) u_star[l] = adjoint(u[l]);
    out += mul(mul(u[p], block), *u_star[l]);
  }
  return out;
}

AlgebraElement apply_power(const EndomorphismSpec& e, int m, const AlgebraElement& a) {
  AlgebraElement out = a;
  for (int i = 0; i < m; ++i) out = apply(e, out);
  return out;
}

std::vector<AlgebraElement> generator_images(const EndomorphismSpec& e) {
  std::vector<AlgebraElement> out;
  for (int i = 1; i <= e.n_gens(); ++i) {
    out.push_back(mul(e.unitary(), AlgebraElement::generator(e.n_gens(), i)));
  }
  return out;
}

bool is_gauge_invariant(const EndomorphismSpec& e) {
  return std::all_of(e.unitary().terms().begin(), e.unitary().terms().end(),
                     [](const auto& t) { return t.first.degree() == 0; });
}

bool EndomorphismReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

EndomorphismReport verify_unitary_candidate(const AlgebraElement& u) {
  const int n = u.n_gens();
  const auto one = AlgebraElement::identity(n);
  EndomorphismReport report;
  report.checks.push_back({"u* u = 1", equals(mul(adjoint(u), u), one)});
  report.checks.push_back({"u u* = 1", equals(mul(u, adjoint(u)), one)});

  std::vector<AlgebraElement> images;
  for (int i = 1; i <= n; ++i) images.push_back(mul(u, AlgebraElement::generator(n, i)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto expected = i == j ? one : AlgebraElement::zero(n);
      report.checks.push_back({"rho(s" + std::to_string(i + 1) + ")* rho(s" +
                                   std::to_string(j + 1) + ") = " + (i == j ? "1" : "0"),
                               equals(mul(adjoint(images[i]), images[j]), expected)});
    }
  }
  AlgebraElement range_sum(n);
  for (const auto& img : images) range_sum += mul(img, adjoint(img));
  report.checks.push_back({"sum_i rho(s_i) rho(s_i)* = 1", equals(range_sum, one)});
  return report;
}

EndomorphismReport verify_endomorphism(const EndomorphismSpec& e) {
  return verify_unitary_candidate(e.unitary());
}

bool range_containment(const EndomorphismSpec& e, std::size_t p, std::size_t l, int m) {
  const std::size_t shift = static_cast<std::size_t>(m) * static_cast<std::size_t>(e.rank() - 1);
  for (const auto& I : all_words(e.n_gens(), static_cast<int>(p))) {
    for (const auto& J : all_words(e.n_gens(), static_cast<int>(l))) {
      auto image = apply_power(e, m, AlgebraElement::monomial(e.n_gens(), I, J));
      if (!in_F(image, p + shift, l + shift)) return false;
    }
  }
  return true;
}

std::optional<std::size_t> unit_monomial_count(const AlgebraElement& a, std::size_t p,
                                               std::size_t l) {
  if (!in_F(a, p, l)) return std::nullopt;
  const int degree = static_cast<int>(p) - static_cast<int>(l);
  const auto leveled = level(canonicalize(a), {{degree, l}});
  std::set<MultiIndex> lefts, rights;
  for (const auto& [m, c] : leveled.terms()) {
    if (!c.is_one() || m.left.size() != p || m.right.size() != l) return std::nullopt;
    if (!lefts.insert(m.left).second || !rights.insert(m.right).second) return std::nullopt;
  }
  return leveled.size();
}

}  // namespace cuntzlab
