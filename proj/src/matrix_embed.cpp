#include "cuntzlab/matrix_embed.hpp"

#include <cmath>
#include <string>

#include <mpfr.h>

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

namespace {

double nearest_double(const Rational& q) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, q.get_mpq_t(), MPFR_RNDN);
  double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

std::size_t power_of(int base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= static_cast<std::size_t>(base);
  return out;
}

bool homogeneous(const AlgebraElement& x, int* degree) {
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (first) {
      *degree = m.degree();
      first = false;
    } else if (m.degree() != *degree) {
      return false;
    }
  }
  if (first) *degree = 0;
  return true;
}

}  // namespace

bool equals(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim != b.dim) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (!equals(a.entries[i], b.entries[i])) return false;
  }
  return true;
}

OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim != b.dim) throw DomainError("operator matrix dimension mismatch");
  OperatorMatrix out{a.n_gens, a.k, a.dim, {}};
  out.entries.reserve(a.dim * a.dim);
  for (std::size_t r = 0; r < a.dim; ++r) {
    for (std::size_t c = 0; c < a.dim; ++c) {
      AlgebraElement sum(a.n_gens);
      for (std::size_t j = 0; j < a.dim; ++j) sum += mul(a.at(r, j), b.at(j, c));
      out.entries.push_back(std::move(sum));
    }
  }
  return out;
}

OperatorMatrix conjugate_transpose(const OperatorMatrix& a) {
  OperatorMatrix out{a.n_gens, a.k, a.dim, {}};
  out.entries.reserve(a.dim * a.dim);
  for (std::size_t r = 0; r < a.dim; ++r) {
    for (std::size_t c = 0; c < a.dim; ++c) out.entries.push_back(adjoint(a.at(c, r)));
  }
  return out;
}

NumericMatrix NumericMatrix::from_exact(const ExactMatrix& m) {
  NumericMatrix out(m.dim, m.dim);
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    std::complex<double> z(nearest_double(m.data[i].re()), nearest_double(m.data[i].im()));
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("matrix entry not representable as a finite double");
    }
    out.data_[i] = z;
  }
  return out;
}

OperatorMatrix psi(const AlgebraElement& x, int k) {
  if (k < 0) throw DomainError("psi needs k >= 0");
  const int n = x.n_gens();
  const auto words = all_words(n, k);
  OperatorMatrix out{n, k, words.size(), {}};
  out.entries.reserve(words.size() * words.size());
  for (const auto& K : words) {
    auto left = mul(AlgebraElement::monomial(n, {}, K), x);
    for (const auto& M : words) {
      out.entries.push_back(mul(left, AlgebraElement::monomial(n, M, {})));
    }
  }
  return out;
}

Lemma1Decomposition lemma1_decompose(const AlgebraElement& x, int k) {
  int degree = 0;
  if (!homogeneous(x, &degree)) throw DomainError("element is not gauge-homogeneous");
  const auto canonical = canonicalize(x);
  std::size_t l = 0;
  for (const auto& [m, c] : canonical.terms()) l = std::max(l, m.right.size());
  const std::size_t p = static_cast<std::size_t>(static_cast<long>(l) + degree);
  if (static_cast<std::size_t>(k) < std::max(p, l)) {
    throw DomainError("k = " + std::to_string(k) + " is below max(p, l) = " +
                      std::to_string(std::max(p, l)));
  }

  Lemma1Decomposition out{degree > 0   ? Direction::creation
                          : degree < 0 ? Direction::annihilation
                                       : Direction::scalar,
                          degree, k, {}};
  const auto matrix = psi(canonical, k);
  const std::size_t width = static_cast<std::size_t>(std::abs(degree));
  for (const auto& J : all_words(x.n_gens(), static_cast<int>(width))) {
    out.parts.emplace(J, ExactMatrix(matrix.dim));
  }
  for (std::size_t r = 0; r < matrix.dim; ++r) {
    for (std::size_t c = 0; c < matrix.dim; ++c) {
      for (const auto& [m, coeff] : matrix.at(r, c).terms()) {
        const MultiIndex& word = degree >= 0 ? m.left : m.right;
        const MultiIndex& other = degree >= 0 ? m.right : m.left;
        if (!other.empty() || word.size() != width) {
          throw DomainError("entry of Psi_k(X) is not of the expected form");
        }
        out.parts.at(word).at(r, c) += coeff;
      }
    }
  }
  return out;
}

OperatorMatrix reconstruct(const Lemma1Decomposition& d, int n_gens) {
  const std::size_t dim = d.parts.begin()->second.dim;
  OperatorMatrix out{n_gens, d.k, dim, std::vector<AlgebraElement>(dim * dim, AlgebraElement(n_gens))};
  for (const auto& [J, t] : d.parts) {
    const auto basis = d.direction == Direction::annihilation
                           ? AlgebraElement::monomial(n_gens, {}, J)
                           : AlgebraElement::monomial(n_gens, J, {});
    for (std::size_t i = 0; i < t.data.size(); ++i) {
      if (!t.data[i].is_zero()) out.entries[i] += basis * t.data[i];
    }
  }
  return out;
}

ExactMatrix embed_degree0_exact(const AlgebraElement& x) {
  std::size_t m = 0;
  for (const auto& [mono, c] : x.terms()) {
    if (mono.degree() != 0) throw DomainError("embed_degree0 needs gauge degree 0");
    m = std::max(m, mono.right.size());
  }
  const std::size_t dim = power_of(x.n_gens(), static_cast<int>(m));
  if (dim > 1024 || m > 10) throw BudgetExceeded("matrix dimension exceeds cap 1024");
  ExactMatrix out(dim);
  const auto leveled = level(x, {{0, m}});
  for (const auto& [mono, c] : leveled.terms()) {
    out.at(mono.left.rank(x.n_gens()), mono.right.rank(x.n_gens())) += c;
  }
  return out;
}

NumericMatrix embed_degree0(const AlgebraElement& x) {
  return NumericMatrix::from_exact(embed_degree0_exact(x));
}

double top_eigenvalue_psd(const NumericMatrix& a, const PowerIterationOptions& opts) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw DomainError("matrix is not square");
  if (n > opts.max_dim) throw BudgetExceeded("matrix dimension exceeds cap");
  if (n == 0) return 0.0;

  // All-ones seed, perturbed by a low-discrepancy offset so that it is not
  // orthogonal to the top eigenvector of structured matrices.
  std::vector<std::complex<double>> v(n), w(n);
  constexpr double kGolden = 0.6180339887498949;
  double norm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double frac = std::fmod(static_cast<double>(i + 1) * kGolden, 1.0);
    v[i] = 1.0 + 0.5 * frac;
    norm += std::norm(v[i]);
  }
  norm = std::sqrt(norm);
  for (auto& z : v) z /= norm;

  double scale = 0;
  for (const auto& z : a.data()) scale = std::max(scale, std::abs(z));
  if (scale == 0) return 0.0;

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    for (std::size_t r = 0; r < n; ++r) {
      std::complex<double> s = 0;
      for (std::size_t c = 0; c < n; ++c) s += a(r, c) * v[c];
      w[r] = s;
    }
    std::complex<double> rq = 0;
    double wnorm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      rq += std::conj(v[i]) * w[i];
      wnorm += std::norm(w[i]);
    }
    wnorm = std::sqrt(wnorm);
    const double lambda = rq.real();
    if (wnorm == 0) return 0.0;
    double residual = 0;
    for (std::size_t i = 0; i < n; ++i) residual += std::norm(w[i] - lambda * v[i]);
    residual = std::sqrt(residual);
    if (residual <= opts.tolerance * std::max(std::abs(lambda), scale * 1e-300)) return lambda;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wnorm;
  }
  throw ConvergenceError("power iteration did not converge in " +
                         std::to_string(opts.max_iterations) + " iterations");
}

double spectral_norm(const NumericMatrix& a, const PowerIterationOptions& opts) {
  NumericMatrix gram(a.cols(), a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::complex<double> s = 0;
      for (std::size_t r = 0; r < a.rows(); ++r) s += std::conj(a(r, i)) * a(r, j);
      gram(i, j) = s;
    }
  }
  return std::sqrt(std::max(0.0, top_eigenvalue_psd(gram, opts)));
}

double operator_norm(const AlgebraElement& x, const PowerIterationOptions& opts) {
  int degree = 0;
  if (!homogeneous(x, &degree)) throw DomainError("operator_norm needs a gauge-homogeneous element");
  if (x.empty()) return 0.0;
  const auto gram = embed_degree0(canonicalize(mul(adjoint(x), x)));
  return std::sqrt(std::max(0.0, top_eigenvalue_psd(gram, opts)));
}

NormBounds norm_bounds(const AlgebraElement& x, const PowerIterationOptions& opts) {
  NormBounds out{0.0, 0.0};
  for (const auto& [degree, component] : gauge_components(x)) {
    const double n = operator_norm(component, opts);
    out.lower = std::max(out.lower, n);
    out.upper += n;
  }
  return out;
}

}  // namespace cuntzlab
