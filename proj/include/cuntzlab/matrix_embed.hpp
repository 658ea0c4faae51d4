#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "cuntzlab/element.hpp"

namespace cuntzlab {

/// Square matrix of algebra elements; rows and columns are indexed by the
/// words of length k in lexicographic order.
struct OperatorMatrix {
  int n_gens;
  int k;
  std::size_t dim;
  std::vector<AlgebraElement> entries;  // row-major

  const AlgebraElement& at(std::size_t row, std::size_t col) const {
    return entries[row * dim + col];
  }
};

/// Entrywise equality under `equals`.
bool equals(const OperatorMatrix& a, const OperatorMatrix& b);

/// Product with entries multiplied by `mul`.
OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b);

/// Conjugate transpose with entries mapped by `adjoint`.
OperatorMatrix conjugate_transpose(const OperatorMatrix& a);

/// Exact square matrix over the Gaussian rationals.
struct ExactMatrix {
  std::size_t dim = 0;
  std::vector<Scalar> data;  // row-major

  explicit ExactMatrix(std::size_t d = 0) : dim(d), data(d * d) {}
  Scalar& at(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

class NumericMatrix {
 public:
  NumericMatrix() = default;
  NumericMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Rounds every entry to the nearest double. Throws if an entry is not finite.
  static NumericMatrix from_exact(const ExactMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::complex<double>& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<std::complex<double>>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::complex<double>> data_;
};

/// Psi_k(X) = sum_{K,M} e_{K,M} (x) s_K^* X s_M.
OperatorMatrix psi(const AlgebraElement& x, int k);

enum class Direction { creation, annihilation, scalar };

/// Psi_k(X) = sum_J T_J (x) s_J (creation), sum_J T_J (x) s_J^* (annihilation),
/// or T (x) 1 (scalar, keyed by the empty word).
struct Lemma1Decomposition {
  Direction direction;
  int degree;
  int k;
  std::map<MultiIndex, ExactMatrix> parts;

  NumericMatrix numeric(const MultiIndex& j) const {
    return NumericMatrix::from_exact(parts.at(j));
  }
};

/// X must be gauge-homogeneous and lie in F_{p,l} with k >= max(p, l).
Lemma1Decomposition lemma1_decompose(const AlgebraElement& x, int k);

/// Rebuilds sum_J T_J (x) s_J (or s_J^*, or 1) as an operator matrix.
OperatorMatrix reconstruct(const Lemma1Decomposition& d, int n_gens);

/// Levels a degree-0 X to bidegree (m, m), m its largest right length, and
/// returns the N^m x N^m matrix of coefficients of s_I s_J^*.
NumericMatrix embed_degree0(const AlgebraElement& x);
ExactMatrix embed_degree0_exact(const AlgebraElement& x);

struct PowerIterationOptions {
  double tolerance = 1e-12;
  int max_iterations = 10000;
  std::size_t max_dim = 1024;
};

/// Largest singular value, by power iteration on A^* A.
double spectral_norm(const NumericMatrix& a, const PowerIterationOptions& opts = {});

/// Largest eigenvalue of a Hermitian positive semidefinite matrix.
double top_eigenvalue_psd(const NumericMatrix& a, const PowerIterationOptions& opts = {});

/// ||X|| for gauge-homogeneous X, as sqrt of the top eigenvalue of the
/// matrix of X^* X.
double operator_norm(const AlgebraElement& x, const PowerIterationOptions& opts = {});

struct NormBounds {
  double lower;  // max over gauge components
  double upper;  // sum over gauge components
};

NormBounds norm_bounds(const AlgebraElement& x, const PowerIterationOptions& opts = {});

}  // namespace cuntzlab
