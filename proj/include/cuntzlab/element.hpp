#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cuntzlab/multi_index.hpp"
#include "cuntzlab/scalar.hpp"

namespace cuntzlab {

/// s_I s_J^* with I = left, J = right.
struct Monomial {
  MultiIndex left;
  MultiIndex right;

  int degree() const { return static_cast<int>(left.size()) - static_cast<int>(right.size()); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Iteration order: gauge degree, then |J|, then J, then I.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.right.size() != b.right.size()) return a.right.size() < b.right.size();
    if (a.right != b.right) return a.right < b.right;
    return a.left < b.left;
  }
};

using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

/// Finite linear combination of monomials s_I s_J^* in the polynomial
/// subalgebra of O_N. Zero coefficients are never stored; the zero element is
/// the empty map.
class AlgebraElement {
 public:
  explicit AlgebraElement(int n_gens);

  static AlgebraElement zero(int n_gens) { return AlgebraElement(n_gens); }
  static AlgebraElement identity(int n_gens);
  static AlgebraElement scalar(int n_gens, const Scalar& c);
  static AlgebraElement generator(int n_gens, int i);
  static AlgebraElement monomial(int n_gens, MultiIndex left, MultiIndex right,
                                 const Scalar& coeff = Scalar(1));

  int n_gens() const { return n_gens_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds `coeff` to the coefficient of `m`, dropping it if it cancels.
  void add_term(const Monomial& m, const Scalar& coeff);

  /// Coefficient as stored (no leveling); zero when absent.
  Scalar coefficient(const Monomial& m) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }

  /// Structural equality of the stored representation. Use `equals` for
  /// equality in the algebra.
  bool same_representation(const AlgebraElement& o) const {
    return n_gens_ == o.n_gens_ && terms_ == o.terms_;
  }

 private:
  int n_gens_;
  TermMap terms_;
};

/// Product under the Cuntz relations s_i^* s_j = delta_ij.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return mul(a, b);
}

AlgebraElement adjoint(const AlgebraElement& a);

/// Inserts sum_i s_i s_i^* on the right until every term of gauge degree d
/// has right length targets[d]. Degrees absent from `targets` are copied
/// unchanged. Throws DomainError if some target is shorter than a term.
AlgebraElement level(const AlgebraElement& a, const std::map<int, std::size_t>& targets);

/// Per-degree maximal right length of the stored terms.
std::map<int, std::size_t> max_right_lengths(const AlgebraElement& a);

/// `level` with every degree raised to its own maximal right length.
AlgebraElement level_to_max(const AlgebraElement& a);

/// True iff `a` is zero in O_N.
bool is_zero(const AlgebraElement& a);

/// Equality modulo both Cuntz relations.
bool equals(const AlgebraElement& a, const AlgebraElement& b);

/// Leveled form with complete sibling groups sum_i c s_{Ii} s_{Ji}^*
/// contracted to c s_I s_J^*, repeatedly. Equal elements have identical
/// canonical forms.
AlgebraElement canonicalize(const AlgebraElement& a);

std::map<int, AlgebraElement> gauge_components(const AlgebraElement& a);

/// Conditional expectation onto the UHF algebra (degree-0 component).
AlgebraElement expectation(const AlgebraElement& a);

/// tau(E(a)) for the unique trace tau on the UHF algebra.
Scalar trace_state(const AlgebraElement& a);

/// Lies in F_{p,l} = span{ s_I s_J^* : |I| = p, |J| = l }.
bool in_F(const AlgebraElement& a, std::size_t p, std::size_t l);

/// Is literally one monomial of A_{p,l} with coefficient 1.
bool in_A(const AlgebraElement& a, std::size_t p, std::size_t l);

}  // namespace cuntzlab
