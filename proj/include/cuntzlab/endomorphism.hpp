#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cuntzlab/element.hpp"
#include "cuntzlab/permutation.hpp"

namespace cuntzlab {

enum class Origin { permutation, unitary, shift, identity };

/// The endomorphism rho_u of O_N determined by s_i -> u s_i for a unitary u in
/// the polynomial subalgebra.
class EndomorphismSpec {
 public:
  static EndomorphismSpec from_permutation(const Permutation& sigma);
  /// Throws DomainError unless u* u = u u* = 1.
  static EndomorphismSpec from_unitary(const AlgebraElement& u);
  /// Canonical shift: u = sum_{i,j} s_i s_j s_i^* s_j^*.
  static EndomorphismSpec shift(int n_gens);
  static EndomorphismSpec identity(int n_gens);

  const AlgebraElement& unitary() const { return u_; }
  int n_gens() const { return u_.n_gens(); }
  /// Least k >= 1 such that u lies in the span of leveled A_{k,k} terms
  /// (max(|I|,|J|) for unbalanced u).
  int rank() const { return rank_; }
  Origin origin() const { return origin_; }
  /// Set when u is literally a permutation matrix u_sigma.
  const std::optional<Permutation>& permutation() const { return sigma_; }

  std::string label() const;

 private:
  EndomorphismSpec(AlgebraElement u, int rank, Origin origin, std::optional<Permutation> sigma)
      : u_(std::move(u)), rank_(rank), origin_(origin), sigma_(std::move(sigma)) {}

  AlgebraElement u_;
  int rank_;
  Origin origin_;
  std::optional<Permutation> sigma_;
};

/// theta(a) = sum_i s_i a s_i^*.
AlgebraElement theta(const AlgebraElement& a);
AlgebraElement theta_power(const AlgebraElement& a, int m);

/// u_sigma = sum_J s_{sigma(J)} s_J^*.
AlgebraElement perm_unitary(const Permutation& sigma);

/// u_k = u theta(u) ... theta^{k-1}(u); u_0 = 1.
AlgebraElement cocycle(const EndomorphismSpec& e, int k);
/// u_0 .. u_kmax.
std::vector<AlgebraElement> cocycles(const EndomorphismSpec& e, int kmax);

/// rho_u(s_I s_J^*) = u_{|I|} s_I s_J^* u_{|J|}^*, extended linearly.
AlgebraElement apply(const EndomorphismSpec& e, const AlgebraElement& a);
AlgebraElement apply_power(const EndomorphismSpec& e, int m, const AlgebraElement& a);

/// rho_u(s_1), ..., rho_u(s_N).
std::vector<AlgebraElement> generator_images(const EndomorphismSpec& e);

/// Every term of u has gauge degree 0 (rho_u preserves the UHF algebra).
bool is_gauge_invariant(const EndomorphismSpec& e);

struct RelationCheck {
  std::string name;
  bool passed;
};

struct EndomorphismReport {
  std::vector<RelationCheck> checks;
  bool all_passed() const;
};

/// Re-derives the Cuntz relations for the images u s_i of a candidate u,
/// together with the two unitarity identities.
EndomorphismReport verify_unitary_candidate(const AlgebraElement& u);
EndomorphismReport verify_endomorphism(const EndomorphismSpec& e);

/// rho^m maps every basis monomial of A_{p,l} into F_{p+m(k-1), l+m(k-1)}.
bool range_containment(const EndomorphismSpec& e, std::size_t p, std::size_t l, int m);

/// If `a` equals a sum of distinct monomials s_I s_J^* of A_{p,l}, each with
/// coefficient 1 and with pairwise distinct I's and distinct J's (a partial
/// permutation), returns the number of monomials.
std::optional<std::size_t> unit_monomial_count(const AlgebraElement& a, std::size_t p,
                                               std::size_t l);

}  // namespace cuntzlab
