#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "cuntzlab/endomorphism.hpp"

namespace cuntzlab {

/// Words of length <= 40 over {1..N} packed as their base-N rank, first
/// letter most significant.
using PackedWord = std::uint64_t;

std::uint64_t word_space_size(int n_gens, int len);

/// Finite description of an induced Cantor map T at output depth p: the first
/// p letters of T(w) as a function of the first `window` letters of w.
class BlockMapTable {
 public:
  BlockMapTable(int n_gens, int depth, int window, std::vector<std::uint32_t> map);

  int n_gens() const { return n_gens_; }
  int depth() const { return depth_; }
  int window() const { return window_; }
  const std::vector<std::uint32_t>& entries() const { return map_; }

  std::uint32_t operator()(PackedWord w) const { return map_[w]; }
  MultiIndex image(const MultiIndex& w) const;

  friend bool operator==(const BlockMapTable&, const BlockMapTable&) = default;

 private:
  int n_gens_;
  int depth_;
  int window_;
  std::vector<std::uint32_t> map_;
};

/// The depth-p table restricted from the depth-(p+1) table agrees with the
/// depth-p table.
bool prefix_consistent(const BlockMapTable& shallow, const BlockMapTable& deep);

/// Conjugates a table by the global letter swap 1 <-> 2 (N = 2).
BlockMapTable letter_swapped(const BlockMapTable& t);

/// rho maps every diagonal projection s_v s_v^*, |v| <= depth, to a sum of
/// diagonal projections with coefficients 1.
bool diagonal_invariant(const EndomorphismSpec& e, int depth);

/// Induced map on the standard masa at depth p, from the images of the
/// diagonal projections s_v s_v^*, |v| = p, leveled to length p + k - 1.
/// Throws DomainError if the diagonal is not preserved or the images do not
/// partition the word space.
BlockMapTable block_map(const EndomorphismSpec& e, int p);

/// The induced map T applied to finite words: a word of length L yields the
/// first L - lag letters of T(w).
class CantorMap {
 public:
  /// Letter-by-letter form of T for a permutative endomorphism: reading w, the
  /// first output letter is the first letter of sigma^{-1}(w_1..w_k), and the
  /// remaining k-1 letters of that preimage are carried into the next step.
  static CantorMap from_permutation(const Permutation& sigma);

  /// (Tw)_j = rule(w_j .. w_{j+window-1}); `rule` is indexed by packed window.
  static CantorMap sliding(int n_gens, int window, std::vector<std::uint32_t> rule);

  /// tables[d-1] is the table at depth d; words longer than the deepest
  /// table's window are rejected.
  static CantorMap from_tables(std::vector<BlockMapTable> tables);

  int n_gens() const { return n_gens_; }
  int lag() const { return lag_; }
  /// Largest input length accepted, or -1 when unbounded.
  int max_input_length() const;

  PackedWord apply(PackedWord w, int len) const;

  /// Table of this map at output depth p (window p + lag).
  BlockMapTable table(int p) const;

 private:
  struct Transducer {
    std::vector<std::uint32_t> inverse;  // sigma^{-1} on packed words of length k
    int rank;
    std::uint64_t carry_space;  // N^(k-1)
  };
  struct Sliding {
    std::vector<std::uint32_t> rule;
    int window;
  };
  struct Tables {
    std::vector<BlockMapTable> by_depth;
  };

  CantorMap(int n_gens, int lag, std::variant<Transducer, Sliding, Tables> impl)
      : n_gens_(n_gens), lag_(lag), impl_(std::make_shared<const Impl>(std::move(impl))) {}

  using Impl = std::variant<Transducer, Sliding, Tables>;
  int n_gens_;
  int lag_;
  std::shared_ptr<const Impl> impl_;
};

/// Map for the standard masa. Permutative specs use the letter-by-letter form
/// after checking it against `block_map` up to `validate_depth`; other specs
/// use symbolic tables up to `max_depth`.
CantorMap standard_masa_map(const EndomorphismSpec& e, int max_depth, int validate_depth = 6);

}  // namespace cuntzlab
