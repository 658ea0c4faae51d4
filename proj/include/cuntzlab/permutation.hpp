#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cuntzlab/multi_index.hpp"

namespace cuntzlab {

/// A permutation of the N^k words of length k. Words are identified with
/// 1..N^k through lexicographic order (for N = k = 2: 11, 12, 21, 22 are
/// 1, 2, 3, 4).
class Permutation {
 public:
  /// `images[r]` is the 0-based rank of the image of the word of rank r.
  Permutation(int n_gens, int rank, std::vector<std::uint32_t> images);

  static Permutation identity(int n_gens, int rank);

  /// Cycle notation over 1..N^k, e.g. "(1 2)(3 4)" or "(1,3,2)". When
  /// N^k <= 9 a cycle may be written without separators: "(1324)".
  static Permutation from_cycles(std::string_view text, int n_gens, int rank);

  /// One-line notation: images of 1..N^k in order, as "2134" (N^k <= 9) or
  /// separated by spaces/commas.
  static Permutation from_image_word(std::string_view text, int n_gens, int rank);

  /// "id", "shift", "flip", "perm-word <images>", or cycle notation.
  static Permutation parse(std::string_view text, int n_gens, int rank);

  int n_gens() const { return n_gens_; }
  int rank() const { return rank_; }
  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  const std::vector<std::uint32_t>& images() const { return images_; }

  std::uint32_t operator()(std::uint32_t r) const { return images_[r]; }
  MultiIndex operator()(const MultiIndex& w) const;

  Permutation inverse() const;
  bool is_identity() const;

  /// Disjoint cycles over 1..N^k in canonical form (each cycle starts at its
  /// least element, cycles ordered by that element), e.g. "(1 3)(2 4)";
  /// the identity prints as "id".
  std::string cycle_string() const;

  /// Compact label "12", "1324", "(13)(24)", "id" for N^k <= 9.
  std::string label() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  int n_gens_;
  int rank_;
  std::vector<std::uint32_t> images_;
};

/// All (N^k)! permutations in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int n_gens, int rank);

}  // namespace cuntzlab
