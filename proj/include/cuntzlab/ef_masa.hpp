#pragma once

#include <string>
#include <string_view>

#include "cuntzlab/block_map.hpp"

namespace cuntzlab {

/// A word over {E, F}, stored with E as letter 1 and F as letter 2.
struct ProjectionWord {
  MultiIndex letters;

  static ProjectionWord parse(std::string_view text);  // e.g. "EFE"
  std::string to_string() const;
  std::size_t depth() const { return letters.size(); }
};

/// X = s_1 s_2^* + s_2 s_1^* in O_2.
AlgebraElement ef_x();
/// E = (1 + X) / 2.
AlgebraElement ef_e();
/// F = (1 - X) / 2.
AlgebraElement ef_f();

/// P_q = q_1 theta(q_2) ... theta^{m-1}(q_m).
AlgebraElement projection(const ProjectionWord& q);

/// Induced map on the E/F masa at depth p, by re-expressing rho(P_q) for each
/// q of length p as a 0/1 sum of the P_r, |r| = p + k - 1, with P_r <= rho(P_q)
/// decided by mul(P_r, rho(P_q)) == P_r. Cost grows like 4^p; p <= 4.
BlockMapTable ef_block_map(const EndomorphismSpec& e, int p);

/// Same table for permutative specs on O_2, computed exactly in integers:
/// rho(P_q) = u_p (P_q (x) 1) u_p^*, and its diagonal entries in the E/F basis
/// are sums of squared Walsh-Hadamard coefficients. A projection with only 0/1
/// diagonal entries in an orthonormal basis is diagonal in that basis, so the
/// entries decide invariance.
BlockMapTable ef_block_map_fast(const EndomorphismSpec& e, int p);

/// The induced map on the E/F masa. When the depth-d tables for
/// d <= validate_depth are the sliding extension of the depth-1 table, the
/// map is that sliding rule of window k; otherwise it is the exact tables up
/// to max_table_depth. Permutative specs use the integer tables; others use
/// the symbolic ones, which caps both depths at 5 - k.
CantorMap ef_cantor_map(const EndomorphismSpec& e, int validate_depth = 8, int max_table_depth = 10);

}  // namespace cuntzlab
