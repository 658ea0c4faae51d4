#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cuntzlab/block_map.hpp"

namespace cuntzlab {

/// Closed-form induced maps on the Cantor set {1,2}^N. Each reads a fixed
/// window of 1 or 2 letters per output letter.
enum class OracleId {
  id,
  shift,
  flip,
  first_letter_flip,
  psi12,
  psi1324,
  t13,
  t1432,
  t123,
  t142,
  tEF,
  case2A,
  case2B,
};

std::string oracle_name(OracleId o);
/// Accepts the names printed by `oracle_name`; throws ParseError otherwise.
OracleId parse_oracle(std::string_view name);
const std::vector<OracleId>& all_oracles();
int oracle_window(OracleId o);

/// The word of length |w| - (window - 1). Throws DomainError if w is shorter
/// than the window or uses letters outside {1,2}.
MultiIndex oracle_map(OracleId o, const MultiIndex& w);

/// The oracle as a map on packed words (length preserved up to window - 1).
CantorMap oracle_cantor_map(OracleId o);

/// block_map(e, p) agrees with the oracle, truncated to p letters, for every
/// p <= depth.
bool oracle_equivalence(const EndomorphismSpec& e, OracleId o, int depth);

/// case2A when rho(s_1 s_1^*) = s_12 s_12^* + s_22 s_22^*, case2B when it is
/// s_11 s_11^* + s_21 s_21^*, nothing otherwise.
std::optional<OracleId> case2_selector(const EndomorphismSpec& e);

}  // namespace cuntzlab
