#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cuntzlab/entropy.hpp"

namespace cuntzlab {

/// Reference values for one rank-2 permutative endomorphism of O_2.
struct Table1Expected {
  std::string label;   // "12", "(13)(24)", "id"
  std::string cycles;  // parseable cycle notation
  std::string rho_s1;  // element syntax
  std::string rho_s2;
  bool hte_log2;       // hte(rho): log 2 (true) or 0
  bool hte_c2_log2;    // hte on the standard masa
};

/// The 24 rows in reference order.
const std::vector<Table1Expected>& table1_expected();

struct Table1Options {
  int p_max = 4;
  int n_max = 16;
  std::uint64_t budget = kDefaultWordBudget;
  int validate_depth = 6;  // depth for cross-checking the fast induced maps
};

/// Computed values are "log2", "0" or "inconclusive".
struct Table1Row {
  Table1Expected expected;
  std::string rho_s1;
  std::string rho_s2;
  bool images_match = false;
  std::string hte_computed;
  std::string hte_c2_computed;
  std::string masa_used;  // "standard", "EF", "F-invariant" or "none"
  bool match = false;
  std::string diagnostic;
};

/// Standard-masa verdict first; for a zero verdict, rho is certified 0 when it
/// maps every A_{p,l}, 1 <= p,l <= 4, into F_{p,l}, and otherwise the E/F masa is
/// tried. A log2 lower bound meets the upper bound (k-1) log N = log 2.
Table1Row run_table1_row(const Table1Expected& expected, const Table1Options& opts = {});
std::vector<Table1Row> run_table1(const Table1Options& opts = {});

/// rho maps each basis monomial of A_{p,l}, 1 <= p,l <= max_len, into F_{p,l}.
bool preserves_bidegrees(const EndomorphismSpec& e, int max_len);

std::string table1_csv(const std::vector<Table1Row>& rows);
std::string table1_json(const std::vector<Table1Row>& rows);
std::string table1_text(const std::vector<Table1Row>& rows);

}  // namespace cuntzlab
