#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuntzlab/block_map.hpp"

namespace cuntzlab {

inline constexpr std::uint64_t kDefaultWordBudget = std::uint64_t{1} << 22;

/// N(n, p) for n = 1..n_max: the number of distinct itineraries
/// (w|_p, (Tw)|_p, ..., (T^{n-1}w)|_p) over all words of length p + (n-1)lag.
/// out[n-1] = N(n, p). Throws BudgetExceeded past `budget` words.
std::vector<std::uint64_t> join_counts(const CantorMap& t, int p, int n_max,
                                       std::uint64_t budget = kDefaultWordBudget);
std::uint64_t join_count(const CantorMap& t, int p, int n,
                         std::uint64_t budget = kDefaultWordBudget);

enum class Verdict { log2, zero, inconclusive };
std::string verdict_name(Verdict v);

/// log2 N(n,p) - log2 N(n-1,p); exact when both counts are powers of two.
struct Increment {
  std::optional<long> exact_bits;
  double bits;
};

struct EntropyReport {
  std::string perm;
  std::string masa;
  int p = 0;
  std::vector<std::uint64_t> counts;  // counts[n-1] = N(n, p)
  std::vector<Increment> increments;  // for n = 2..n_max
  Verdict verdict = Verdict::inconclusive;
  double estimate_nats = 0.0;

  std::string to_json() const;
};

struct EntropySummary {
  std::vector<EntropyReport> reports;
  Verdict verdict = Verdict::inconclusive;
  double estimate_nats = 0.0;

  std::string to_json() const;
};

/// Builds the per-p report from exact counts: log2 if the last four
/// increments are exactly one bit, zero if the last four counts are equal,
/// otherwise a least-squares slope of ln N(n,p) over the second half of n.
EntropyReport make_report(std::string perm, std::string masa, int p,
                          std::vector<std::uint64_t> counts);

/// Sup over p: log2 if any p gives log2, zero if every p gives zero.
EntropySummary summarize(std::vector<EntropyReport> reports);

EntropySummary entropy_estimate(const CantorMap& t, const std::string& perm,
                                const std::string& masa, int p_max, int n_max,
                                std::uint64_t budget = kDefaultWordBudget);

/// Standard masa.
EntropySummary entropy_estimate(const EndomorphismSpec& e, int p_max, int n_max,
                                std::uint64_t budget = kDefaultWordBudget);

/// For j = 1..depth: words agreeing on their first j letters and differing at
/// letter j+1 always have images differing on their first j letters.
bool separation_check(const CantorMap& t, int depth);
bool separation_check(const EndomorphismSpec& e, int depth);

}  // namespace cuntzlab
