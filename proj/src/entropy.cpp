#include "cuntzlab/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include <json.hpp>

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

namespace {

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

int log2_exact(std::uint64_t x) { return std::countr_zero(x); }

nlohmann::ordered_json report_json(const EntropyReport& r) {
  nlohmann::ordered_json j;
  j["perm"] = r.perm;
  j["masa"] = r.masa;
  j["p"] = r.p;
  auto counts = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.counts.size(); ++i) {
    counts.push_back({static_cast<int>(i + 1), std::to_string(r.counts[i])});
  }
  j["counts"] = counts;
  auto inc = nlohmann::ordered_json::array();
  for (const auto& d : r.increments) {
    if (d.exact_bits) {
      inc.push_back(std::to_string(*d.exact_bits));
    } else {
      inc.push_back(d.bits);
    }
  }
  j["increments"] = inc;
  j["verdict"] = verdict_name(r.verdict);
  j["estimate_nats"] = r.estimate_nats;
  return j;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::log2:
      return "log2";
    case Verdict::zero:
      return "zero";
    case Verdict::inconclusive:
      break;
  }
  return "inconclusive";
}

std::vector<std::uint64_t> join_counts(const CantorMap& t, int p, int n_max, std::uint64_t budget) {
  if (p < 1 || n_max < 1) throw DomainError("join counts need p >= 1 and n >= 1");
  const int lag = t.lag();
  const int len = p + (n_max - 1) * lag;
  if (len > 40) throw BudgetExceeded("window length " + std::to_string(len) + " exceeds 40");
  const std::uint64_t words = word_space_size(t.n_gens(), len);
  if (words > budget) {
    throw BudgetExceeded("join count needs " + std::to_string(words) + " words, budget is " +
                         std::to_string(budget));
  }
  if (t.max_input_length() >= 0 && len > t.max_input_length()) {
    throw BudgetExceeded("map is only tabulated up to window " +
                         std::to_string(t.max_input_length()));
  }

  // Each itinerary is packed into big-endian 64-bit limbs so that limb-wise
  // comparison is lexicographic comparison of itineraries.
  const std::uint64_t symbols = word_space_size(t.n_gens(), p);
  const int bits = std::max(1, static_cast<int>(std::bit_width(symbols - 1)));
  const int per_limb = 64 / bits;
  const int limbs = (n_max + per_limb - 1) / per_limb;
  const std::uint64_t drop_tail = word_space_size(t.n_gens(), len - p);

  std::vector<std::uint64_t> powers(static_cast<std::size_t>(len) + 1);
  for (int i = 0; i <= len; ++i) powers[i] = word_space_size(t.n_gens(), i);

  std::vector<std::uint64_t> data(words * static_cast<std::uint64_t>(limbs), 0);
  for (std::uint64_t w = 0; w < words; ++w) {
    std::uint64_t* row = &data[w * limbs];
    std::uint64_t cur = w;
    int cur_len = len;
    std::uint64_t tail = drop_tail;
    for (int j = 0; j < n_max; ++j) {
      const std::uint64_t symbol = cur / tail;
      const int limb = j / per_limb;
      const int slot = j % per_limb;
      row[limb] |= symbol << (64 - bits * (slot + 1));
      if (j + 1 < n_max) {
        cur = t.apply(cur, cur_len);
        cur_len -= lag;
        tail = powers[cur_len - p];
      }
    }
  }

  // First itinerary position at which consecutive sorted rows differ.
  std::vector<std::uint64_t> first_diff_hist(static_cast<std::size_t>(n_max) + 1, 0);
  if (limbs == 1) {
    std::sort(data.begin(), data.end());
    for (std::uint64_t i = 1; i < words; ++i) {
      const std::uint64_t x = data[i] ^ data[i - 1];
      const int pos = x == 0 ? n_max : std::countl_zero(x) / bits;
      ++first_diff_hist[std::min(pos, n_max)];
    }
  } else {
    std::vector<std::uint64_t> order(words);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
      return std::lexicographical_compare(&data[a * limbs], &data[a * limbs + limbs],
                                          &data[b * limbs], &data[b * limbs + limbs]);
    });
    for (std::uint64_t i = 1; i < words; ++i) {
      const std::uint64_t* a = &data[order[i] * limbs];
      const std::uint64_t* b = &data[order[i - 1] * limbs];
      int pos = n_max;
      for (int l = 0; l < limbs; ++l) {
        const std::uint64_t x = a[l] ^ b[l];
        if (x != 0) {
          pos = l * per_limb + std::countl_zero(x) / bits;
          break;
        }
      }
      ++first_diff_hist[std::min(pos, n_max)];
    }
  }

  // Distinct length-n prefixes = 1 + #{adjacent pairs first differing before n}.
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_max));
  std::uint64_t running = 1;
  for (int n = 1; n <= n_max; ++n) {
    running += first_diff_hist[n - 1];
    out[n - 1] = running;
  }
  return out;
}

std::uint64_t join_count(const CantorMap& t, int p, int n, std::uint64_t budget) {
  return join_counts(t, p, n, budget).back();
}

EntropyReport make_report(std::string perm, std::string masa, int p, std::vector<std::uint64_t> counts) {
  EntropyReport r;
  r.perm = std::move(perm);
  r.masa = std::move(masa);
  r.p = p;
  r.counts = std::move(counts);
  const std::size_t n_max = r.counts.size();
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto a = r.counts[n - 2];
    const auto b = r.counts[n - 1];
    Increment inc{std::nullopt, std::log2(static_cast<double>(b)) - std::log2(static_cast<double>(a))};
    if (is_power_of_two(a) && is_power_of_two(b)) {
      inc.exact_bits = log2_exact(b) - log2_exact(a);
      inc.bits = static_cast<double>(*inc.exact_bits);
    }
    r.increments.push_back(inc);
  }

  const bool log2 = r.increments.size() >= 4 &&
                    std::all_of(r.increments.end() - 4, r.increments.end(),
                                [](const Increment& d) { return d.exact_bits == 1L; });
  const bool zero = n_max >= 4 && std::all_of(r.counts.end() - 4, r.counts.end(),
                                              [&](std::uint64_t c) { return c == r.counts.back(); });
  if (log2) {
    r.verdict = Verdict::log2;
    r.estimate_nats = std::log(2.0);
  } else if (zero) {
    r.verdict = Verdict::zero;
    r.estimate_nats = 0.0;
  } else {
    r.verdict = Verdict::inconclusive;
    const std::size_t lo = (n_max + 1) / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0;
    for (std::size_t n = std::max<std::size_t>(lo, 1); n <= n_max; ++n) {
      const double x = static_cast<double>(n);
      const double y = std::log(static_cast<double>(r.counts[n - 1]));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      m += 1;
    }
    const double denom = m * sxx - sx * sx;
    r.estimate_nats = denom > 0 ? (m * sxy - sx * sy) / denom : 0.0;
  }
  return r;
}

EntropySummary summarize(std::vector<EntropyReport> reports) {
  EntropySummary s;
  s.reports = std::move(reports);
  const auto has = [&](Verdict v) {
    return std::any_of(s.reports.begin(), s.reports.end(), [&](const auto& r) { return r.verdict == v; });
  };
  if (has(Verdict::log2)) {
    s.verdict = Verdict::log2;
    s.estimate_nats = std::log(2.0);
  } else if (!s.reports.empty() && !has(Verdict::inconclusive)) {
    s.verdict = Verdict::zero;
    s.estimate_nats = 0.0;
  } else {
    s.verdict = Verdict::inconclusive;
    for (const auto& r : s.reports) s.estimate_nats = std::max(s.estimate_nats, r.estimate_nats);
  }
  return s;
}

std::string EntropyReport::to_json() const { return report_json(*this).dump(); }

std::string EntropySummary::to_json() const {
  nlohmann::ordered_json j;
  j["summary"] = {{"perm", reports.empty() ? "" : reports.front().perm},
                  {"masa", reports.empty() ? "" : reports.front().masa},
                  {"verdict", verdict_name(verdict)},
                  {"estimate_nats", estimate_nats}};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  j["reports"] = arr;
  return j.dump();
}

EntropySummary entropy_estimate(const CantorMap& t, const std::string& perm, const std::string& masa,
                                int p_max, int n_max, std::uint64_t budget) {
  std::vector<EntropyReport> reports;
  for (int p = 1; p <= p_max; ++p) {
    reports.push_back(make_report(perm, masa, p, join_counts(t, p, n_max, budget)));
  }
  return summarize(std::move(reports));
}

EntropySummary entropy_estimate(const EndomorphismSpec& e, int p_max, int n_max, std::uint64_t budget) {
  const int max_depth = p_max + std::max(0, n_max - 1) * (e.rank() - 1);
  const auto t = standard_masa_map(e, max_depth, std::min(max_depth, 6));
  return entropy_estimate(t, e.label(), "standard", p_max, n_max, budget);
}

bool separation_check(const CantorMap& t, int depth) {
  const int lag = t.lag();
  if (lag == 0) return false;
  const auto n = static_cast<std::uint64_t>(t.n_gens());
  for (int j = 1; j <= depth; ++j) {
    const auto table = t.table(j);
    const std::uint64_t tails = word_space_size(t.n_gens(), lag - 1);
    const std::uint64_t prefixes = word_space_size(t.n_gens(), j);
    for (std::uint64_t u = 0; u < prefixes; ++u) {
      std::vector<std::set<std::uint32_t>> images(n);
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t x = 0; x < tails; ++x) images[a].insert(table((u * n + a) * tails + x));
      }
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = a + 1; b < n; ++b) {
          for (auto v : images[a]) {
            if (images[b].count(v)) return false;
          }
        }
      }
    }
  }
  return true;
}

bool separation_check(const EndomorphismSpec& e, int depth) {
  return separation_check(standard_masa_map(e, depth, std::min(depth, 6)), depth);
}

}  // namespace cuntzlab
