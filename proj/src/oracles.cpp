#include "cuntzlab/oracles.hpp"

#include "cuntzlab/errors.hpp"
#include "cuntzlab/parse.hpp"

namespace cuntzlab {

namespace {

int flip_letter(int a) { return 3 - a; }

// Number of maximal constant runs in w_1..w_len.
int segments(const MultiIndex& w, std::size_t len) {
  int count = len > 0 ? 1 : 0;
  for (std::size_t i = 1; i < len; ++i) {
    if (w[i] != w[i - 1]) ++count;
  }
  return count;
}

}  // namespace

std::string oracle_name(OracleId o) {
  switch (o) {
    case OracleId::id: return "id";
    case OracleId::shift: return "shift";
    case OracleId::flip: return "flip";
    case OracleId::first_letter_flip: return "first-letter-flip";
    case OracleId::psi12: return "psi12";
    case OracleId::psi1324: return "psi1324";
    case OracleId::t13: return "t13";
    case OracleId::t1432: return "t1432";
    case OracleId::t123: return "t123";
    case OracleId::t142: return "t142";
    case OracleId::tEF: return "tEF";
    case OracleId::case2A: return "case2A";
    case OracleId::case2B: return "case2B";
  }
  return "?";
}

const std::vector<OracleId>& all_oracles() {
  static const std::vector<OracleId> all{
      OracleId::id,    OracleId::shift, OracleId::flip,  OracleId::first_letter_flip,
      OracleId::psi12, OracleId::psi1324, OracleId::t13, OracleId::t1432,
      OracleId::t123,  OracleId::t142,  OracleId::tEF,   OracleId::case2A,
      OracleId::case2B};
  return all;
}

OracleId parse_oracle(std::string_view name) {
  for (auto o : all_oracles()) {
    if (oracle_name(o) == name) return o;
  }
  throw ParseError("unknown oracle '" + std::string(name) + "'", 0);
}

int oracle_window(OracleId o) {
  switch (o) {
    case OracleId::id:
    case OracleId::flip:
    case OracleId::first_letter_flip:
    case OracleId::psi12:
    case OracleId::psi1324:
      return 1;
    default:
      return 2;
  }
}

MultiIndex oracle_map(OracleId o, const MultiIndex& w) {
  const int window = oracle_window(o);
  if (static_cast<int>(w.size()) < window) throw DomainError("word shorter than oracle window");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 1 && w[i] != 2) throw DomainError("oracle words use letters 1 and 2");
  }
  const std::size_t out_len = w.size() - static_cast<std::size_t>(window - 1);
  MultiIndex out;
  int ones = 0;
  for (std::size_t k = 0; k < out_len; ++k) {
    // k is 0-based; the closed formulas use position k+1.
    const int cur = w[k];
    const int next = window == 2 ? w[k + 1] : 0;
    if (cur == 1) ++ones;
    int letter = 0;
    switch (o) {
      case OracleId::id: letter = cur; break;
      case OracleId::shift: letter = next; break;
      case OracleId::flip: letter = flip_letter(cur); break;
      case OracleId::first_letter_flip: letter = k == 0 ? flip_letter(cur) : cur; break;
      case OracleId::psi12: letter = ones % 2 == 1 ? 1 : 2; break;
      case OracleId::psi1324: letter = ones % 2 == 1 ? 2 : 1; break;
      case OracleId::t13: letter = cur != next ? 1 : 2; break;
      case OracleId::t1432:
        letter = k == 0 ? (cur == next ? 1 : 2) : (cur != next ? 1 : 2);
        break;
      case OracleId::t123: letter = segments(w, k + 2) % 2 == 0 ? 1 : 2; break;
      // Parity pinned by rho(s_1 s_1^*) = s_22 s_22^* + s_11 s_11^*: letter 1 iff
      // (1-based k) + segments is even.
      case OracleId::t142:
        letter = (static_cast<int>(k + 1) + segments(w, k + 2)) % 2 == 0 ? 1 : 2;
        break;
      case OracleId::tEF: letter = cur == next ? 1 : 2; break;
      case OracleId::case2A: letter = next == 2 ? 1 : 2; break;
      case OracleId::case2B: letter = next == 1 ? 1 : 2; break;
    }
    out.push_back(letter);
  }
  return out;
}

CantorMap oracle_cantor_map(OracleId o) {
  // The running-count oracles are not sliding; tabulate them per depth.
  const int window = oracle_window(o);
  const bool sliding = o == OracleId::id || o == OracleId::shift || o == OracleId::flip ||
                       o == OracleId::t13 || o == OracleId::tEF || o == OracleId::case2A ||
                       o == OracleId::case2B;
  if (sliding) {
    std::vector<std::uint32_t> rule;
    for (const auto& w : all_words(2, window)) rule.push_back(static_cast<std::uint32_t>(oracle_map(o, w)[0] - 1));
    return CantorMap::sliding(2, window, std::move(rule));
  }
  constexpr int kDepth = 16;
  std::vector<BlockMapTable> tables;
  for (int p = 1; p <= kDepth; ++p) {
    const int len = p + window - 1;
    std::vector<std::uint32_t> map;
    map.reserve(word_space_size(2, len));
    for (const auto& w : all_words(2, len)) map.push_back(static_cast<std::uint32_t>(oracle_map(o, w).rank(2)));
    tables.emplace_back(2, p, len, std::move(map));
  }
  return CantorMap::from_tables(std::move(tables));
}

bool oracle_equivalence(const EndomorphismSpec& e, OracleId o, int depth) {
  if (e.n_gens() != 2) return false;
  for (int p = 1; p <= depth; ++p) {
    const auto table = block_map(e, p);
    if (table.window() - p < oracle_window(o) - 1) return false;
    for (const auto& w : all_words(2, table.window())) {
      const auto expected = oracle_map(o, w).prefix(static_cast<std::size_t>(p));
      if (table(w.rank(2)) != expected.rank(2)) return false;
    }
  }
  return true;
}

std::optional<OracleId> case2_selector(const EndomorphismSpec& e) {
  if (e.n_gens() != 2) return std::nullopt;
  const auto image = apply(e, parse_element("s[1] t[1]", 2));
  if (equals(image, parse_element("s[12] t[12] + s[22] t[22]", 2))) return OracleId::case2A;
  if (equals(image, parse_element("s[11] t[11] + s[21] t[21]", 2))) return OracleId::case2B;
  return std::nullopt;
}

}  // namespace cuntzlab
