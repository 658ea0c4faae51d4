#include "cuntzlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

namespace {

std::uint32_t word_count(int n_gens, int rank) {
  std::uint64_t count = 1;
  for (int i = 0; i < rank; ++i) {
    count *= static_cast<std::uint64_t>(n_gens);
    if (count > (1u << 20)) throw DomainError("permutation domain too large");
  }
  return static_cast<std::uint32_t>(count);
}

/// Splits "1 2,3" style lists into integers; a lone multi-digit token is
/// split into digits when `compact` is allowed.
std::vector<std::uint32_t> read_numbers(std::string_view text, std::size_t offset,
                                        bool compact) {
  std::vector<std::string> tokens;
  std::vector<std::size_t> positions;
  std::string current;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : ' ';
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (current.empty()) positions.push_back(offset + i);
      current += c;
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", offset + i);
    }
  }
  std::vector<std::uint32_t> out;
  if (tokens.size() == 1 && compact && tokens[0].size() > 1) {
    for (char c : tokens[0]) out.push_back(static_cast<std::uint32_t>(c - '0'));
    return out;
  }
  for (const auto& t : tokens) out.push_back(static_cast<std::uint32_t>(std::stoul(t)));
  return out;
}

}  // namespace

Permutation::Permutation(int n_gens, int rank, std::vector<std::uint32_t> images)
    : n_gens_(n_gens), rank_(rank), images_(std::move(images)) {
  if (n_gens < 2) throw DomainError("alphabet size must be at least 2");
  if (rank < 1) throw DomainError("permutation rank must be at least 1");
  const std::uint32_t n = word_count(n_gens, rank);
  if (images_.size() != n) {
    throw DomainError("permutation needs " + std::to_string(n) + " images");
  }
  std::vector<bool> seen(n, false);
  for (std::uint32_t img : images_) {
    if (img >= n || seen[img]) throw DomainError("images do not form a bijection");
    seen[img] = true;
  }
}

Permutation Permutation::identity(int n_gens, int rank) {
  std::vector<std::uint32_t> images(word_count(n_gens, rank));
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(n_gens, rank, std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, int n_gens, int rank) {
  const std::uint32_t n = word_count(n_gens, rank);
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(n, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation", pos);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle", pos);
    auto cycle = read_numbers(text.substr(pos + 1, close - pos - 1), pos + 1, n <= 9);
    for (std::uint32_t v : cycle) {
      if (v < 1 || v > n) {
        throw ParseError("cycle entry " + std::to_string(v) + " outside 1.." + std::to_string(n),
                         pos);
      }
      if (used[v - 1]) throw ParseError("cycles are not disjoint", pos);
      used[v - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
    pos = close + 1;
    skip_ws();
  }
  return Permutation(n_gens, rank, std::move(images));
}

Permutation Permutation::from_image_word(std::string_view text, int n_gens, int rank) {
  const std::uint32_t n = word_count(n_gens, rank);
  auto values = read_numbers(text, 0, n <= 9);
  if (values.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " images, got " +
                         std::to_string(values.size()),
                     0);
  }
  std::vector<std::uint32_t> images;
  for (std::uint32_t v : values) {
    if (v < 1 || v > n) throw ParseError("image outside 1.." + std::to_string(n), 0);
    images.push_back(v - 1);
  }
  try {
    return Permutation(n_gens, rank, std::move(images));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

Permutation Permutation::parse(std::string_view text, int n_gens, int rank) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text == "id") return identity(n_gens, rank);
  if (text == "shift") {
    // sigma(ij) = ji; for N = 2 this is the transposition (2 3).
    if (rank != 2) throw DomainError("'shift' is defined for rank 2");
    std::vector<std::uint32_t> images;
    for (int i = 0; i < n_gens; ++i) {
      for (int j = 0; j < n_gens; ++j) images.push_back(static_cast<std::uint32_t>(j * n_gens + i));
    }
    return Permutation(n_gens, rank, std::move(images));
  }
  if (text == "flip") {
    if (n_gens != 2 || rank != 2) throw DomainError("'flip' is defined for N = 2, rank 2");
    return Permutation(2, 2, {2, 3, 0, 1});
  }
  constexpr std::string_view kWordPrefix = "perm-word";
  if (text.substr(0, kWordPrefix.size()) == kWordPrefix) {
    return from_image_word(text.substr(kWordPrefix.size()), n_gens, rank);
  }
  return from_cycles(text, n_gens, rank);
}

MultiIndex Permutation::operator()(const MultiIndex& w) const {
  if (static_cast<int>(w.size()) != rank_) throw DomainError("word length differs from rank");
  return MultiIndex::from_rank(images_[w.rank(n_gens_)], rank_, n_gens_);
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t r = 0; r < images_.size(); ++r) inv[images_[r]] = r;
  return Permutation(n_gens_, rank_, std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::uint32_t r = 0; r < images_.size(); ++r) {
    if (images_[r] != r) return false;
  }
  return true;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::uint32_t r = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(r + 1);
      done[r] = true;
      r = images_[r];
      first = false;
    } while (r != start);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

std::string Permutation::label() const {
  std::string cycles = cycle_string();
  if (cycles == "id" || degree() > 9) return cycles;
  std::string compact;
  int count = 0;
  for (char c : cycles) {
    if (c == ' ') continue;
    if (c == '(') ++count;
    compact += c;
  }
  if (count == 1) compact = compact.substr(1, compact.size() - 2);
  return compact;
}

std::vector<Permutation> all_permutations(int n_gens, int rank) {
  const std::uint32_t n = word_count(n_gens, rank);
  if (n > 8) throw BudgetExceeded("refusing to enumerate more than 8! permutations");
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<Permutation> out;
  do {
    out.emplace_back(n_gens, rank, images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace cuntzlab
