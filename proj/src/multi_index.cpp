#include "cuntzlab/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace cuntzlab {

MultiIndex::MultiIndex(std::initializer_list<int> letters) {
  for (int l : letters) push_back(l);
}

MultiIndex::MultiIndex(const std::vector<int>& letters) {
  for (int l : letters) push_back(l);
}

MultiIndex MultiIndex::from_digits(std::string_view digits) {
  MultiIndex out;
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("letter must be a digit 1..9");
    out.push_back(c - '0');
  }
  return out;
}

MultiIndex MultiIndex::from_rank(std::uint64_t rank, int len, int n_gens) {
  std::string raw(static_cast<std::size_t>(len), '\0');
  for (int pos = len - 1; pos >= 0; --pos) {
    raw[static_cast<std::size_t>(pos)] = static_cast<char>(rank % n_gens + 1);
    rank /= n_gens;
  }
  return MultiIndex(std::move(raw));
}

int MultiIndex::max_letter() const {
  int m = 0;
  for (std::size_t i = 0; i < size(); ++i) m = std::max(m, (*this)[i]);
  return m;
}

std::uint64_t MultiIndex::rank(int n_gens) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < size(); ++i) r = r * n_gens + ((*this)[i] - 1);
  return r;
}

std::vector<int> MultiIndex::letters() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

std::string MultiIndex::digits() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) out += std::to_string((*this)[i]);
  return out;
}

std::vector<MultiIndex> all_words(int n_gens, int len) {
  std::uint64_t count = 1;
  for (int i = 0; i < len; ++i) count *= static_cast<std::uint64_t>(n_gens);
  std::vector<MultiIndex> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(MultiIndex::from_rank(r, len, n_gens));
  return out;
}

}  // namespace cuntzlab
