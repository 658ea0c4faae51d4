#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cuntzlab {

/// A finite word over {1..N}. Letters are stored as raw bytes so that short
/// words stay inside the small-string buffer; ordering is lexicographic with a
/// proper prefix sorting first.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> letters);
  explicit MultiIndex(const std::vector<int>& letters);

  /// Parses a digit string such as "121". Letters must be 1..9.
  static MultiIndex from_digits(std::string_view digits);

  /// The word of length `len` whose base-N rank (first letter most
  /// significant, letters 1..N mapped to digits 0..N-1) is `rank`.
  static MultiIndex from_rank(std::uint64_t rank, int len, int n_gens);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }
  int back() const { return operator[](size() - 1); }

  int max_letter() const;
  std::uint64_t rank(int n_gens) const;

  MultiIndex prefix(std::size_t len) const { return MultiIndex(letters_.substr(0, len)); }
  MultiIndex suffix_from(std::size_t pos) const { return MultiIndex(letters_.substr(pos)); }
  bool starts_with(const MultiIndex& other) const {
    return letters_.compare(0, other.letters_.size(), other.letters_) == 0 &&
           other.size() <= size();
  }

  MultiIndex& push_back(int letter) {
    letters_.push_back(static_cast<char>(letter));
    return *this;
  }
  MultiIndex& operator+=(const MultiIndex& o) {
    letters_ += o.letters_;
    return *this;
  }
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }

  std::vector<int> letters() const;

  /// Concatenated digits, e.g. "121"; empty word prints as "".
  std::string digits() const;

  const std::string& key() const { return letters_; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  explicit MultiIndex(std::string raw) : letters_(std::move(raw)) {}
  std::string letters_;
};

/// All words of length `len` over {1..n_gens} in lexicographic order.
std::vector<MultiIndex> all_words(int n_gens, int len);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const { return std::hash<std::string>{}(m.key()); }
};

}  // namespace cuntzlab
