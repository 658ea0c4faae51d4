#include "cuntzlab/block_map.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

namespace {

constexpr int kMaxWordLength = 40;

std::uint64_t checked_space(int n_gens, int len) {
  if (len < 0 || len > kMaxWordLength) throw BudgetExceeded("word length out of range");
  std::uint64_t out = 1;
  for (int i = 0; i < len; ++i) {
    if (out > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(n_gens)) {
      throw BudgetExceeded("word space too large");
    }
    out *= static_cast<std::uint64_t>(n_gens);
  }
  return out;
}

// Calls visit(v, rho(s_v)) for every word v of length p, in lexicographic order.
void for_each_generator_product(const EndomorphismSpec& e, int p,
                                const std::function<void(const MultiIndex&, const AlgebraElement&)>& visit) {
  const auto gens = generator_images(e);
  std::vector<AlgebraElement> stack{AlgebraElement::identity(e.n_gens())};
  MultiIndex word;
  std::function<void()> descend = [&] {
    if (static_cast<int>(word.size()) == p) {
      visit(word, stack.back());
      return;
    }
    for (int i = 1; i <= e.n_gens(); ++i) {
      stack.push_back(mul(stack.back(), gens[i - 1]));
      word.push_back(i);
      descend();
      word = word.prefix(word.size() - 1);
      stack.pop_back();
    }
  };
  descend();
}

// Words w with coefficient 1 on s_w s_w^* in the leveled image, or nullopt if
// the image is not such a sum.
std::optional<std::vector<MultiIndex>> diagonal_support(const AlgebraElement& image, std::size_t len) {
  const auto canonical = canonicalize(image);
  for (const auto& [m, c] : canonical.terms()) {
    if (m.degree() != 0 || m.right.size() > len) return std::nullopt;
  }
  std::vector<MultiIndex> out;
  const auto leveled = level(canonical, {{0, len}});
  for (const auto& [m, c] : leveled.terms()) {
    if (m.left != m.right || !c.is_one()) return std::nullopt;
    out.push_back(m.left);
  }
  return out;
}

}  // namespace

std::uint64_t word_space_size(int n_gens, int len) { return checked_space(n_gens, len); }

BlockMapTable::BlockMapTable(int n_gens, int depth, int window, std::vector<std::uint32_t> map)
    : n_gens_(n_gens), depth_(depth), window_(window), map_(std::move(map)) {
  if (depth < 1) throw DomainError("block map depth must be positive");
  if (window < depth) throw DomainError("block map window shorter than depth");
  if (map_.size() != checked_space(n_gens, window)) throw DomainError("block map size mismatch");
  const auto outputs = checked_space(n_gens, depth);
  for (auto v : map_) {
    if (v >= outputs) throw DomainError("block map output out of range");
  }
}

MultiIndex BlockMapTable::image(const MultiIndex& w) const {
  if (static_cast<int>(w.size()) != window_) throw DomainError("word length differs from window");
  return MultiIndex::from_rank(map_[w.rank(n_gens_)], depth_, n_gens_);
}

bool prefix_consistent(const BlockMapTable& shallow, const BlockMapTable& deep) {
  if (shallow.n_gens() != deep.n_gens() || deep.depth() != shallow.depth() + 1) return false;
  const int extra_in = deep.window() - shallow.window();
  if (extra_in < 0) return false;
  const auto in_div = checked_space(deep.n_gens(), extra_in);
  const auto out_div = static_cast<std::uint32_t>(deep.n_gens());
  for (std::uint64_t w = 0; w < deep.entries().size(); ++w) {
    if (deep(w) / out_div != shallow(w / in_div)) return false;
  }
  return true;
}

BlockMapTable letter_swapped(const BlockMapTable& t) {
  if (t.n_gens() != 2) throw DomainError("letter swap needs N = 2");
  const std::uint64_t in_mask = t.entries().size() - 1;
  const std::uint32_t out_mask = (std::uint32_t{1} << t.depth()) - 1;
  std::vector<std::uint32_t> map(t.entries().size());
  for (std::uint64_t w = 0; w < map.size(); ++w) map[w] = t(w ^ in_mask) ^ out_mask;
  return BlockMapTable(2, t.depth(), t.window(), std::move(map));
}

bool diagonal_invariant(const EndomorphismSpec& e, int depth) {
  for (int p = 1; p <= depth; ++p) {
    bool ok = true;
    const std::size_t len = static_cast<std::size_t>(p + e.rank() - 1);
    for_each_generator_product(e, p, [&](const MultiIndex&, const AlgebraElement& img) {
      if (ok && !diagonal_support(mul(img, adjoint(img)), len)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

BlockMapTable block_map(const EndomorphismSpec& e, int p) {
  if (p < 1) throw DomainError("block map depth must be positive");
  const int n = e.n_gens();
  const int window = p + e.rank() - 1;
  const auto size = checked_space(n, window);
  if (size > (std::uint64_t{1} << 26)) throw BudgetExceeded("block map table too large");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> map(size, kUnset);

  for_each_generator_product(e, p, [&](const MultiIndex& v, const AlgebraElement& img) {
    const auto support = diagonal_support(mul(img, adjoint(img)), static_cast<std::size_t>(window));
    if (!support) {
      throw DomainError("image of s_" + v.digits() + " s_" + v.digits() +
                        "^* is not a 0/1 sum of diagonal projections");
    }
    const auto out = static_cast<std::uint32_t>(v.rank(n));
    for (const auto& w : *support) {
      auto& slot = map[w.rank(n)];
      if (slot != kUnset) throw DomainError("diagonal images overlap at word " + w.digits());
      slot = out;
    }
  });
  for (std::uint64_t w = 0; w < size; ++w) {
    if (map[w] == kUnset) {
      throw DomainError("diagonal images miss word " + MultiIndex::from_rank(w, window, n).digits());
    }
  }
  return BlockMapTable(n, p, window, std::move(map));
}

CantorMap CantorMap::from_permutation(const Permutation& sigma) {
  const auto inv = sigma.inverse();
  return CantorMap(sigma.n_gens(), sigma.rank() - 1, Transducer{inv.images(), sigma.rank(), checked_space(sigma.n_gens(), sigma.rank() - 1)});
}

CantorMap CantorMap::sliding(int n_gens, int window, std::vector<std::uint32_t> rule) {
  if (window < 1 || rule.size() != checked_space(n_gens, window)) {
    throw DomainError("sliding rule size mismatch");
  }
  for (auto v : rule) {
    if (v >= static_cast<std::uint32_t>(n_gens)) throw DomainError("sliding rule output out of range");
  }
  return CantorMap(n_gens, window - 1, Sliding{std::move(rule), window});
}

CantorMap CantorMap::from_tables(std::vector<BlockMapTable> tables) {
  if (tables.empty()) throw DomainError("no block map tables");
  const int n = tables.front().n_gens();
  const int lag = tables.front().window() - tables.front().depth();
  for (std::size_t d = 0; d < tables.size(); ++d) {
    if (tables[d].depth() != static_cast<int>(d + 1) || tables[d].n_gens() != n ||
        tables[d].window() - tables[d].depth() != lag) {
      throw DomainError("block map tables are not a depth sequence");
    }
  }
  return CantorMap(n, lag, Tables{std::move(tables)});
}

int CantorMap::max_input_length() const {
  if (const auto* t = std::get_if<Tables>(impl_.get())) {
    return t->by_depth.back().window();
  }
  return -1;
}

PackedWord CantorMap::apply(PackedWord w, int len) const {
  if (len <= lag_ || len > kMaxWordLength) throw DomainError("input word too short for map");
  const auto n = static_cast<std::uint64_t>(n_gens_);
  return std::visit(
      [&](const auto& impl) -> PackedWord {
        using T = std::decay_t<decltype(impl)>;
        if constexpr (std::is_same_v<T, Tables>) {
          const int depth = len - lag_;
          if (depth > static_cast<int>(impl.by_depth.size())) {
            throw BudgetExceeded("no block map table at depth " + std::to_string(depth));
          }
          return impl.by_depth[depth - 1](w);
        } else {
          if constexpr (std::is_same_v<T, Transducer>) {
            if (n == 2) {
              const int carry_bits = impl.rank - 1;
              const std::uint64_t mask = impl.carry_space - 1;
              std::uint64_t state = w >> (len - carry_bits);
              PackedWord out = 0;
              for (int i = len - carry_bits - 1; i >= 0; --i) {
                const std::uint64_t pre = impl.inverse[(state << 1) | ((w >> i) & 1)];
                out = (out << 1) | (pre >> carry_bits);
                state = pre & mask;
              }
              return out;
            }
          } else if constexpr (std::is_same_v<T, Sliding>) {
            if (n == 2) {
              const std::uint64_t mask = (std::uint64_t{1} << impl.window) - 1;
              PackedWord out = 0;
              for (int i = len - impl.window; i >= 0; --i) out = (out << 1) | impl.rule[(w >> i) & mask];
              return out;
            }
          }
          std::array<std::uint8_t, kMaxWordLength> digits{};
          if (n == 2) {
            for (int i = len - 1; i >= 0; --i, w >>= 1) digits[i] = static_cast<std::uint8_t>(w & 1);
          } else {
            for (int i = len - 1; i >= 0; --i, w /= n) digits[i] = static_cast<std::uint8_t>(w % n);
          }
          PackedWord out = 0;
          if constexpr (std::is_same_v<T, Sliding>) {
            for (int j = 0; j + impl.window <= len; ++j) {
              std::uint64_t window = 0;
              for (int i = 0; i < impl.window; ++i) window = window * n + digits[j + i];
              out = out * n + impl.rule[window];
            }
          } else {
            const std::uint64_t carry_space = impl.carry_space;
            std::uint64_t state = 0;
            for (int i = 0; i < impl.rank - 1; ++i) state = state * n + digits[i];
            for (int i = impl.rank - 1; i < len; ++i) {
              const std::uint64_t pre = impl.inverse[state * n + digits[i]];
              out = out * n + pre / carry_space;
              state = pre % carry_space;
            }
          }
          return out;
        }
      },
      *impl_);
}

BlockMapTable CantorMap::table(int p) const {
  const int window = p + lag_;
  const auto size = checked_space(n_gens_, window);
  std::vector<std::uint32_t> map(size);
  for (std::uint64_t w = 0; w < size; ++w) map[w] = static_cast<std::uint32_t>(apply(w, window));
  return BlockMapTable(n_gens_, p, window, std::move(map));
}

CantorMap standard_masa_map(const EndomorphismSpec& e, int max_depth, int validate_depth) {
  if (e.permutation()) {
    auto map = CantorMap::from_permutation(*e.permutation());
    for (int p = 1; p <= validate_depth; ++p) {
      if (!(map.table(p) == block_map(e, p))) {
        throw DomainError("letter-by-letter map disagrees with block_map at depth " +
                          std::to_string(p));
      }
    }
    return map;
  }
  std::vector<BlockMapTable> tables;
  for (int p = 1; p <= max_depth; ++p) tables.push_back(block_map(e, p));
  return CantorMap::from_tables(std::move(tables));
}

}  // namespace cuntzlab
