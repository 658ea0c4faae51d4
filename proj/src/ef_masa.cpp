#include "cuntzlab/ef_masa.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

namespace {

constexpr std::uint32_t kUnset = ~std::uint32_t{0};

void require_o2(const EndomorphismSpec& e) {
  if (e.n_gens() != 2) throw DomainError("the E/F masa is defined in O_2");
}

// In-place unnormalized Walsh-Hadamard transform.
void walsh_hadamard(std::vector<std::int64_t>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const auto a = v[j];
        const auto b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

// u_p as a permutation of words of length p + k - 1: perm[B] = A for each
// term s_A s_B^* of the leveled cocycle.
std::vector<std::uint32_t> cocycle_permutation(const EndomorphismSpec& e, int p) {
  const std::size_t len = static_cast<std::size_t>(p + e.rank() - 1);
  const auto u = level(canonicalize(cocycle(e, p)), {{0, len}});
  std::vector<std::uint32_t> perm(word_space_size(2, static_cast<int>(len)), kUnset);
  std::vector<bool> hit(perm.size(), false);
  for (const auto& [m, c] : u.terms()) {
    if (!c.is_one() || m.left.size() != len || m.right.size() != len) {
      throw DomainError("cocycle is not a permutation matrix");
    }
    const auto a = m.left.rank(2);
    const auto b = m.right.rank(2);
    if (perm[b] != kUnset || hit[a]) throw DomainError("cocycle is not a permutation matrix");
    perm[b] = static_cast<std::uint32_t>(a);
    hit[a] = true;
  }
  for (auto v : perm) {
    if (v == kUnset) throw DomainError("cocycle is not a permutation matrix");
  }
  return perm;
}

ProjectionWord word_from_rank(std::uint64_t r, int len) {
  return ProjectionWord{MultiIndex::from_rank(r, len, 2)};
}

BlockMapTable finish(std::vector<std::uint32_t> map, int p, int window) {
  for (std::uint64_t r = 0; r < map.size(); ++r) {
    if (map[r] == kUnset) {
      throw DomainError("E/F images miss " + word_from_rank(r, window).to_string());
    }
  }
  return BlockMapTable(2, p, window, std::move(map));
}

}  // namespace

ProjectionWord ProjectionWord::parse(std::string_view text) {
  ProjectionWord q;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'E') {
      q.letters.push_back(1);
    } else if (text[i] == 'F') {
      q.letters.push_back(2);
    } else {
      throw ParseError("projection words use the letters E and F", i);
    }
  }
  return q;
}

std::string ProjectionWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) out += letters[i] == 1 ? 'E' : 'F';
  return out;
}

AlgebraElement ef_x() {
  AlgebraElement x(2);
  x.add_term(Monomial{MultiIndex{1}, MultiIndex{2}}, Scalar(1));
  x.add_term(Monomial{MultiIndex{2}, MultiIndex{1}}, Scalar(1));
  return x;
}

AlgebraElement ef_e() {
  return (AlgebraElement::identity(2) + ef_x()) * Scalar(Rational(1, 2));
}

AlgebraElement ef_f() {
  return (AlgebraElement::identity(2) - ef_x()) * Scalar(Rational(1, 2));
}

AlgebraElement projection(const ProjectionWord& q) {
  const auto e = ef_e();
  const auto f = ef_f();
  AlgebraElement out = AlgebraElement::identity(2);
  for (std::size_t j = 0; j < q.depth(); ++j) {
    out = mul(out, theta_power(q.letters[j] == 1 ? e : f, static_cast<int>(j)));
  }
  return out;
}

BlockMapTable ef_block_map(const EndomorphismSpec& e, int p) {
  require_o2(e);
  if (p < 1) throw DomainError("block map depth must be positive");
  const int window = p + e.rank() - 1;
  if (window > 6) throw BudgetExceeded("symbolic E/F tables are limited to window 6");

  std::vector<AlgebraElement> basis;
  for (std::uint64_t r = 0; r < word_space_size(2, window); ++r) {
    basis.push_back(canonicalize(projection(word_from_rank(r, window))));
  }
  std::vector<std::uint32_t> map(basis.size(), kUnset);
  for (std::uint64_t q = 0; q < word_space_size(2, p); ++q) {
    const auto word = word_from_rank(q, p);
    const auto image = apply(e, projection(word));
    AlgebraElement sum(2);
    for (std::uint64_t r = 0; r < basis.size(); ++r) {
      if (!equals(mul(basis[r], image), basis[r])) continue;
      if (map[r] != kUnset) throw DomainError("E/F images overlap");
      map[r] = static_cast<std::uint32_t>(q);
      sum += basis[r];
    }
    if (!equals(sum, image)) {
      throw DomainError("image of P_" + word.to_string() + " is not a 0/1 sum of E/F projections");
    }
  }
  return finish(std::move(map), p, window);
}

BlockMapTable ef_block_map_fast(const EndomorphismSpec& e, int p) {
  require_o2(e);
  if (!e.permutation()) throw DomainError("fast E/F tables need a permutative endomorphism");
  if (p < 1) throw DomainError("block map depth must be positive");
  const int k = e.rank();
  const int window = p + k - 1;
  if (window > 24) throw BudgetExceeded("E/F window too large");
  const auto perm = cocycle_permutation(e, p);
  const std::size_t dim = perm.size();
  const std::size_t carry = std::size_t{1} << (k - 1);
  // Every diagonal entry c_r satisfies c_r * 2^(window + p) = sum_b WHT(v_b)[r]^2.
  const std::int64_t full = std::int64_t{1} << (window + p);

  std::vector<std::uint32_t> map(dim, kUnset);
  std::vector<std::int64_t> acc(dim), v(dim);
  for (std::uint64_t q = 0; q < (std::uint64_t{1} << p); ++q) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t b = 0; b < carry; ++b) {
      std::fill(v.begin(), v.end(), 0);
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << p); ++y) {
        const int sign = std::popcount(q & y) % 2 == 0 ? 1 : -1;
        v[perm[y * carry + b]] = sign;
      }
      walsh_hadamard(v);
      for (std::size_t r = 0; r < dim; ++r) acc[r] += v[r] * v[r];
    }
    std::size_t rank = 0;
    for (std::size_t r = 0; r < dim; ++r) {
      if (acc[r] == 0) continue;
      if (acc[r] != full) {
        throw DomainError("image of P_" + word_from_rank(q, p).to_string() +
                          " is not a 0/1 sum of E/F projections");
      }
      if (map[r] != kUnset) throw DomainError("E/F images overlap");
      map[r] = static_cast<std::uint32_t>(q);
      ++rank;
    }
    if (rank != carry) throw DomainError("E/F image has the wrong rank");
  }
  return finish(std::move(map), p, window);
}

CantorMap ef_cantor_map(const EndomorphismSpec& e, int validate_depth, int max_table_depth) {
  // Non-permutative specs use the symbolic tables, capped at window 4 by cost.
  const bool permutative = e.permutation().has_value();
  if (!permutative) {
    const int symbolic_depth = 5 - e.rank();
    validate_depth = std::min(validate_depth, symbolic_depth);
    max_table_depth = std::min(max_table_depth, symbolic_depth);
  }
  const auto table_at = [&](int d) { return permutative ? ef_block_map_fast(e, d) : ef_block_map(e, d); };
  std::vector<BlockMapTable> tables{table_at(1)};
  auto map = CantorMap::sliding(2, tables.front().window(), tables.front().entries());
  bool sliding = true;
  for (int d = 2; d <= validate_depth; ++d) {
    tables.push_back(table_at(d));
    if (!(map.table(d) == tables.back())) sliding = false;
  }
  if (sliding) return map;
  // Not shift-commuting: fall back to the exact tables.
  for (int d = static_cast<int>(tables.size()) + 1; d <= max_table_depth; ++d) tables.push_back(table_at(d));
  return CantorMap::from_tables(std::move(tables));
}

}  // namespace cuntzlab
