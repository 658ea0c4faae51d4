#include "cuntzlab/element.hpp"

#include <algorithm>
#include <string>

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

namespace {

void check_same_alphabet(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n_gens() != b.n_gens()) {
    throw DomainError("alphabet size mismatch: " + std::to_string(a.n_gens()) + " vs " +
                      std::to_string(b.n_gens()));
  }
}

struct IndexedTerm {
  const MultiIndex* left;
  const MultiIndex* right;
  const Scalar* coeff;
};

}  // namespace

AlgebraElement::AlgebraElement(int n_gens) : n_gens_(n_gens) {
  if (n_gens < 2) throw DomainError("alphabet size must be at least 2");
}

AlgebraElement AlgebraElement::identity(int n_gens) { return scalar(n_gens, Scalar(1)); }

AlgebraElement AlgebraElement::scalar(int n_gens, const Scalar& c) {
  return monomial(n_gens, {}, {}, c);
}

AlgebraElement AlgebraElement::generator(int n_gens, int i) {
  return monomial(n_gens, MultiIndex{i}, {});
}

AlgebraElement AlgebraElement::monomial(int n_gens, MultiIndex left, MultiIndex right,
                                        const Scalar& coeff) {
  AlgebraElement out(n_gens);
  if (left.max_letter() > n_gens || right.max_letter() > n_gens) {
    throw DomainError("letter outside 1.." + std::to_string(n_gens));
  }
  out.add_term(Monomial{std::move(left), std::move(right)}, coeff);
  return out;
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same_alphabet(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same_alphabet(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_alphabet(a, b);
  AlgebraElement out(a.n_gens());
  if (a.empty() || b.empty()) return out;

  // Terms of b sorted by their left word; words extending J then form a
  // contiguous range starting at J.
  std::vector<IndexedTerm> index;
  index.reserve(b.size());
  for (const auto& [m, c] : b.terms()) index.push_back({&m.left, &m.right, &c});
  std::sort(index.begin(), index.end(),
            [](const IndexedTerm& x, const IndexedTerm& y) { return *x.left < *y.left; });
  auto by_left = [](const IndexedTerm& t, const MultiIndex& key) { return *t.left < key; };

  for (const auto& [ma, ca] : a.terms()) {
    const MultiIndex& J = ma.right;
    // K a prefix of J (including K == J): J = K J', product s_I s_{L J'}^*.
    for (std::size_t t = 0; t <= J.size(); ++t) {
      MultiIndex K = J.prefix(t);
      auto it = std::lower_bound(index.begin(), index.end(), K, by_left);
      MultiIndex tail = J.suffix_from(t);
      for (; it != index.end() && *it->left == K; ++it) {
        out.add_term(Monomial{ma.left, *it->right + tail}, ca * *it->coeff);
      }
    }
    // J a proper prefix of K: K = J K', product s_{I K'} s_L^*.
    auto it = std::upper_bound(index.begin(), index.end(), J,
                               [](const MultiIndex& key, const IndexedTerm& t) {
                                 return key < *t.left;
                               });
    for (; it != index.end() && it->left->starts_with(J); ++it) {
      out.add_term(Monomial{ma.left + it->left->suffix_from(J.size()), *it->right},
                   ca * *it->coeff);
    }
  }
  return out;
}

AlgebraElement adjoint(const AlgebraElement& a) {
  AlgebraElement out(a.n_gens());
  for (const auto& [m, c] : a.terms()) out.add_term(Monomial{m.right, m.left}, c.conj());
  return out;
}

AlgebraElement level(const AlgebraElement& a, const std::map<int, std::size_t>& targets) {
  AlgebraElement out(a.n_gens());
  for (const auto& [m, c] : a.terms()) {
    auto it = targets.find(m.degree());
    if (it == targets.end() || it->second == m.right.size()) {
      out.add_term(m, c);
      continue;
    }
    if (it->second < m.right.size()) {
      throw DomainError("leveling target " + std::to_string(it->second) +
                        " below right length " + std::to_string(m.right.size()) +
                        " in degree " + std::to_string(m.degree()));
    }
    const int extra = static_cast<int>(it->second - m.right.size());
    for (const MultiIndex& K : all_words(a.n_gens(), extra)) {
      out.add_term(Monomial{m.left + K, m.right + K}, c);
    }
  }
  return out;
}

std::map<int, std::size_t> max_right_lengths(const AlgebraElement& a) {
  std::map<int, std::size_t> out;
  for (const auto& [m, c] : a.terms()) {
    auto& len = out[m.degree()];
    len = std::max(len, m.right.size());
  }
  return out;
}

AlgebraElement level_to_max(const AlgebraElement& a) { return level(a, max_right_lengths(a)); }

bool is_zero(const AlgebraElement& a) { return level_to_max(a).empty(); }

bool equals(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_alphabet(a, b);
  return is_zero(a - b);
}

AlgebraElement canonicalize(const AlgebraElement& a) {
  const int n = a.n_gens();
  AlgebraElement leveled = level_to_max(a);
  AlgebraElement out(n);

  std::map<int, std::map<std::pair<MultiIndex, MultiIndex>, Scalar>> pools;
  for (const auto& [m, c] : leveled.terms()) pools[m.degree()][{m.left, m.right}] = c;

  for (auto& [degree, pool] : pools) {
    while (!pool.empty()) {
      // Group candidates s_{I'i} s_{J'i}^* by parent (I', J'), ordered by
      // right word for deterministic traversal.
      std::map<std::pair<MultiIndex, MultiIndex>, std::vector<const Scalar*>> groups;
      std::map<std::pair<MultiIndex, MultiIndex>, Scalar> next;
      for (const auto& [key, c] : pool) {
        const auto& [I, J] = key;
        if (I.empty() || J.empty() || I.back() != J.back()) {
          out.add_term(Monomial{I, J}, c);
          continue;
        }
        auto& slot = groups[{J.prefix(J.size() - 1), I.prefix(I.size() - 1)}];
        slot.resize(static_cast<std::size_t>(n), nullptr);
        slot[static_cast<std::size_t>(I.back() - 1)] = &c;
      }
      for (const auto& [parent, children] : groups) {
        const auto& [Jp, Ip] = parent;
        bool complete = std::all_of(children.begin(), children.end(),
                                    [&](const Scalar* s) { return s && *s == *children[0]; });
        if (complete) {
          next[{Ip, Jp}] = *children[0];
          continue;
        }
        for (int i = 0; i < n; ++i) {
          if (const Scalar* s = children[static_cast<std::size_t>(i)]) {
            MultiIndex I = Ip, J = Jp;
            out.add_term(Monomial{I.push_back(i + 1), J.push_back(i + 1)}, *s);
          }
        }
      }
      pool = std::move(next);
    }
  }
  return out;
}

std::map<int, AlgebraElement> gauge_components(const AlgebraElement& a) {
  std::map<int, AlgebraElement> out;
  for (const auto& [m, c] : a.terms()) {
    out.try_emplace(m.degree(), a.n_gens()).first->second.add_term(m, c);
  }
  return out;
}

AlgebraElement expectation(const AlgebraElement& a) {
  AlgebraElement out(a.n_gens());
  for (const auto& [m, c] : a.terms()) {
    if (m.degree() == 0) out.add_term(m, c);
  }
  return out;
}

Scalar trace_state(const AlgebraElement& a) {
  Scalar sum;
  for (const auto& [m, c] : a.terms()) {
    if (m.left != m.right) continue;
    Rational weight(1);
    for (std::size_t i = 0; i < m.left.size(); ++i) weight /= a.n_gens();
    sum += c * Scalar(weight);
  }
  return sum;
}

bool in_F(const AlgebraElement& a, std::size_t p, std::size_t l) {
  const int degree = static_cast<int>(p) - static_cast<int>(l);
  const auto canonical = canonicalize(a);
  for (const auto& [m, c] : canonical.terms()) {
    if (m.degree() != degree || m.right.size() > l) return false;
  }
  return true;
}

bool in_A(const AlgebraElement& a, std::size_t p, std::size_t l) {
  if (a.size() != 1) return false;
  const auto& [m, c] = *a.terms().begin();
  return c.is_one() && m.left.size() == p && m.right.size() == l;
}

}  // namespace cuntzlab
