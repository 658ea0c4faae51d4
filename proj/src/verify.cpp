#include "cuntzlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cuntzlab/ef_masa.hpp"
#include "cuntzlab/endomorphism.hpp"
#include "cuntzlab/entropy.hpp"
#include "cuntzlab/errors.hpp"
#include "cuntzlab/matrix_embed.hpp"
#include "cuntzlab/parse.hpp"

namespace cuntzlab {

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  Rational re(num(rng), den(rng));
  Rational im(num(rng), den(rng));
  re.canonicalize();
  im.canonicalize();
  if (re == 0 && im == 0) re = 1;
  return Scalar(re, im);
}

MultiIndex random_word(std::mt19937_64& rng, int n_gens, int len) {
  std::uniform_int_distribution<int> letter(1, n_gens);
  MultiIndex w;
  for (int i = 0; i < len; ++i) w.push_back(letter(rng));
  return w;
}

std::string perm_name(const std::string& cycles) { return "sigma " + cycles; }

EndomorphismSpec spec_of(const std::string& cycles) {
  return EndomorphismSpec::from_permutation(Permutation::parse(cycles, 2, 2));
}

// rho^m(s_I s_J^*) = rho^m(s_I) rho^m(s_J)^*, with rho^m(s_I) built from the
// generator images.
AlgebraElement word_image(const std::vector<AlgebraElement>& gens, const MultiIndex& w) {
  AlgebraElement out = AlgebraElement::identity(gens.front().n_gens());
  for (std::size_t i = 0; i < w.size(); ++i) out = mul(out, gens[w[i] - 1]);
  return out;
}

void suite_relations(SuiteResult& r, const VerifyOptions& opts) {
  for (int n = 2; n <= 4; ++n) {
    const auto one = AlgebraElement::identity(n);
    AlgebraElement range(n);
    for (int i = 1; i <= n; ++i) {
      const auto si = AlgebraElement::generator(n, i);
      range += mul(si, adjoint(si));
      for (int j = 1; j <= n; ++j) {
        const auto sj = AlgebraElement::generator(n, j);
        ++r.cases;
        if (!equals(mul(adjoint(si), sj), i == j ? one : AlgebraElement::zero(n))) {
          r.failures.push_back("s" + std::to_string(i) + "* s" + std::to_string(j) + " in O_" +
                               std::to_string(n));
        }
      }
    }
    ++r.cases;
    if (!equals(range, one)) r.failures.push_back("sum s_i s_i* != 1 in O_" + std::to_string(n));
  }

  std::mt19937_64 rng(opts.seed);
  const int rounds = opts.depth > 0 ? opts.depth : 200;
  for (int t = 0; t < rounds; ++t) {
    const int n = 2 + t % 2;
    const auto a = random_element(rng, n, 3, 3);
    const auto b = random_element(rng, n, 3, 3);
    const auto c = random_element(rng, n, 3, 3);
    r.cases += 3;
    if (!equals(mul(mul(a, b), c), mul(a, mul(b, c)))) {
      r.failures.push_back("associativity, case " + std::to_string(t));
    }
    if (!equals(adjoint(mul(a, b)), mul(adjoint(b), adjoint(a)))) {
      r.failures.push_back("anti-multiplicativity, case " + std::to_string(t));
    }
    if (!equals(mul(a, b + c), mul(a, b) + mul(a, c))) {
      r.failures.push_back("distributivity, case " + std::to_string(t));
    }
  }
}

void suite_lemma1(SuiteResult& r, const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> len(0, 3);
  std::uniform_int_distribution<int> count(1, 4);
  const int rounds = opts.depth > 0 ? opts.depth : 100;
  double worst = 0;
  for (int t = 0; t < rounds; ++t) {
    const int p = len(rng);
    const int l = len(rng);
    const auto x = random_homogeneous(rng, 2, p, l, count(rng));
    const double norm = operator_norm(x);
    const auto d = lemma1_decompose(x, 3);
    for (const auto& [j, part] : d.parts) {
      ++r.cases;
      const double tj = spectral_norm(NumericMatrix::from_exact(part));
      if (norm > 0) worst = std::max(worst, tj / norm);
      if (tj > norm + 1e-9) {
        r.failures.push_back("case " + std::to_string(t) + ": ||T_" + j.digits() + "|| = " +
                             std::to_string(tj) + " > ||X|| = " + std::to_string(norm));
      }
    }
    ++r.cases;
    if (!equals(reconstruct(d, 2), psi(x, 3))) {
      r.failures.push_back("case " + std::to_string(t) + ": reconstruction differs from Psi_3(X)");
    }
  }
  r.metrics["max_ratio"] = worst;
}

void suite_lemma2(SuiteResult& r, const VerifyOptions& opts) {
  const int max_len = opts.depth > 0 ? opts.depth : 3;
  std::size_t literal = 0;
  for (const auto& sigma : all_permutations(2, 2)) {
    const auto e = EndomorphismSpec::from_permutation(sigma);
    std::vector<AlgebraElement> gens = {AlgebraElement::generator(2, 1), AlgebraElement::generator(2, 2)};
    for (int m = 1; m <= 3; ++m) {
      for (auto& g : gens) g = apply(e, g);
      for (int p = 1; p <= max_len; ++p) {
        const std::size_t target = static_cast<std::size_t>(p + m);
        for (const auto& I : all_words(2, p)) {
          const auto left = word_image(gens, I);
          for (const auto& J : all_words(2, p)) {
            const auto image = mul(left, adjoint(word_image(gens, J)));
            ++r.cases;
            const std::string where =
                sigma.label() + " m=" + std::to_string(m) + " s_" + I.digits() + " s_" + J.digits() + "*";
            if (!in_F(image, target, target)) {
              r.failures.push_back(where + ": image leaves F_{p+m,l+m}");
              continue;
            }
            const auto count = unit_monomial_count(image, target, target);
            if (!count) r.failures.push_back(where + ": image is not a sum of unit monomials");
            const auto canonical = canonicalize(image);
            if (canonical.terms().size() == 1 && canonical.terms().begin()->second == Scalar(1)) ++literal;
          }
        }
      }
    }
  }
  r.metrics["single_monomial_images"] = static_cast<double>(literal);
  r.metrics["images"] = static_cast<double>(r.cases);
}

void suite_cocycle(SuiteResult& r, const VerifyOptions& opts) {
  const int kmax = opts.depth > 0 ? opts.depth : 5;
  for (const auto& sigma : all_permutations(2, 2)) {
    const auto e = EndomorphismSpec::from_permutation(sigma);
    const auto u = cocycles(e, kmax);
    const auto one = AlgebraElement::identity(2);
    for (int k = 1; k <= kmax; ++k) {
      const std::string where = sigma.label() + " k=" + std::to_string(k);
      r.cases += 3;
      if (!equals(u[k], mul(e.unitary(), theta(u[k - 1])))) {
        r.failures.push_back(where + ": u_k != u theta(u_{k-1})");
      }
      if (!equals(mul(u[k], adjoint(u[k])), one)) r.failures.push_back(where + ": u_k not unitary");
      for (const auto& I : all_words(2, k)) {
        AlgebraElement via_gens = one;
        for (std::size_t i = 0; i < I.size(); ++i) {
          via_gens = mul(via_gens, apply(e, AlgebraElement::generator(2, I[i])));
        }
        if (!equals(via_gens, mul(u[k], AlgebraElement::monomial(2, I, {})))) {
          r.failures.push_back(where + ": rho(s_" + I.digits() + ") != u_k s_I");
          break;
        }
      }
    }
  }
}

void suite_psi_formulas(SuiteResult& r, const VerifyOptions& opts) {
  const auto psi_spec = spec_of("(1 2)");
  const int nmax = opts.depth > 0 ? opts.depth : 10;
  for (int n = 1; n <= nmax; ++n) {
    MultiIndex ones, first, second;
    for (int i = 0; i < n; ++i) ones.push_back(1);
    first.push_back(1);
    for (int i = 0; i < n; ++i) first.push_back(2);
    second.push_back(1);
    for (int i = 0; i < n - 1; ++i) second.push_back(2);
    second.push_back(1);
    const auto expected = AlgebraElement::monomial(2, first, MultiIndex{1}) +
                          AlgebraElement::monomial(2, second, MultiIndex{2});
    ++r.cases;
    if (!equals(apply(psi_spec, AlgebraElement::monomial(2, ones, {})), expected)) {
      r.failures.push_back("psi(s_1^" + std::to_string(n) + ")");
    }
  }

  const auto x = ef_x();
  const auto s1 = AlgebraElement::generator(2, 1);
  const auto s2 = AlgebraElement::generator(2, 2);
  ++r.cases;
  if (!equals(apply(psi_spec, x), mul(mul(s1, x), adjoint(s2)) + mul(mul(s2, x), adjoint(s1)))) {
    r.failures.push_back("psi(X) != s1 X s2* + s2 X s1*");
  }
  const auto psi_x = apply(psi_spec, x);
  for (int k = 0; k <= 6; ++k) {
    ++r.cases;
    if (!equals(theta_power(psi_x, k), apply(psi_spec, theta_power(x, k)))) {
      r.failures.push_back("theta^" + std::to_string(k) + "(psi(X)) != psi(theta^" + std::to_string(k) + "(X))");
    }
  }
  const auto e = ef_e();
  const auto f = ef_f();
  r.cases += 2;
  if (!equals(apply(psi_spec, e), mul(e, theta(e)) + mul(f, theta(f)))) {
    r.failures.push_back("psi(E) != E(x)E + F(x)F");
  }
  if (!equals(apply(psi_spec, f), mul(e, theta(f)) + mul(f, theta(e)))) {
    r.failures.push_back("psi(F) != E(x)F + F(x)E");
  }
}

void suite_trace(SuiteResult& r, const VerifyOptions& opts) {
  const int max_len = opts.depth > 0 ? opts.depth : 3;
  std::vector<AlgebraElement> monomials;
  for (int p = 0; p <= max_len; ++p) {
    for (int l = 0; l <= max_len; ++l) {
      for (const auto& I : all_words(2, p)) {
        for (const auto& J : all_words(2, l)) monomials.push_back(AlgebraElement::monomial(2, I, J));
      }
    }
  }
  for (const auto& sigma : all_permutations(2, 2)) {
    const auto e = EndomorphismSpec::from_permutation(sigma);
    for (const auto& m : monomials) {
      ++r.cases;
      if (!(trace_state(apply(e, m)) == trace_state(m))) {
        r.failures.push_back(sigma.label() + ": " + format_raw(m));
      }
    }
  }
}

void suite_oracles(SuiteResult& r, const VerifyOptions& opts) {
  const int depth = opts.depth > 0 ? opts.depth : 12;
  for (const auto& pairing : oracle_pairings()) {
    const auto e = spec_of(pairing.perm);
    ++r.cases;
    auto oracle = pairing.oracle;
    if (!oracle) oracle = case2_selector(e);
    if (!oracle) {
      r.failures.push_back(perm_name(pairing.perm) + ": rho(s1 s1*) selects neither case");
      continue;
    }
    if (!oracle_equivalence(e, *oracle, depth)) {
      r.failures.push_back(perm_name(pairing.perm) + " vs " + oracle_name(*oracle));
    }
  }
}

void suite_ef(SuiteResult& r, const VerifyOptions& opts) {
  const int depth = opts.depth > 0 ? opts.depth : 10;
  const auto one = AlgebraElement::identity(2);
  for (int m = 1; m <= 6; ++m) {
    std::vector<AlgebraElement> ps;
    AlgebraElement sum(2);
    for (const auto& w : all_words(2, m)) {
      ps.push_back(canonicalize(projection(ProjectionWord{w})));
      sum += ps.back();
    }
    ++r.cases;
    if (!equals(sum, one)) r.failures.push_back("E/F projections of depth " + std::to_string(m) + " do not sum to 1");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      ++r.cases;
      if (!equals(mul(ps[i], ps[i]), ps[i]) || !equals(adjoint(ps[i]), ps[i])) {
        r.failures.push_back("P_q is not a projection at depth " + std::to_string(m));
      }
      // Projections summing to 1 are pairwise orthogonal; check directly where cheap.
      if (m > 3) continue;
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        ++r.cases;
        if (!is_zero(mul(ps[i], ps[j]))) r.failures.push_back("P_q P_r != 0 at depth " + std::to_string(m));
      }
    }
  }

  const auto tef = oracle_cantor_map(OracleId::tEF);
  for (const std::string cycles : {"(1 2)", "(1 3 2 4)", "(3 4)", "(1 4 2 3)"}) {
    const auto e = spec_of(cycles);
    for (int p = 1; p <= 3; ++p) {
      ++r.cases;
      if (!(ef_block_map(e, p) == ef_block_map_fast(e, p))) {
        r.failures.push_back(perm_name(cycles) + ": symbolic and fast E/F tables differ at p=" + std::to_string(p));
      }
    }
    for (int p = 1; p <= depth; ++p) {
      ++r.cases;
      if (!(ef_block_map_fast(e, p) == tef.table(p))) {
        r.failures.push_back(perm_name(cycles) + ": E/F table differs from tEF at p=" + std::to_string(p));
      }
    }
    ++r.cases;
    const auto summary = entropy_estimate(ef_cantor_map(e), e.label(), "EF", 4, 16);
    if (summary.verdict != Verdict::log2) {
      r.failures.push_back(perm_name(cycles) + ": E/F entropy verdict " + verdict_name(summary.verdict));
    }
  }
}

}  // namespace

AlgebraElement random_element(std::mt19937_64& rng, int n_gens, int max_len, int terms) {
  std::uniform_int_distribution<int> len(0, max_len);
  AlgebraElement out(n_gens);
  for (int t = 0; t < terms; ++t) {
    out.add_term(Monomial{random_word(rng, n_gens, len(rng)), random_word(rng, n_gens, len(rng))},
                 random_scalar(rng));
  }
  return out;
}

AlgebraElement random_homogeneous(std::mt19937_64& rng, int n_gens, int p, int l, int terms) {
  AlgebraElement out(n_gens);
  for (int t = 0; t < terms; ++t) {
    out.add_term(Monomial{random_word(rng, n_gens, p), random_word(rng, n_gens, l)}, random_scalar(rng));
  }
  return out;
}

const std::vector<OraclePairing>& oracle_pairings() {
  static const std::vector<OraclePairing> pairings{
      {"(2 3)", OracleId::shift},
      {"(1 2)", OracleId::psi12},
      {"(1 3 2 4)", OracleId::psi1324},
      {"(1 3)", OracleId::t13},
      {"(1 4 3 2)", OracleId::t1432},
      {"(1 2 3)", OracleId::t123},
      {"(1 4 2)", OracleId::t142},
      {"(1 3)(2 4)", OracleId::flip},
      {"(1 4)(2 3)", OracleId::first_letter_flip},
      {"(1 4)", std::nullopt},
      {"(1 3 2)", std::nullopt},
      {"(1 2 4)", std::nullopt},
      {"(1 4 3)", std::nullopt},
      {"(2 3 4)", std::nullopt},
      {"(1 2 4 3)", std::nullopt},
      {"(1 3 4 2)", std::nullopt},
      {"id", OracleId::id},
  };
  return pairings;
}

std::string SuiteResult::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["status"] = passed() ? "pass" : "fail";
  j["seed"] = seed;
  j["cases"] = cases;
  j["failures"] = failures;
  j["metrics"] = metrics;
  return j.dump();
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"relations", "lemma1", "lemma2", "cocycle",
                                              "psi-formulas", "trace-invariance", "oracles", "ef"};
  return names;
}

SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = name;
  r.seed = opts.seed;
  if (name == "relations") {
    suite_relations(r, opts);
  } else if (name == "lemma1") {
    suite_lemma1(r, opts);
  } else if (name == "lemma2") {
    suite_lemma2(r, opts);
  } else if (name == "cocycle") {
    suite_cocycle(r, opts);
  } else if (name == "psi-formulas") {
    suite_psi_formulas(r, opts);
  } else if (name == "trace-invariance") {
    suite_trace(r, opts);
  } else if (name == "oracles") {
    suite_oracles(r, opts);
  } else if (name == "ef") {
    suite_ef(r, opts);
  } else {
    throw ParseError("unknown verify suite '" + name + "'", 0);
  }
  return r;
}

}  // namespace cuntzlab
