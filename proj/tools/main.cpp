// Command-line front end for the cuntzlab engine.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or parse error,
// 3 domain error, 4 budget exceeded.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuntzlab/ef_masa.hpp"
#include "cuntzlab/endomorphism.hpp"
#include "cuntzlab/entropy.hpp"
#include "cuntzlab/errors.hpp"
#include "cuntzlab/matrix_embed.hpp"
#include "cuntzlab/parse.hpp"
#include "cuntzlab/table1.hpp"
#include "cuntzlab/verify.hpp"

namespace {

using namespace cuntzlab;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kDomain = 3, kBudget = 4 };

struct Config {
  int n_gens = 2;
  int rank = 2;
  std::string perm;
  std::string perm_word;
  std::string unitary;
  std::string element;
  std::string masa = "standard";
  int depth = 0;
  int steps = 0;
  std::uint64_t budget = kDefaultWordBudget;
  std::string format = "text";
  bool json = false;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::string suite = "all";

  bool as_json() const { return json || format == "json"; }
};

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--n-gens", cfg.n_gens, "number of generators N")
      ->envname("CUNTZLAB_N_GENS")
      ->check(CLI::Range(2, 9));
  cmd->add_option("--format", cfg.format, "output format")
      ->envname("CUNTZLAB_FORMAT")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_flag("--json", cfg.json, "shorthand for --format json")->envname("CUNTZLAB_JSON");
}

void add_endomorphism(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--rank", cfg.rank, "rank k of the permutation")
      ->envname("CUNTZLAB_RANK")
      ->check(CLI::Range(1, 8));
  cmd->add_option("--perm", cfg.perm, "permutation in cycle notation, 'id', 'shift' or 'flip'")
      ->envname("CUNTZLAB_PERM");
  cmd->add_option("--perm-word", cfg.perm_word, "permutation in one-line notation")
      ->envname("CUNTZLAB_PERM_WORD");
  cmd->add_option("--unitary", cfg.unitary, "unitary u in element syntax")->envname("CUNTZLAB_UNITARY");
}

void add_budgets(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--depth", cfg.depth, "largest cylinder depth p")
      ->envname("CUNTZLAB_DEPTH")
      ->check(CLI::Range(1, 24));
  cmd->add_option("--steps", cfg.steps, "number of iterates n")
      ->envname("CUNTZLAB_STEPS")
      ->check(CLI::Range(1, 40));
  cmd->add_option("--budget", cfg.budget, "word budget per count")
      ->envname("CUNTZLAB_BUDGET")
      ->check(CLI::PositiveNumber);
}

EndomorphismSpec make_spec(const Config& cfg) {
  const int given = !cfg.perm.empty() + !cfg.perm_word.empty() + !cfg.unitary.empty();
  if (given != 1) throw ParseError("give exactly one of --perm, --perm-word, --unitary", 0);
  if (!cfg.unitary.empty()) return EndomorphismSpec::from_unitary(parse_element(cfg.unitary, cfg.n_gens));
  if (!cfg.perm_word.empty()) {
    return EndomorphismSpec::from_permutation(Permutation::from_image_word(cfg.perm_word, cfg.n_gens, cfg.rank));
  }
  if (cfg.perm == "shift") return EndomorphismSpec::shift(cfg.n_gens);
  if (cfg.perm == "id" || cfg.perm == "identity") return EndomorphismSpec::identity(cfg.n_gens);
  return EndomorphismSpec::from_permutation(Permutation::parse(cfg.perm, cfg.n_gens, cfg.rank));
}

AlgebraElement require_element(const Config& cfg) {
  if (cfg.element.empty()) throw ParseError("--element is required", 0);
  return parse_element(cfg.element, cfg.n_gens);
}

int cmd_apply(const Config& cfg) {
  const auto e = make_spec(cfg);
  const auto x = require_element(cfg);
  const auto image = apply_power(e, cfg.steps > 0 ? cfg.steps : 1, x);
  if (cfg.as_json()) {
    std::cout << nlohmann::ordered_json{{"perm", e.label()}, {"input", format_element(x)},
                                        {"output", format_element(image)}}
                     .dump()
              << "\n";
  } else {
    std::cout << format_element(image) << "\n";
  }
  return kOk;
}

int cmd_entropy(const Config& cfg) {
  const auto e = make_spec(cfg);
  const int p_max = cfg.depth > 0 ? cfg.depth : 4;
  const int n_max = cfg.steps > 0 ? cfg.steps : 16;
  EntropySummary summary;
  if (cfg.masa == "standard") {
    summary = entropy_estimate(e, p_max, n_max, cfg.budget);
  } else {
    summary = entropy_estimate(ef_cantor_map(e), e.label(), "EF", p_max, n_max, cfg.budget);
  }
  if (cfg.as_json()) {
    std::cout << summary.to_json() << "\n";
    return kOk;
  }
  for (const auto& r : summary.reports) {
    std::cout << "p=" << r.p << " counts:";
    for (auto c : r.counts) std::cout << ' ' << c;
    std::cout << "  verdict " << verdict_name(r.verdict) << "\n";
  }
  std::cout << "masa " << (cfg.masa == "standard" ? "standard" : "EF") << ", verdict "
            << verdict_name(summary.verdict) << " (" << summary.estimate_nats << " nats)\n";
  return kOk;
}

int cmd_table1(const Config& cfg) {
  Table1Options opts;
  if (cfg.depth > 0) opts.p_max = cfg.depth;
  if (cfg.steps > 0) opts.n_max = cfg.steps;
  opts.budget = cfg.budget;
  const auto rows = run_table1(opts);
  if (cfg.as_json()) {
    std::cout << table1_json(rows);
  } else if (cfg.format == "csv") {
    std::cout << table1_csv(rows);
  } else {
    std::cout << table1_text(rows);
  }
  for (const auto& r : rows) {
    if (!r.match) return kMismatch;
  }
  return kOk;
}

int cmd_verify(const Config& cfg) {
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = verify_suite_names();
  } else {
    suites.push_back(cfg.suite);
  }
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.depth = cfg.depth;
  bool ok = true;
  auto all = nlohmann::ordered_json::array();
  for (const auto& name : suites) {
    const auto r = run_verify_suite(name, opts);
    ok = ok && r.passed();
    if (cfg.as_json()) {
      all.push_back(nlohmann::ordered_json::parse(r.to_json()));
      continue;
    }
    std::cout << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.cases << " cases, seed "
              << r.seed << ")";
    for (const auto& [k, v] : r.metrics) std::cout << " " << k << "=" << v;
    std::cout << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  }
  if (cfg.as_json()) std::cout << all.dump() << "\n";
  return ok ? kOk : kMismatch;
}

int cmd_norm(const Config& cfg) {
  const auto x = require_element(cfg);
  const auto components = gauge_components(x);
  if (components.size() <= 1) {
    const double n = operator_norm(x);
    if (cfg.as_json()) {
      std::cout << nlohmann::ordered_json{{"element", format_element(x)}, {"norm", n}}.dump() << "\n";
    } else {
      std::cout << n << "\n";
    }
    return kOk;
  }
  const auto b = norm_bounds(x);
  if (cfg.as_json()) {
    std::cout << nlohmann::ordered_json{{"element", format_element(x)}, {"lower", b.lower}, {"upper", b.upper}}
                     .dump()
              << "\n";
  } else {
    std::cout << b.lower << " <= ||X|| <= " << b.upper << "\n";
  }
  return kOk;
}

nlohmann::ordered_json matrix_json(const ExactMatrix& m) {
  const auto numeric = NumericMatrix::from_exact(m);
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.dim; ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.dim; ++c) row.push_back({numeric(r, c).real(), numeric(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

int cmd_psi(const Config& cfg) {
  const auto x = require_element(cfg);
  int k = cfg.depth;
  if (k <= 0) {
    const auto canonical = canonicalize(x);
    for (const auto& [m, c] : canonical.terms()) {
      k = std::max({k, static_cast<int>(m.left.size()), static_cast<int>(m.right.size())});
    }
  }
  const auto d = lemma1_decompose(x, k);
  const double norm = operator_norm(x);
  const char* dir = d.direction == Direction::creation       ? "creation"
                    : d.direction == Direction::annihilation ? "annihilation"
                                                             : "scalar";
  if (cfg.as_json()) {
    nlohmann::ordered_json out;
    out["k"] = k;
    out["direction"] = dir;
    out["norm"] = norm;
    auto parts = nlohmann::ordered_json::array();
    for (const auto& [j, t] : d.parts) {
      parts.push_back({{"J", j.digits()},
                       {"norm", spectral_norm(NumericMatrix::from_exact(t))},
                       {"matrix", matrix_json(t)}});
    }
    out["parts"] = parts;
    std::cout << out.dump() << "\n";
    return kOk;
  }
  std::cout << "k=" << k << " direction=" << dir << " ||X||=" << norm << "\n";
  for (const auto& [j, t] : d.parts) {
    std::cout << "T_" << (j.empty() ? "()" : j.digits())
              << " norm=" << spectral_norm(NumericMatrix::from_exact(t)) << "\n";
    for (std::size_t r = 0; r < t.dim; ++r) {
      std::cout << " ";
      for (std::size_t c = 0; c < t.dim; ++c) std::cout << ' ' << t.at(r, c).to_string();
      std::cout << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with endomorphisms of Cuntz algebras"};
  app.require_subcommand(1);
  Config cfg;

  auto* apply_cmd = app.add_subcommand("apply", "apply rho (or rho^steps) to an element");
  add_common(apply_cmd, cfg);
  add_endomorphism(apply_cmd, cfg);
  apply_cmd->add_option("--element", cfg.element, "element, e.g. \"s[1] t[2]\"")->envname("CUNTZLAB_ELEMENT");
  apply_cmd->add_option("--steps", cfg.steps, "power of rho")->envname("CUNTZLAB_STEPS")->check(CLI::Range(1, 8));

  auto* entropy_cmd = app.add_subcommand("entropy", "topological entropy of the induced map on a masa");
  add_common(entropy_cmd, cfg);
  add_endomorphism(entropy_cmd, cfg);
  add_budgets(entropy_cmd, cfg);
  entropy_cmd->add_option("--masa", cfg.masa, "standard or ef")
      ->envname("CUNTZLAB_MASA")
      ->transform(CLI::IsMember({"standard", "ef"}, CLI::ignore_case));

  auto* table_cmd = app.add_subcommand("table1", "entropies of the 24 rank-2 permutative endomorphisms of O_2");
  add_common(table_cmd, cfg);
  add_budgets(table_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  add_common(verify_cmd, cfg);
  verify_cmd->add_option("suite", cfg.suite, "suite name or 'all'")
      ->envname("CUNTZLAB_SUITE");
  verify_cmd->add_option("--depth", cfg.depth, "suite size override")->envname("CUNTZLAB_DEPTH");
  verify_cmd->add_option("--seed", cfg.seed, "random seed")->envname("CUNTZLAB_SEED");

  auto* norm_cmd = app.add_subcommand("norm", "operator norm of an element");
  add_common(norm_cmd, cfg);
  norm_cmd->add_option("--element", cfg.element, "element")->envname("CUNTZLAB_ELEMENT");

  auto* psi_cmd = app.add_subcommand("psi", "matrix decomposition Psi_k(X) = sum_J T_J (x) s_J");
  add_common(psi_cmd, cfg);
  psi_cmd->add_option("--element", cfg.element, "homogeneous element")->envname("CUNTZLAB_ELEMENT");
  psi_cmd->add_option("--depth", cfg.depth, "matrix level k (default max(p, l))")
      ->envname("CUNTZLAB_DEPTH")
      ->check(CLI::Range(0, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*apply_cmd) return cmd_apply(cfg);
    if (*entropy_cmd) return cmd_entropy(cfg);
    if (*table_cmd) return cmd_table1(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
    if (*norm_cmd) return cmd_norm(cfg);
    if (*psi_cmd) return cmd_psi(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
