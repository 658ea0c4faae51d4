#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cuntzlab/element.hpp"
#include "cuntzlab/oracles.hpp"

namespace cuntzlab {

/// Random element with `terms` monomials, |I|,|J| <= max_len, and small
/// Gaussian-rational coefficients.
AlgebraElement random_element(std::mt19937_64& rng, int n_gens, int max_len, int terms);

/// Random element of F_{p,l} with `terms` monomials of A_{p,l}.
AlgebraElement random_homogeneous(std::mt19937_64& rng, int n_gens, int p, int l, int terms);

/// The (endomorphism, closed-form map) pairings checked by the oracle suite:
/// nine fixed pairings, seven selected by the value of rho(s_1 s_1^*), and the
/// identity.
struct OraclePairing {
  std::string perm;  // cycle notation
  std::optional<OracleId> oracle;  // unset: choose with case2_selector
};
const std::vector<OraclePairing>& oracle_pairings();

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::map<std::string, double> metrics;

  bool passed() const { return failures.empty(); }
  std::string to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20240607;
  int depth = 0;  // 0: suite default
};

const std::vector<std::string>& verify_suite_names();

/// Runs one named suite. Throws ParseError for an unknown name.
SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace cuntzlab
