#pragma once

#include "ehplab/power_series.hpp"
#include "ehplab/stable_data.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace ehplab {

enum class CheckStatus {
  pass,
  fail,
  /// Run outside the hypotheses under which the identity is claimed; recorded,
  /// never counted as a failure.
  informational,
};

std::string to_string(CheckStatus status);

struct CheckRecord {
  std::string check_id;
  std::string statement;          // the identity or inequality checked
  nlohmann::json parameters;      // ranges of k, n, Q, ...
  CheckStatus status = CheckStatus::pass;
  bool holds = true;
  nlohmann::json witness;         // first failing instance; null when holds
  nlohmann::json details;         // counts, deltas; may be null
};

/// Checks ordered by check_id; each id appears once.
class VerificationReport {
 public:
  /// Throws std::logic_error on a duplicate check_id.
  void add(CheckRecord record);

  const CheckRecord* find(const std::string& check_id) const;
  std::vector<const CheckRecord*> checks() const;
  std::size_t count(CheckStatus status) const;
  /// True iff no non-informational check failed.
  bool ok() const { return count(CheckStatus::fail) == 0; }

  nlohmann::json to_json() const;

 private:
  std::map<std::string, CheckRecord> records_;
};

/// Adds 1 to the left-hand coefficient at `degree` of the (k, n) instance
/// before comparing; used to exercise the failure path.
struct Perturbation {
  unsigned k;
  unsigned n;
  std::size_t degree;
};

/// A(k+1, n) = A(k+1, n+1) + t^{n-1} A(k, 2n+1) for 0 <= k < k_max, 1 <= n <= n_max,
/// both sides from enumeration.
CheckRecord check_a_recursion(unsigned k_max, unsigned n_max, std::size_t trunc_degree,
                              std::optional<Perturbation> perturb = std::nullopt);

/// A(k, n) <= 1 + P(M_0/M_k) coefficient-wise. Informational when n < 3.
CheckRecord check_a_le_steenrod_quotient(unsigned k, unsigned n, std::size_t trunc_degree);

/// A(k, n)_q <= a_coefficient_bound(k, q) for 1 <= q <= Q. Informational when n < 3.
CheckRecord check_a_le_coefficient_bound(unsigned k, unsigned n, std::size_t trunc_degree);

/// A(k, n; t) * L^S(t) truncated at Q: the computable upper-bound series for
/// ell_2(pi_{q+n} P_{2^k} S^n). Throws std::out_of_range if the table is short.
TruncatedSeries unstable_bound_series(unsigned k, unsigned n, std::size_t trunc_degree,
                                      const StableStemsTable& table);

/// unstable_bound_series(k, n)_q <= ell_hat(q) * tower_stage_bound(k, q) for
/// 1 <= q <= Q. The constant term is the artificial 1 and is not compared.
CheckRecord check_stage_bound_chain(unsigned k, unsigned n, std::size_t trunc_degree,
                                    const StableStemsTable& table);

/// Bound on ell_2(pi_{q+n} P_{2^k} S^n) obtained by unrolling the EHP
/// inequalities directly:
///   B(0, n, q) = ell(q),  B(k, n, q) = ell(q) when n >= q + 2,
///   B(k, n, q) = B(k, n+1, q) + 1                     when q = n - 1,
///   B(k, n, q) = B(k, n+1, q) + B(k-1, 2n+1, q-(n-1))  otherwise,
/// with negative q contributing 0. Memoized per instance.
class BoundPropagator {
 public:
  explicit BoundPropagator(const StableStemsTable& table) : table_(table) {}

  /// Throws std::out_of_range when q exceeds the table; n must be >= 1.
  BigInt value(unsigned k, unsigned n, long q);

  /// 1 + sum_{q=1..Q} B(k, n, q) t^q
  TruncatedSeries series(unsigned k, unsigned n, std::size_t trunc_degree);

 private:
  const StableStemsTable& table_;
  std::map<std::tuple<unsigned, unsigned, long>, BigInt> memo_;
};

/// ell_2(pi_{q+n}(S^n)) <= unstable_bound_series(k, n)_q for every table entry
/// with n in [n_min, n_max], q <= Q and q + n <= stable_range(k, n).
CheckRecord check_ground_truth(const UnstableTable& unstable, const StableStemsTable& stable,
                               unsigned k, unsigned n_min, unsigned n_max,
                               std::size_t trunc_degree);

struct SuiteConfig {
  std::size_t trunc_degree = kDefaultTruncation;
  std::filesystem::path stable_table;
  std::filesystem::path unstable_table;

  unsigned closed_form_k_max = 5;
  unsigned closed_form_n_max = 12;
  unsigned admissible_length_max = 5;
  unsigned recursion_k_max = 4;  // k < recursion_k_max
  unsigned recursion_n_max = 20;
  unsigned inequality_k_max = 5;
  unsigned inequality_n_max = 12;
  unsigned simplex_j_max = 6;
  unsigned simplex_q_max = 200;
  unsigned integral_j_max = 8;
  unsigned integral_q_max = 200;
  unsigned mahler_q_max = 30;
  unsigned mahler_k_max = 40;
  unsigned route_k_max = 3;
  unsigned route_n_max = 10;
  unsigned route_q_max = 30;
  unsigned chain_k_max = 4;
  unsigned chain_n_max = 8;
  unsigned ground_truth_k_max = 4;
  unsigned triple_trials = 10000;
  std::uint64_t seed = 0x5eed2024;
};

/// Loads both tables (errors propagate before any check runs), then runs every
/// check. Deterministic given the config and data.
VerificationReport run_suite(const SuiteConfig& config);

/// Runs every check that does not need data tables. Also used by run_suite.
void run_table_free_checks(const SuiteConfig& config, VerificationReport& report);

/// Runs every check that reads the stable and unstable tables.
void run_table_checks(const SuiteConfig& config, const StableStemsTable& stable,
                      const UnstableTable& unstable, VerificationReport& report);

}  // namespace ehplab
