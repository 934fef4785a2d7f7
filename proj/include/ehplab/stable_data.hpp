#pragma once

#include "ehplab/power_series.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ehplab {

/// Finitely generated abelian group as a direct sum of cyclic groups. Each
/// factor is the order of a summand; 0 encodes Z. Factors equal to 1 are
/// dropped, so the trivial group has no factors.
class GroupDesc {
 public:
  GroupDesc() = default;
  explicit GroupDesc(std::vector<std::uint64_t> factors);

  static GroupDesc cyclic(std::uint64_t order) { return GroupDesc({order}); }
  static GroupDesc integers() { return GroupDesc({0}); }

  std::span<const std::uint64_t> factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }
  bool is_finite() const;
  /// Order of the group; throws std::domain_error for infinite groups.
  std::uint64_t order() const;

  std::string to_string() const;  // e.g. "Z+Z/2+Z/8", "0"

  friend GroupDesc direct_sum(const GroupDesc& a, const GroupDesc& b);
  friend bool operator==(const GroupDesc&, const GroupDesc&) = default;

 private:
  std::vector<std::uint64_t> factors_;  // sorted
};

bool is_prime(std::uint64_t p);
unsigned p_adic_valuation(std::uint64_t value, std::uint64_t p);

/// log_p of the order of the p-torsion subgroup. Throws std::invalid_argument
/// for non-prime p.
unsigned ell_p(const GroupDesc& g, std::uint64_t p);

/// Parse or IO failure in a data table, with source name and 1-based line.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// q |-> pi_q^S for 0 <= q <= q_max, contiguous.
class StableStemsTable {
 public:
  explicit StableStemsTable(std::vector<GroupDesc> groups);

  std::size_t q_max() const { return groups_.size() - 1; }
  const GroupDesc& group(std::size_t q) const;
  unsigned ell(std::size_t q) const;
  /// max_{i <= q} ell(i)
  unsigned ell_hat(std::size_t q) const;
  /// 1 + sum_{q >= 1} ell(q) t^q; the constant term is 1 whatever ell(0) is.
  TruncatedSeries L_S_series(std::size_t trunc_degree) const;

 private:
  void require_covered(std::size_t q) const;
  std::vector<GroupDesc> groups_;
  std::vector<unsigned> ell_;
  std::vector<unsigned> ell_hat_;
};

/// (n, q) |-> pi_{q+n}(S^n).
class UnstableTable {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (n, q)
  explicit UnstableTable(std::map<Key, GroupDesc> entries) : entries_(std::move(entries)) {}
  const std::map<Key, GroupDesc>& entries() const { return entries_; }

 private:
  std::map<Key, GroupDesc> entries_;
};

/// Lines "q,orders" with orders ';'-separated, 0 = Z, empty = trivial group.
StableStemsTable parse_stable_table(std::istream& in, const std::string& source_name);
StableStemsTable load_stable_table(const std::filesystem::path& path);
/// Lines "n,q,orders".
UnstableTable parse_unstable_table(std::istream& in, const std::string& source_name);
UnstableTable load_unstable_table(const std::filesystem::path& path);

/// The ell_p values of an exact triple A -> B -> C = B/im(A) and whether
/// ell_p(B) <= ell_p(A) + ell_p(C).
struct TripleOutcome {
  unsigned ell_a = 0;
  unsigned ell_b = 0;
  unsigned ell_c = 0;
  bool holds = false;
};

/// A = Z/a (a = 1 is the trivial group) maps into B = sum Z/b_i by
/// 1 |-> (m_1, ..., m_r). Requires a*m_i = 0 mod b_i so the map is well defined.
/// The p-torsion of C = B / im is counted by brute force over B, so |B| is
/// capped at 2^20.
TripleOutcome check_exact_triple(std::uint64_t a, std::span<const std::uint64_t> b_orders,
                                 std::span<const std::uint64_t> multipliers, std::uint64_t p);
TripleOutcome check_exact_triple(std::uint64_t a, std::uint64_t b, std::uint64_t multiplier,
                                 std::uint64_t p);

}  // namespace ehplab
