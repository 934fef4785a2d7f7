#pragma once

// Brute-force enumeration of completely unadmissible sequences and admissible
// Steenrod monomials. These are the ground truth the closed-form generating
// functions are reconciled against, so nothing here uses a generating function.

#include "ehplab/power_series.hpp"

#include <compare>
#include <map>
#include <span>
#include <vector>

namespace ehplab {

/// (i_1, ..., i_k) with i_j >= 2 i_{j+1} + 1; dimension is sum (i_j - 1).
struct UnadmissibleSequence {
  std::vector<unsigned> entries;

  unsigned length() const { return static_cast<unsigned>(entries.size()); }
  unsigned dimension() const;
  bool is_unadmissible() const;
  /// Membership in I(length, n): unadmissible and last entry >= n. The empty
  /// sequence belongs to I(0, n) for every n.
  bool has_excess_at_least(unsigned n) const;

  auto operator<=>(const UnadmissibleSequence&) const = default;
};

/// dimension -> sequences of that dimension, lexicographically sorted.
using SequenceGrading = std::map<unsigned, std::vector<UnadmissibleSequence>>;

/// Length-`length` members of I(length, n) with dimension <= q_max.
SequenceGrading enumerate_I(unsigned length, unsigned n, unsigned q_max);

/// A(k, n; t): sequences of every length 0..k in I(., n), counted by dimension.
TruncatedSeries series_A_enum(unsigned k, unsigned n, std::size_t trunc_degree);

/// Sq^{i_1} ... Sq^{i_j}; admissible when i_m >= 2 i_{m+1}.
struct AdmissibleMonomial {
  std::vector<unsigned> exponents;

  unsigned length() const { return static_cast<unsigned>(exponents.size()); }
  unsigned degree() const;
  bool is_admissible() const;
  /// Admissible, nonempty, every exponent positive, last exponent >= 2.
  bool in_quotient_basis() const;

  auto operator<=>(const AdmissibleMonomial&) const = default;
};

/// Length-`length` admissible words with last exponent >= 2 and degree <= deg_max,
/// lexicographic. These span M_{length-1}/M_length.
std::vector<AdmissibleMonomial> enumerate_admissible_words(unsigned length, unsigned deg_max);

/// Count of the words above per degree (degrees with no word are omitted).
std::map<unsigned, BigInt> enumerate_admissible(unsigned length, unsigned deg_max);

/// r = (r_1, ..., r_k) |-> (2^k + 2^{k-1} r_k + ... + r_1, ..., 4 + 2 r_k + r_{k-1}, 2 + r_k).
AdmissibleMonomial monomial_from_params(std::span<const unsigned> r);
/// Inverse of monomial_from_params. Throws std::invalid_argument for words outside
/// the quotient basis.
std::vector<unsigned> params_from_monomial(const AdmissibleMonomial& word);

// Keys are dimensions in increasing numeric order.
nlohmann::ordered_json to_json(const SequenceGrading& grading);

}  // namespace ehplab
