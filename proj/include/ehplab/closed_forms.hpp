#pragma once

#include "ehplab/power_series.hpp"

namespace ehplab {

/// Poincare series of M_{k-1}/M_k: t^{2^{k+1}-2} / prod_{i=1..k} (1 - t^{2^i - 1}).
/// Rejects k == 0.
TruncatedSeries welcher_series(unsigned k, std::size_t trunc_degree);

/// P(M_0/M_k; t) = sum_{j=1..k} welcher_series(j). Rejects k == 0.
TruncatedSeries p_M0_Mk(unsigned k, std::size_t trunc_degree);

enum class AFormula {
  /// 1 + sum_{j=1..k} t^{(n+1)(2^j-1)-2j} / prod_{i=1..j} (1 - t^{2^i - 1}).
  /// Agrees with series_A_enum exactly.
  reconciled,
  /// The sum as printed: denominator prod_{i=1..j} (1 - t^{2^j - 1}) and no
  /// constant term for the empty sequence. Kept to exhibit the mismatch.
  verbatim,
};

/// Lowest degree (n+1)(2^j - 1) - 2j of the length-j summand.
std::size_t a_summand_lowest_degree(unsigned j, unsigned n);

/// Length-j summand of the closed form (j >= 1).
TruncatedSeries a_closed_form_summand(unsigned j, unsigned n, std::size_t trunc_degree,
                                      AFormula formula = AFormula::reconciled);

/// Closed form of A(k, n; t). Rejects n == 0.
TruncatedSeries a_closed_form(unsigned k, unsigned n, std::size_t trunc_degree,
                              AFormula formula = AFormula::reconciled);

}  // namespace ehplab
