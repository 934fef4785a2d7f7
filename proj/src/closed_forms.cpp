#include "ehplab/closed_forms.hpp"

#include <stdexcept>

namespace ehplab {
namespace {

// Exponents past this are beyond any truncation we could allocate.
constexpr unsigned kMaxLength = 60;

std::size_t mersenne(unsigned i) { return (std::size_t{1} << i) - 1; }

// prod_{i=1..j} 1/(1 - t^{d_i}) times t^shift.
TruncatedSeries shifted_product(std::size_t shift, unsigned j, bool verbatim_denominator,
                                std::size_t trunc_degree) {
  if (shift > trunc_degree) return TruncatedSeries(trunc_degree);
  TruncatedSeries s = TruncatedSeries::monomial(shift, 1, trunc_degree);
  for (unsigned i = 1; i <= j; ++i) {
    const std::size_t d = verbatim_denominator ? mersenne(j) : mersenne(i);
    s = mul(s, make_geometric(static_cast<unsigned>(d), trunc_degree));
  }
  return s;
}

// Degree past which a length-j term cannot appear: the shift grows like 2^j.
bool beyond_truncation(unsigned j, std::size_t trunc_degree) {
  return j > kMaxLength || mersenne(j) > 2 * trunc_degree + 2;
}

}  // namespace

TruncatedSeries welcher_series(unsigned k, std::size_t trunc_degree) {
  if (k == 0) throw std::invalid_argument("welcher_series: k must be >= 1");
  if (beyond_truncation(k, trunc_degree)) return TruncatedSeries(trunc_degree);
  return shifted_product((std::size_t{2} << k) - 2, k, false, trunc_degree);
}

TruncatedSeries p_M0_Mk(unsigned k, std::size_t trunc_degree) {
  if (k == 0) throw std::invalid_argument("p_M0_Mk: k must be >= 1");
  TruncatedSeries total(trunc_degree);
  for (unsigned j = 1; j <= k && !beyond_truncation(j, trunc_degree); ++j)
    total = total + welcher_series(j, trunc_degree);
  return total;
}

std::size_t a_summand_lowest_degree(unsigned j, unsigned n) {
  return (std::size_t{n} + 1) * mersenne(j) - 2 * std::size_t{j};
}

TruncatedSeries a_closed_form_summand(unsigned j, unsigned n, std::size_t trunc_degree,
                                      AFormula formula) {
  if (j == 0) throw std::invalid_argument("a_closed_form_summand: j must be >= 1");
  if (n == 0) throw std::invalid_argument("a_closed_form_summand: n must be >= 1");
  if (beyond_truncation(j, trunc_degree)) return TruncatedSeries(trunc_degree);
  return shifted_product(a_summand_lowest_degree(j, n), j, formula == AFormula::verbatim,
                         trunc_degree);
}

TruncatedSeries a_closed_form(unsigned k, unsigned n, std::size_t trunc_degree, AFormula formula) {
  if (n == 0) throw std::invalid_argument("a_closed_form: n must be >= 1");
  TruncatedSeries total = formula == AFormula::reconciled ? TruncatedSeries::one(trunc_degree)
                                                          : TruncatedSeries(trunc_degree);
  for (unsigned j = 1; j <= k && !beyond_truncation(j, trunc_degree); ++j)
    total = total + a_closed_form_summand(j, n, trunc_degree, formula);
  return total;
}

}  // namespace ehplab
