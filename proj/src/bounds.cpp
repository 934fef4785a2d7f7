#include "ehplab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ehplab {
namespace {

// 1 / ((j - 1)! 2^{j(j-1)/2}) and 1 / (j! 2^{j(j-1)/2})
Rational inverse_weight(unsigned factorial_arg, unsigned j) {
  return Rational(1, factorial(factorial_arg) * power_of_two(j * (j - 1) / 2));
}

Rational clamped_power(const BigInt& base, unsigned e) {
  if (base < 0) return 0;
  return pow(Rational(base), e);
}

void validate(const MahlerParams& params) {
  if (params.alpha <= 0 || params.alpha >= 1)
    throw std::invalid_argument("mahler: alpha must lie in (0, 1)");
  if (!(params.tol > 0)) throw std::invalid_argument("mahler: tol must be positive");
}

// Sums t_j for j >= first, t_j = alpha^{j(j-1)/2} q^j / j!. Stops once the next
// term is below the threshold and the (decreasing) term ratio is below 1/2.
MahlerValue sum_terms_from(unsigned first, double q, const MahlerParams& params, bool relative) {
  validate(params);
  if (!(q >= 0)) throw std::invalid_argument("mahler: q must be nonnegative");
  const double alpha = params.alpha.get_d();
  MahlerValue out;
  if (q == 0) {
    out.value = first == 0 ? 1.0 : 0.0;
    out.terms = 1;
    return out;
  }
  // t_first in log space, then multiply by successive ratios.
  const double log_term = 0.5 * first * (first - 1.0) * std::log(alpha) + first * std::log(q) -
                          std::lgamma(first + 1.0);
  double term = std::exp(log_term);
  double sum = 0;
  for (unsigned j = first; j < first + 100000; ++j) {
    sum += term;
    ++out.terms;
    const double next = term * q * std::pow(alpha, j) / (j + 1.0);
    const double next_ratio = q * std::pow(alpha, j + 1) / (j + 2.0);
    const double threshold = relative ? params.tol * sum : params.tol;
    if (next < threshold && next_ratio < 0.5) {
      out.value = sum;
      out.remainder_bound = next / (1.0 - next_ratio);
      return out;
    }
    term = next;
  }
  throw std::runtime_error("mahler: series did not converge");
}

}  // namespace

std::vector<unsigned> SimplexSpec::weights() const {
  if (j < 2 || j > 30) throw std::invalid_argument("SimplexSpec: j must lie in [2, 30]");
  std::vector<unsigned> w;
  for (unsigned i = 2; i <= j; ++i) w.push_back((1u << i) - 1);
  return w;
}

BigInt simplex_count_exact(const SimplexSpec& spec) {
  // exact[s]: solutions with weighted sum exactly s
  std::vector<BigInt> exact(spec.budget + 1);
  exact[0] = 1;
  for (unsigned w : spec.weights())
    for (unsigned s = w; s <= spec.budget; ++s) exact[s] += exact[s - w];
  BigInt total = 0;
  for (const auto& e : exact) total += e;
  return total;
}

Rational simplex_upper_bound(const SimplexSpec& spec, SimplexBoundForm form) {
  const auto w = spec.weights();
  if (spec.budget == 0) throw std::invalid_argument("simplex_upper_bound: q must be positive");
  const unsigned dims = spec.j - 1;
  const Rational q(spec.budget);
  if (form == SimplexBoundForm::simplified)
    return simplified_bound_polynomial(spec.j, q);

  Rational stretch = 1;
  Rational volume = Rational(1, factorial(dims));
  for (unsigned wi : w) {
    stretch += Rational(wi) / q;
    volume *= q / Rational(wi);
  }
  return pow(stretch, dims) * volume;
}

Rational simplified_bound_polynomial(unsigned j, const Rational& q) {
  if (j < 2) throw std::invalid_argument("simplified_bound_polynomial: j must be >= 2");
  const Rational base = q + Rational(power_of_two(j + 1) - 2);
  return pow(base, j - 1) * inverse_weight(j - 1, j);
}

Rational a_coefficient_bound(unsigned k, unsigned q) {
  Rational total = 0;
  for (unsigned j = 1; j <= k; ++j) total += pow(Rational(q), j - 1) * inverse_weight(j - 1, j);
  return total;
}

Rational tower_stage_bound(unsigned k, unsigned q) {
  return 1 + tower_stage_bound_from_one(k, q);
}

Rational tower_stage_bound_from_one(unsigned k, unsigned q) {
  Rational total = 0;
  for (unsigned j = 1; j <= k; ++j) total += pow(Rational(q + 1), j) * inverse_weight(j, j);
  return total;
}

NDependentBounds n_dependent_bounds(unsigned k, unsigned n, unsigned q) {
  NDependentBounds out;
  out.coefficient_bound = 0;
  out.stage_bound = 0;
  for (unsigned j = 1; j <= k; ++j) {
    const BigInt coeff_base = BigInt(q) - BigInt(n - 1) * (power_of_two(j) - 1) - 1 - 3 * BigInt(j);
    const BigInt stage_base = BigInt(q) + 2 - BigInt(n);
    out.coefficient_bound += clamped_power(coeff_base, j - 1) * inverse_weight(j - 1, j);
    out.stage_bound += clamped_power(stage_base, j) * inverse_weight(j, j);
  }
  return out;
}

MahlerValue mahler_F(double q, const MahlerParams& params) {
  return sum_terms_from(0, q, params, false);
}

MahlerValue mahler_tail(unsigned k, double q, const MahlerParams& params) {
  return sum_terms_from(k + 1, q, params, true);
}

Rational mahler_term(unsigned j, const Rational& q, const Rational& alpha) {
  return pow(alpha, j * (j - 1) / 2) * pow(q, j) / Rational(factorial(j));
}

Rational mahler_partial(unsigned k, const Rational& q, const Rational& alpha) {
  Rational total = 0;
  for (unsigned j = 0; j <= k; ++j) total += mahler_term(j, q, alpha);
  return total;
}

MahlerValue unstable_limit_bound(unsigned q, const StableStemsTable& table) {
  const double ell_hat = table.ell_hat(q);
  auto f = mahler_F(q + 1.0);
  f.value *= ell_hat;
  f.remainder_bound *= ell_hat;
  return f;
}

unsigned long long stable_range(unsigned k, unsigned n) {
  if (n < 2) throw std::invalid_argument("stable_range: n must be >= 2");
  if (k > 62) throw std::out_of_range("stable_range: k too large");
  return ((1ULL << k) + 1) * (n - 1ULL);
}

ConjectureFit conjecture_fit(const StableStemsTable& table) {
  if (table.q_max() < 2)
    throw std::invalid_argument("conjecture_fit: need at least 3 table entries, got " +
                                std::to_string(table.q_max() + 1));
  ConjectureFit fit;
  fit.q_last = table.q_max();
  unsigned long long cumulative = 0;
  for (std::size_t i = 1; i <= fit.q_last; ++i) cumulative += table.ell(i);
  fit.C = static_cast<double>(cumulative) / static_cast<double>(fit.q_last * fit.q_last);

  fit.a = 0;
  fit.b = table.ell_hat(fit.q_last);

  fit.tight_b = table.ell_hat(0);
  fit.tight_a = 0;
  for (std::size_t q = 1; q <= fit.q_last; ++q) {
    const Rational needed(Rational(table.ell_hat(q)) - fit.tight_b);
    fit.tight_a = std::max(fit.tight_a, Rational(needed / Rational(q * q)));
  }
  for (std::size_t q = 0; q <= fit.q_last; ++q)
    fit.residuals.push_back(fit.tight_a * Rational(q * q) + fit.tight_b -
                            Rational(table.ell_hat(q)));
  return fit;
}

Rational conjectural_bound(const ConjectureFit& fit, unsigned k, unsigned q) {
  return (fit.tight_a * Rational(q) * Rational(q) + fit.tight_b) * tower_stage_bound(k, q);
}

}  // namespace ehplab
