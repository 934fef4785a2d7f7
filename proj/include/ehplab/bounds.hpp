#pragma once

#include "ehplab/rational.hpp"
#include "ehplab/stable_data.hpp"

#include <cstddef>
#include <vector>

namespace ehplab {

// ---------------------------------------------------------------------------
// Lattice points in the simplex (2^2-1) x_2 + ... + (2^j-1) x_j <= q.

struct SimplexSpec {
  unsigned j = 2;       // generators in degrees 1, 3, ..., 2^j - 1
  unsigned budget = 0;  // q

  /// (3, 7, ..., 2^j - 1). Throws std::invalid_argument when j < 2 or j > 30.
  std::vector<unsigned> weights() const;
};

/// Exact number of nonnegative integer solutions, by dynamic programming over
/// the budget. Equal to dim B_q for B polynomial on generators of degrees
/// 1, 3, ..., 2^j - 1.
BigInt simplex_count_exact(const SimplexSpec& spec);

enum class SimplexBoundForm {
  /// (1/(j-1)!) (1 + sum_i w_i/q)^{j-1} prod_i q/w_i
  exact_product,
  /// (q + 2^{j+1} - 2)^{j-1} / ((j-1)! 2^{j(j-1)/2})
  simplified,
};

/// Analytic upper bound on simplex_count_exact. Rejects q == 0.
Rational simplex_upper_bound(const SimplexSpec& spec, SimplexBoundForm form);

/// The simplified form as a function of the unshifted budget, extended to
/// base 0 (it is a polynomial in q); used after the degree shift q -> q - (2^{j+1}-2).
Rational simplified_bound_polynomial(unsigned j, const Rational& q);

// ---------------------------------------------------------------------------
// Bound polynomials.

/// sum_{j=1..k} q^{j-1} / ((j-1)! 2^{j(j-1)/2}): coefficient-wise bound on A(k,n;t)
/// for n >= 3 and q >= 1.
Rational a_coefficient_bound(unsigned k, unsigned q);

/// sum_{j=0..k} (q+1)^j / (j! 2^{j(j-1)/2}): the factor multiplying ell_hat(q)
/// in the bound for ell_2(pi_{q+n} P_{2^k} S^n).
Rational tower_stage_bound(unsigned k, unsigned q);

/// The same sum started at j = 1, as it appears at the end of the integral
/// comparison. tower_stage_bound = 1 + tower_stage_bound_from_one.
Rational tower_stage_bound_from_one(unsigned k, unsigned q);

struct NDependentBounds {
  /// sum_{j=1..k} (q - (n-1)(2^j-1) - 1 - 3j)^{j-1} / ((j-1)! 2^{j(j-1)/2})
  Rational coefficient_bound;
  /// sum_{j=1..k} (q + 2 - n)^j / (j! 2^{j(j-1)/2})
  Rational stage_bound;
};

/// Summands with a negative base contribute 0; 0^0 = 1.
NDependentBounds n_dependent_bounds(unsigned k, unsigned n, unsigned q);

// ---------------------------------------------------------------------------
// Mahler's F(q) = sum_k alpha^{k(k-1)/2} q^k / k!, which satisfies F'(x) = F(alpha x).

struct MahlerParams {
  Rational alpha{1, 2};
  double tol = 1e-15;
};

/// Value of a truncated series together with a bound on the omitted tail.
struct MahlerValue {
  double value = 0;
  double remainder_bound = 0;
  std::size_t terms = 0;
};

/// Sums terms until the next one is below tol and the term ratio is below 1/2;
/// remainder_bound = next / (1 - ratio) bounds everything omitted. Throws
/// std::invalid_argument unless 0 < alpha < 1, tol > 0 and q >= 0.
MahlerValue mahler_F(double q, const MahlerParams& params = {});

/// sum_{j > k} alpha^{j(j-1)/2} q^j / j!, summed directly (no cancellation
/// against F). Same certificate as mahler_F.
MahlerValue mahler_tail(unsigned k, double q, const MahlerParams& params = {});

/// sum_{j=0..k} alpha^{j(j-1)/2} q^j / j!, exact.
Rational mahler_partial(unsigned k, const Rational& q, const Rational& alpha);

/// The j-th Taylor term alpha^{j(j-1)/2} q^j / j!, exact.
Rational mahler_term(unsigned j, const Rational& q, const Rational& alpha);

/// F(q+1) * ell_hat(q) at alpha = 1/2. Throws std::out_of_range beyond the table.
MahlerValue unstable_limit_bound(unsigned q, const StableStemsTable& table);

/// (2^k + 1)(n - 1). Rejects n < 2.
unsigned long long stable_range(unsigned k, unsigned n);

// ---------------------------------------------------------------------------

struct ConjectureFit {
  std::size_t q_last = 0;
  /// sum_{i=1..q_last} ell(i) / q_last^2
  double C = 0;
  /// Least a, then least b, with a q^2 + b >= ell_hat(q) on the table.
  Rational a, b;
  /// Least b (= ell_hat(0)), then least a.
  Rational tight_a, tight_b;
  /// tight_a q^2 + tight_b - ell_hat(q), q = 0..q_last
  std::vector<Rational> residuals;
};

/// Throws std::invalid_argument when the table has fewer than 3 entries.
ConjectureFit conjecture_fit(const StableStemsTable& table);

/// (tight_a q^2 + tight_b) * tower_stage_bound(k, q); a polynomial of degree k + 2.
Rational conjectural_bound(const ConjectureFit& fit, unsigned k, unsigned q);

}  // namespace ehplab
