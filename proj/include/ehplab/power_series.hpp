#pragma once

#include "ehplab/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ehplab {

inline constexpr std::size_t kDefaultTruncation = 64;

/// Formal power series in t with exact rational coefficients, truncated at
/// degree Q. Holds exactly Q+1 coefficients; immutable after construction.
class TruncatedSeries {
 public:
  /// Zero series.
  explicit TruncatedSeries(std::size_t trunc_degree);
  /// Throws std::invalid_argument unless coeffs.size() == trunc_degree + 1.
  TruncatedSeries(std::size_t trunc_degree, std::vector<Rational> coeffs);

  static TruncatedSeries from_coeffs(std::vector<Rational> coeffs);
  static TruncatedSeries one(std::size_t trunc_degree);
  /// c * t^exponent, zero when exponent exceeds the truncation.
  static TruncatedSeries monomial(std::size_t exponent, const Rational& c,
                                  std::size_t trunc_degree);

  std::size_t trunc_degree() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t q) const { return coeffs_.at(q); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_integral() const;
  bool is_count_series() const;  // every coefficient a nonnegative integer

  /// Keeps degrees 0..new_degree. Throws if new_degree > trunc_degree().
  TruncatedSeries truncated(std::size_t new_degree) const;
  /// Multiplication by t^m.
  TruncatedSeries shifted(std::size_t m) const;
  TruncatedSeries with_coeff(std::size_t q, Rational value) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

/// Truncation of 1/(1 - t^d). Rejects d == 0.
TruncatedSeries make_geometric(unsigned d, std::size_t trunc_degree);

/// Cauchy product truncated at the shared degree.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

struct CoeffViolation {
  std::size_t degree;
  Rational lhs;
  Rational rhs;
};

/// Result of a coefficient-wise comparison; carries the least violating degree.
struct CoeffComparison {
  bool holds = true;
  std::optional<CoeffViolation> witness;
  explicit operator bool() const { return holds; }
};

CoeffComparison coeff_le(const TruncatedSeries& a, const TruncatedSeries& b);
CoeffComparison coeff_eq(const TruncatedSeries& a, const TruncatedSeries& b);

/// Coefficient q of the result is sum_{i=from_index}^{q} a_i.
TruncatedSeries partial_sums(const TruncatedSeries& a, std::size_t from_index);

nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

}  // namespace ehplab
