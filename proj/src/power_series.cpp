#include "ehplab/power_series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ehplab {
namespace {

void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.trunc_degree() != b.trunc_degree())
    throw std::invalid_argument(std::string(op) + ": mismatched truncation degrees " +
                                std::to_string(a.trunc_degree()) + " and " +
                                std::to_string(b.trunc_degree()));
}

CoeffComparison compare(const TruncatedSeries& a, const TruncatedSeries& b, bool equality) {
  for (std::size_t q = 0; q <= a.trunc_degree(); ++q) {
    const bool ok = equality ? a[q] == b[q] : a[q] <= b[q];
    if (!ok) return {false, CoeffViolation{q, a[q], b[q]}};
  }
  return {};
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t trunc_degree) : coeffs_(trunc_degree + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t trunc_degree, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != trunc_degree + 1)
    throw std::invalid_argument("TruncatedSeries: expected " + std::to_string(trunc_degree + 1) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
  const std::size_t degree = coeffs.size() - 1;
  return TruncatedSeries(degree, std::move(coeffs));
}

TruncatedSeries TruncatedSeries::one(std::size_t trunc_degree) {
  return monomial(0, 1, trunc_degree);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t exponent, const Rational& c,
                                          std::size_t trunc_degree) {
  TruncatedSeries s(trunc_degree);
  if (exponent <= trunc_degree) s.coeffs_[exponent] = c;
  return s;
}

bool TruncatedSeries::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

bool TruncatedSeries::is_count_series() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1 || c < 0) return false;
  return true;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_degree) const {
  if (new_degree > trunc_degree())
    throw std::invalid_argument("truncated: cannot extend a series beyond its truncation");
  return TruncatedSeries(new_degree,
                         std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_degree + 1));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t m) const {
  TruncatedSeries s(trunc_degree());
  for (std::size_t q = m; q <= trunc_degree(); ++q) s.coeffs_[q] = coeffs_[q - m];
  return s;
}

TruncatedSeries TruncatedSeries::with_coeff(std::size_t q, Rational value) const {
  TruncatedSeries s = *this;
  value.canonicalize();
  s.coeffs_.at(q) = std::move(value);
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b, "add");
  TruncatedSeries s = a;
  for (std::size_t q = 0; q < s.coeffs_.size(); ++q) s.coeffs_[q] += b.coeffs_[q];
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b, "sub");
  TruncatedSeries s = a;
  for (std::size_t q = 0; q < s.coeffs_.size(); ++q) s.coeffs_[q] -= b.coeffs_[q];
  return s;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.coeffs_ == b.coeffs_;
}

TruncatedSeries make_geometric(unsigned d, std::size_t trunc_degree) {
  if (d == 0) throw std::invalid_argument("make_geometric: d must be positive");
  std::vector<Rational> c(trunc_degree + 1);
  for (std::size_t m = 0; m <= trunc_degree; m += d) c[m] = 1;
  return TruncatedSeries(trunc_degree, std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b, "mul");
  const std::size_t degree = a.trunc_degree();
  std::vector<Rational> c(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= degree; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(degree, std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

CoeffComparison coeff_le(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b, "coeff_le");
  return compare(a, b, false);
}

CoeffComparison coeff_eq(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b, "coeff_eq");
  return compare(a, b, true);
}

TruncatedSeries partial_sums(const TruncatedSeries& a, std::size_t from_index) {
  if (from_index > a.trunc_degree())
    throw std::invalid_argument("partial_sums: from_index exceeds truncation degree");
  std::vector<Rational> c(a.trunc_degree() + 1);
  Rational running = 0;
  for (std::size_t q = from_index; q <= a.trunc_degree(); ++q) {
    running += a[q];
    c[q] = running;
  }
  return TruncatedSeries(a.trunc_degree(), std::move(c));
}

nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return {{"trunc_degree", s.trunc_degree()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  const auto degree = j.at("trunc_degree").get<std::size_t>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return TruncatedSeries(degree, std::move(coeffs));
}

}  // namespace ehplab
