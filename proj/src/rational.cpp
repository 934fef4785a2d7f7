#include "ehplab/rational.hpp"

#include <stdexcept>

namespace ehplab {

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

Rational parse_rational(const std::string& text) {
  auto valid_integer = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.find('-') != std::string::npos)
    throw std::invalid_argument("malformed rational '" + text + "'");
  // mpz does not accept a leading '+'.
  BigInt n(num[0] == '+' ? num.substr(1) : num);
  BigInt d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt power_of_two(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Rational pow(const Rational& base, unsigned e) {
  Rational result(base.get_num(), base.get_den());
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), result.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), result.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool is_integer(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_den() == 1;
}

}  // namespace ehplab
