#include "ehplab/stable_data.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>

namespace ehplab {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::optional<std::uint64_t> parse_natural(const std::string& token) {
  if (token.empty()) return std::nullopt;
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

GroupDesc parse_orders(const std::string& field, const std::string& source, std::size_t line) {
  if (field.empty()) return {};
  std::vector<std::uint64_t> factors;
  for (const auto& token : split(field, ';')) {
    const auto value = parse_natural(token);
    if (!value) throw DataError(source, line, "invalid cyclic order '" + token + "'");
    if (*value == 1) throw DataError(source, line, "cyclic factor of order 1 is not allowed");
    factors.push_back(*value);
  }
  return GroupDesc(std::move(factors));
}

template <typename RowHandler>
void for_each_row(std::istream& in, const std::string& source, std::size_t fields,
                  RowHandler&& handle) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) throw DataError(source, line, "empty line");
    auto parts = split(raw, ',');
    if (parts.size() != fields)
      throw DataError(source, line,
                      "expected " + std::to_string(fields) + " comma-separated fields, got " +
                          std::to_string(parts.size()));
    handle(parts, line);
  }
}

unsigned index_field(const std::string& token, const char* name, const std::string& source,
                     std::size_t line) {
  const auto value = parse_natural(token);
  if (!value || *value > 1'000'000)
    throw DataError(source, line, std::string("invalid ") + name + " '" + token + "'");
  return static_cast<unsigned>(*value);
}

std::ifstream open_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  return in;
}

}  // namespace

GroupDesc::GroupDesc(std::vector<std::uint64_t> factors) {
  for (auto f : factors)
    if (f != 1) factors_.push_back(f);
  std::sort(factors_.begin(), factors_.end());
}

bool GroupDesc::is_finite() const {
  return std::none_of(factors_.begin(), factors_.end(), [](auto f) { return f == 0; });
}

std::uint64_t GroupDesc::order() const {
  if (!is_finite()) throw std::domain_error("GroupDesc::order: group is infinite");
  std::uint64_t n = 1;
  for (auto f : factors_) n *= f;
  return n;
}

std::string GroupDesc::to_string() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (auto f : factors_) {
    if (!out.empty()) out += "+";
    out += f == 0 ? std::string("Z") : "Z/" + std::to_string(f);
  }
  return out;
}

GroupDesc direct_sum(const GroupDesc& a, const GroupDesc& b) {
  std::vector<std::uint64_t> f(a.factors_.begin(), a.factors_.end());
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return GroupDesc(std::move(f));
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned p_adic_valuation(std::uint64_t value, std::uint64_t p) {
  unsigned v = 0;
  while (value != 0 && value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

unsigned ell_p(const GroupDesc& g, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("ell_p: " + std::to_string(p) + " is not prime");
  unsigned total = 0;
  for (auto f : g.factors())
    if (f != 0) total += p_adic_valuation(f, p);
  return total;
}

DataError::DataError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " +
                         message),
      line_(line) {}

StableStemsTable::StableStemsTable(std::vector<GroupDesc> groups) : groups_(std::move(groups)) {
  if (groups_.empty()) throw std::invalid_argument("StableStemsTable: table is empty");
  unsigned running = 0;
  for (const auto& g : groups_) {
    ell_.push_back(ell_p(g, 2));
    running = std::max(running, ell_.back());
    ell_hat_.push_back(running);
  }
}

void StableStemsTable::require_covered(std::size_t q) const {
  if (q > q_max())
    throw std::out_of_range("stable stems table covers q <= " + std::to_string(q_max()) +
                            ", requested q = " + std::to_string(q));
}

const GroupDesc& StableStemsTable::group(std::size_t q) const {
  require_covered(q);
  return groups_[q];
}

unsigned StableStemsTable::ell(std::size_t q) const {
  require_covered(q);
  return ell_[q];
}

unsigned StableStemsTable::ell_hat(std::size_t q) const {
  require_covered(q);
  return ell_hat_[q];
}

TruncatedSeries StableStemsTable::L_S_series(std::size_t trunc_degree) const {
  require_covered(trunc_degree);
  std::vector<Rational> c(trunc_degree + 1);
  c[0] = 1;
  for (std::size_t q = 1; q <= trunc_degree; ++q) c[q] = ell_[q];
  return TruncatedSeries(trunc_degree, std::move(c));
}

StableStemsTable parse_stable_table(std::istream& in, const std::string& source) {
  std::vector<GroupDesc> groups;
  for_each_row(in, source, 2, [&](const std::vector<std::string>& parts, std::size_t line) {
    const unsigned q = index_field(parts[0], "stem", source, line);
    if (q != groups.size())
      throw DataError(source, line,
                      "expected stem " + std::to_string(groups.size()) + ", got " +
                          std::to_string(q) + " (rows must be contiguous from 0)");
    groups.push_back(parse_orders(parts[1], source, line));
  });
  if (groups.empty()) throw DataError(source, 0, "table has no rows");
  return StableStemsTable(std::move(groups));
}

StableStemsTable load_stable_table(const std::filesystem::path& path) {
  auto in = open_table(path);
  return parse_stable_table(in, path.string());
}

UnstableTable parse_unstable_table(std::istream& in, const std::string& source) {
  std::map<UnstableTable::Key, GroupDesc> entries;
  for_each_row(in, source, 3, [&](const std::vector<std::string>& parts, std::size_t line) {
    const unsigned n = index_field(parts[0], "sphere dimension", source, line);
    const unsigned q = index_field(parts[1], "stem", source, line);
    if (n == 0) throw DataError(source, line, "sphere dimension must be positive");
    if (!entries.emplace(UnstableTable::Key{n, q}, parse_orders(parts[2], source, line)).second)
      throw DataError(source, line,
                      "duplicate entry n=" + std::to_string(n) + ", q=" + std::to_string(q));
  });
  return UnstableTable(std::move(entries));
}

UnstableTable load_unstable_table(const std::filesystem::path& path) {
  auto in = open_table(path);
  return parse_unstable_table(in, path.string());
}

TripleOutcome check_exact_triple(std::uint64_t a, std::span<const std::uint64_t> b_orders,
                                 std::span<const std::uint64_t> multipliers, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("check_exact_triple: p is not prime");
  if (a == 0) throw std::invalid_argument("check_exact_triple: source must be finite cyclic");
  if (b_orders.size() != multipliers.size())
    throw std::invalid_argument("check_exact_triple: one multiplier per summand of B");
  std::uint64_t b_card = 1;
  for (std::size_t i = 0; i < b_orders.size(); ++i) {
    const auto b = b_orders[i];
    if (b == 0) throw std::invalid_argument("check_exact_triple: target must be finite");
    if ((a % b) * (multipliers[i] % b) % b != 0)
      throw std::invalid_argument("check_exact_triple: map is not well defined");
    b_card *= b;
    if (b_card > (1u << 20)) throw std::invalid_argument("check_exact_triple: |B| too large");
  }

  const std::size_t r = b_orders.size();
  auto encode = [&](const std::vector<std::uint64_t>& x) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < r; ++i) idx = idx * b_orders[i] + x[i];
    return idx;
  };
  auto decode = [&](std::uint64_t idx) {
    std::vector<std::uint64_t> x(r);
    for (std::size_t i = r; i-- > 0;) {
      x[i] = idx % b_orders[i];
      idx /= b_orders[i];
    }
    return x;
  };

  // Image of A: multiples of the generator's image.
  std::vector<bool> in_image(b_card, false);
  std::uint64_t image_size = 0;
  std::vector<std::uint64_t> y(r, 0);
  for (std::uint64_t k = 0; k < a; ++k) {
    const auto idx = encode(y);
    if (!in_image[idx]) {
      in_image[idx] = true;
      ++image_size;
    }
    for (std::size_t i = 0; i < r; ++i) y[i] = (y[i] + multipliers[i]) % b_orders[i];
  }

  // x + im has p-power order in C iff p^e x lies in the image, e = v_p(|B|).
  const unsigned e = p_adic_valuation(b_card, p);
  std::uint64_t p_torsion_elements = 0;
  for (std::uint64_t idx = 0; idx < b_card; ++idx) {
    auto x = decode(idx);
    for (unsigned s = 0; s < e; ++s)
      for (std::size_t i = 0; i < r; ++i) x[i] = (x[i] * p) % b_orders[i];
    if (in_image[encode(x)]) ++p_torsion_elements;
  }
  std::uint64_t c_p_card = p_torsion_elements / image_size;

  TripleOutcome out;
  out.ell_a = p_adic_valuation(a, p);
  out.ell_b = ell_p(GroupDesc({b_orders.begin(), b_orders.end()}), p);
  out.ell_c = p_adic_valuation(c_p_card, p);
  if (c_p_card != 0) {
    std::uint64_t reconstructed = 1;
    for (unsigned s = 0; s < out.ell_c; ++s) reconstructed *= p;
    if (reconstructed != c_p_card || p_torsion_elements % image_size != 0)
      throw std::logic_error("check_exact_triple: p-torsion of C is not a p-group");
  }
  out.holds = out.ell_b <= out.ell_a + out.ell_c;
  return out;
}

TripleOutcome check_exact_triple(std::uint64_t a, std::uint64_t b, std::uint64_t multiplier,
                                 std::uint64_t p) {
  const std::uint64_t bs[] = {b};
  const std::uint64_t ms[] = {multiplier};
  return check_exact_triple(a, bs, ms, p);
}

}  // namespace ehplab
