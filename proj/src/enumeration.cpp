#include "ehplab/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace ehplab {
namespace {

// Least dimension added by `remaining` further entries placed to the left of
// an entry equal to v: they are at least 2v+1, 4v+3, ..., i.e. 2^s (v+1) - 1.
unsigned long long min_unadmissible_completion(unsigned long long v, unsigned remaining) {
  return (v + 1) * ((1ULL << (remaining + 1)) - 2) - 2ULL * remaining;
}

// Least degree added by `remaining` further exponents to the left of v: 2v, 4v, ...
unsigned long long min_admissible_completion(unsigned long long v, unsigned remaining) {
  return v * ((1ULL << (remaining + 1)) - 2);
}

}  // namespace

unsigned UnadmissibleSequence::dimension() const {
  unsigned d = 0;
  for (unsigned i : entries) d += i - 1;
  return d;
}

bool UnadmissibleSequence::is_unadmissible() const {
  for (unsigned e : entries)
    if (e == 0) return false;
  for (std::size_t j = 0; j + 1 < entries.size(); ++j)
    if (entries[j] < 2 * entries[j + 1] + 1) return false;
  return true;
}

bool UnadmissibleSequence::has_excess_at_least(unsigned n) const {
  if (!is_unadmissible()) return false;
  return entries.empty() || entries.back() >= n;
}

SequenceGrading enumerate_I(unsigned length, unsigned n, unsigned q_max) {
  SequenceGrading grading;
  if (length == 0) {
    grading[0].push_back({});
    return grading;
  }
  if (length > 40) return grading;
  // Built right to left: reversed[0] is the last entry i_length.
  std::vector<unsigned> reversed;
  std::function<void(unsigned long long)> extend = [&](unsigned long long dim) {
    if (reversed.size() == length) {
      UnadmissibleSequence seq{{reversed.rbegin(), reversed.rend()}};
      grading[static_cast<unsigned>(dim)].push_back(std::move(seq));
      return;
    }
    const unsigned remaining_after = length - static_cast<unsigned>(reversed.size()) - 1;
    const unsigned long long lo =
        reversed.empty() ? std::max(n, 1u) : 2ULL * reversed.back() + 1;
    for (unsigned long long v = lo;; ++v) {
      if (dim + (v - 1) + min_unadmissible_completion(v, remaining_after) > q_max) break;
      reversed.push_back(static_cast<unsigned>(v));
      extend(dim + v - 1);
      reversed.pop_back();
    }
  };
  extend(0);
  for (auto& [dim, seqs] : grading) std::sort(seqs.begin(), seqs.end());
  return grading;
}

TruncatedSeries series_A_enum(unsigned k, unsigned n, std::size_t trunc_degree) {
  std::vector<Rational> coeffs(trunc_degree + 1);
  for (unsigned j = 0; j <= k; ++j) {
    const auto grading = enumerate_I(j, n, static_cast<unsigned>(trunc_degree));
    if (grading.empty()) break;  // longer sequences only have larger dimension
    for (const auto& [dim, seqs] : grading) coeffs[dim] += static_cast<unsigned long>(seqs.size());
  }
  return TruncatedSeries(trunc_degree, std::move(coeffs));
}

unsigned AdmissibleMonomial::degree() const {
  unsigned d = 0;
  for (unsigned i : exponents) d += i;
  return d;
}

bool AdmissibleMonomial::is_admissible() const {
  for (std::size_t m = 0; m + 1 < exponents.size(); ++m)
    if (exponents[m] < 2 * exponents[m + 1]) return false;
  return true;
}

bool AdmissibleMonomial::in_quotient_basis() const {
  if (exponents.empty() || !is_admissible()) return false;
  for (unsigned e : exponents)
    if (e == 0) return false;
  return exponents.back() >= 2;
}

std::vector<AdmissibleMonomial> enumerate_admissible_words(unsigned length, unsigned deg_max) {
  if (length == 0) throw std::invalid_argument("enumerate_admissible: length must be >= 1");
  std::vector<AdmissibleMonomial> words;
  if (length > 40) return words;
  std::vector<unsigned> reversed;
  std::function<void(unsigned long long)> extend = [&](unsigned long long deg) {
    if (reversed.size() == length) {
      words.push_back({{reversed.rbegin(), reversed.rend()}});
      return;
    }
    const unsigned remaining_after = length - static_cast<unsigned>(reversed.size()) - 1;
    const unsigned long long lo = reversed.empty() ? 2 : 2ULL * reversed.back();
    for (unsigned long long v = lo;; ++v) {
      if (deg + v + min_admissible_completion(v, remaining_after) > deg_max) break;
      reversed.push_back(static_cast<unsigned>(v));
      extend(deg + v);
      reversed.pop_back();
    }
  };
  extend(0);
  std::sort(words.begin(), words.end());
  return words;
}

std::map<unsigned, BigInt> enumerate_admissible(unsigned length, unsigned deg_max) {
  std::map<unsigned, BigInt> counts;
  for (const auto& w : enumerate_admissible_words(length, deg_max)) counts[w.degree()] += 1;
  return counts;
}

AdmissibleMonomial monomial_from_params(std::span<const unsigned> r) {
  if (r.empty()) throw std::invalid_argument("monomial_from_params: need at least one parameter");
  const std::size_t k = r.size();
  std::vector<unsigned> exponents(k);
  exponents[k - 1] = 2 + r[k - 1];
  for (std::size_t m = k - 1; m-- > 0;) exponents[m] = 2 * exponents[m + 1] + r[m];
  return {std::move(exponents)};
}

std::vector<unsigned> params_from_monomial(const AdmissibleMonomial& word) {
  if (!word.in_quotient_basis())
    throw std::invalid_argument("params_from_monomial: word is not admissible with last exponent >= 2");
  const auto& e = word.exponents;
  const std::size_t k = e.size();
  std::vector<unsigned> r(k);
  r[k - 1] = e[k - 1] - 2;
  for (std::size_t m = 0; m + 1 < k; ++m) r[m] = e[m] - 2 * e[m + 1];
  return r;
}

nlohmann::ordered_json to_json(const SequenceGrading& grading) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [dim, seqs] : grading) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& s : seqs) list.push_back(s.entries);
    out[std::to_string(dim)] = std::move(list);
  }
  return out;
}

}  // namespace ehplab
