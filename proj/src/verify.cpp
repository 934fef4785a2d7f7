#include "ehplab/verify.hpp"

#include "ehplab/bounds.hpp"
#include "ehplab/closed_forms.hpp"
#include "ehplab/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace ehplab {
namespace {

using nlohmann::json;

CheckRecord make_record(std::string id, std::string statement, json parameters, bool holds,
                        json witness, bool informational = false, json details = nullptr) {
  CheckRecord r;
  r.check_id = std::move(id);
  r.statement = std::move(statement);
  r.parameters = std::move(parameters);
  r.holds = holds;
  r.status = informational ? CheckStatus::informational
                           : (holds ? CheckStatus::pass : CheckStatus::fail);
  r.witness = holds ? json(nullptr) : std::move(witness);
  r.details = std::move(details);
  return r;
}

json violation_json(const CoeffViolation& v) {
  return {{"degree", v.degree}, {"lhs", to_string(v.lhs)}, {"rhs", to_string(v.rhs)}};
}

// Tracks the first failing instance and a failure count across a parameter sweep.
struct Sweep {
  bool holds = true;
  json witness = nullptr;
  std::size_t instances = 0;
  std::size_t failures = 0;

  void record(bool ok, const std::function<json()>& describe) {
    ++instances;
    if (ok) return;
    ++failures;
    if (holds) witness = describe();
    holds = false;
  }
  json details() const { return {{"instances", instances}, {"failures", failures}}; }
};

// A(k, n; t) by enumeration, memoized for one suite run.
class AEnumCache {
 public:
  explicit AEnumCache(std::size_t trunc_degree) : trunc_degree_(trunc_degree) {}
  const TruncatedSeries& get(unsigned k, unsigned n) {
    auto it = cache_.find({k, n});
    if (it == cache_.end()) it = cache_.emplace(std::make_pair(k, n), series_A_enum(k, n, trunc_degree_)).first;
    return it->second;
  }

 private:
  std::size_t trunc_degree_;
  std::map<std::pair<unsigned, unsigned>, TruncatedSeries> cache_;
};

// Deterministic across standard libraries (uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

std::size_t min_size(std::size_t a, std::size_t b) { return a < b ? a : b; }

// ---------------------------------------------------------------------------
// Table-free checks.

CheckRecord closed_form_vs_enumeration(const SuiteConfig& c, AEnumCache& a_enum) {
  Sweep sweep;
  for (unsigned k = 0; k <= c.closed_form_k_max; ++k)
    for (unsigned n = 1; n <= c.closed_form_n_max; ++n) {
      const auto cmp = coeff_eq(a_closed_form(k, n, c.trunc_degree), a_enum.get(k, n));
      sweep.record(cmp.holds, [&] {
        json w = violation_json(*cmp.witness);
        w["k"] = k;
        w["n"] = n;
        return w;
      });
    }
  return make_record("a_closed_form_matches_enumeration",
                     "1 + sum_{j=1..k} t^{(n+1)(2^j-1)-2j} / prod_{i=1..j}(1 - t^{2^i-1}) equals "
                     "A(k,n;t) counted by enumeration",
                     {{"k", {0, c.closed_form_k_max}}, {"n", {1, c.closed_form_n_max}},
                      {"Q", c.trunc_degree}},
                     sweep.holds, sweep.witness, false, sweep.details());
}

CheckRecord verbatim_formula_vs_enumeration(const SuiteConfig& c, AEnumCache& a_enum) {
  Sweep sweep;
  for (unsigned k = 1; k <= c.closed_form_k_max; ++k)
    for (unsigned n = 1; n <= c.closed_form_n_max; ++n) {
      const auto cmp =
          coeff_eq(a_closed_form(k, n, c.trunc_degree, AFormula::verbatim), a_enum.get(k, n));
      sweep.record(cmp.holds, [&] {
        json w = violation_json(*cmp.witness);
        w["k"] = k;
        w["n"] = n;
        return w;
      });
    }
  return make_record("a_verbatim_formula_vs_enumeration",
                     "printed form sum_{j=1..k} t^{(n+1)(2^j-1)-2j} / prod_{i=1..j}(1 - t^{2^j-1}) "
                     "(no constant term) compared with enumerated A(k,n;t)",
                     {{"k", {1, c.closed_form_k_max}}, {"n", {1, c.closed_form_n_max}},
                      {"Q", c.trunc_degree}},
                     sweep.holds, sweep.witness, true, sweep.details());
}

CheckRecord summand_lowest_degree(const SuiteConfig& c) {
  Sweep sweep;
  for (unsigned j = 1; j <= c.closed_form_k_max; ++j)
    for (unsigned n = 1; n <= c.closed_form_n_max; ++n) {
      const auto grading = enumerate_I(j, n, static_cast<unsigned>(c.trunc_degree));
      const std::size_t predicted = a_summand_lowest_degree(j, n);
      const bool ok = grading.empty() ? predicted > c.trunc_degree
                                      : grading.begin()->first == predicted;
      sweep.record(ok, [&] {
        return json{{"j", j}, {"n", n}, {"predicted", predicted},
                    {"enumerated", grading.empty() ? json(nullptr) : json(grading.begin()->first)}};
      });
    }
  return make_record("a_summand_lowest_degree",
                     "least dimension in I(j,n) is (n+1)(2^j-1)-2j",
                     {{"j", {1, c.closed_form_k_max}}, {"n", {1, c.closed_form_n_max}},
                      {"Q", c.trunc_degree}},
                     sweep.holds, sweep.witness, false, sweep.details());
}

TruncatedSeries admissible_count_series(unsigned length, std::size_t trunc_degree) {
  std::vector<Rational> coeffs(trunc_degree + 1);
  for (const auto& [deg, count] : enumerate_admissible(length, static_cast<unsigned>(trunc_degree)))
    coeffs[deg] = Rational(count);
  return TruncatedSeries(trunc_degree, std::move(coeffs));
}

std::vector<CheckRecord> welcher_checks(const SuiteConfig& c) {
  Sweep single, cumulative;
  TruncatedSeries running(c.trunc_degree);
  for (unsigned j = 1; j <= c.admissible_length_max; ++j) {
    const auto counted = admissible_count_series(j, c.trunc_degree);
    const auto cmp = coeff_eq(welcher_series(j, c.trunc_degree), counted);
    single.record(cmp.holds, [&] {
      json w = violation_json(*cmp.witness);
      w["length"] = j;
      return w;
    });
    running = running + counted;
    const auto cum = coeff_eq(p_M0_Mk(j, c.trunc_degree), running);
    cumulative.record(cum.holds, [&] {
      json w = violation_json(*cum.witness);
      w["k"] = j;
      return w;
    });
  }
  json params = {{"length", {1, c.admissible_length_max}}, {"Q", c.trunc_degree}};
  return {make_record("welcher_matches_admissible_count",
                      "t^{2^{k+1}-2} / prod_{i=1..k}(1 - t^{2^i-1}) counts admissible words of "
                      "length k with last exponent >= 2",
                      params, single.holds, single.witness, false, single.details()),
          make_record("p_M0_Mk_matches_admissible_count",
                      "sum_{j=1..k} of the quotient series counts admissible words of length "
                      "1..k with last exponent >= 2",
                      params, cumulative.holds, cumulative.witness, false, cumulative.details())};
}

CheckRecord params_bijection(const SuiteConfig& c) {
  Sweep sweep;
  const auto q_max = static_cast<unsigned>(c.trunc_degree);
  for (unsigned k = 1; k <= c.admissible_length_max; ++k) {
    const auto words = enumerate_admissible_words(k, q_max);
    const std::set<AdmissibleMonomial> word_set(words.begin(), words.end());
    // Parameter vectors r with base + sum_m r_m (2^m - 1) <= q_max.
    const unsigned long long base = (2ULL << k) - 2;
    std::set<AdmissibleMonomial> image;
    std::vector<unsigned> r(k, 0);
    std::function<void(unsigned, unsigned long long)> walk = [&](unsigned m,
                                                                 unsigned long long deg) {
      if (m == k) {
        const auto w = monomial_from_params(r);
        const bool ok = w.in_quotient_basis() && w.degree() == deg &&
                        params_from_monomial(w) == r && word_set.count(w) == 1;
        sweep.record(ok, [&] {
          return json{{"k", k}, {"r", r}, {"word", w.exponents}, {"expected_degree", deg}};
        });
        image.insert(w);
        return;
      }
      const unsigned long long weight = (1ULL << (m + 1)) - 1;
      for (unsigned v = 0; deg + v * weight <= q_max; ++v) {
        r[m] = v;
        walk(m + 1, deg + v * weight);
      }
      r[m] = 0;
    };
    if (base <= q_max) walk(0, base);
    sweep.record(image == word_set, [&] {
      return json{{"k", k}, {"words", word_set.size()}, {"parameter_images", image.size()}};
    });
  }
  return make_record("params_bijection",
                     "r |-> (2^k + ... + 2 r_2 + r_1, ..., 4 + 2 r_k + r_{k-1}, 2 + r_k) is a "
                     "bijection onto the quotient basis with degree affine in r, gradient "
                     "(1, 3, ..., 2^k - 1)",
                     {{"k", {1, c.admissible_length_max}}, {"Q", c.trunc_degree}}, sweep.holds,
                     sweep.witness, false, sweep.details());
}

CheckRecord enumeration_invariants(const SuiteConfig& c, AEnumCache& a_enum) {
  Sweep sweep;
  const auto q_max = static_cast<unsigned>(c.trunc_degree);
  for (unsigned k = 0; k <= c.closed_form_k_max; ++k)
    for (unsigned n = 1; n <= c.closed_form_n_max; ++n) {
      const auto anti = coeff_le(a_enum.get(k, n + 1), a_enum.get(k, n));
      sweep.record(anti.holds, [&] {
        json w = violation_json(*anti.witness);
        w["relation"] = "A(k,n+1) <= A(k,n)";
        w["k"] = k;
        w["n"] = n;
        return w;
      });
      const auto mono = coeff_le(a_enum.get(k, n), a_enum.get(k + 1, n));
      sweep.record(mono.holds, [&] {
        json w = violation_json(*mono.witness);
        w["relation"] = "A(k,n) <= A(k+1,n)";
        w["k"] = k;
        w["n"] = n;
        return w;
      });
      for (const auto& [dim, seqs] : enumerate_I(k, n, q_max)) {
        bool ok = std::adjacent_find(seqs.begin(), seqs.end(), std::greater_equal<>()) ==
                  seqs.end();
        for (const auto& s : seqs)
          ok = ok && s.length() == k && s.dimension() == dim && s.has_excess_at_least(n);
        sweep.record(ok, [&] { return json{{"k", k}, {"n", n}, {"dimension", dim}}; });
      }
    }
  return make_record("enumeration_invariants",
                     "A(k,n+1) <= A(k,n) <= A(k+1,n); every enumerated sequence is "
                     "unadmissible with excess >= n, has the stated dimension and is listed once",
                     {{"k", {0, c.closed_form_k_max}}, {"n", {1, c.closed_form_n_max}},
                      {"Q", c.trunc_degree}},
                     sweep.holds, sweep.witness, false, sweep.details());
}

CheckRecord inequality_sweep(const SuiteConfig& c, bool small_n, bool steenrod) {
  Sweep sweep;
  const unsigned n_lo = small_n ? 1 : 3;
  const unsigned n_hi = small_n ? 2 : c.inequality_n_max;
  for (unsigned k = 1; k <= c.inequality_k_max; ++k)
    for (unsigned n = n_lo; n <= n_hi; ++n) {
      const auto r = steenrod ? check_a_le_steenrod_quotient(k, n, c.trunc_degree)
                              : check_a_le_coefficient_bound(k, n, c.trunc_degree);
      sweep.record(r.holds, [&] { return r.witness; });
    }
  const std::string id = std::string(steenrod ? "a_le_steenrod_quotient" : "a_le_coefficient_bound") +
                         (small_n ? "_small_n" : "");
  const std::string statement =
      steenrod ? "A(k,n;t) <= 1 + P(M_0/M_k;t) coefficient-wise (claimed for n >= 3)"
               : "A(k,n;t)_q <= sum_{j=1..k} q^{j-1}/((j-1)! 2^{j(j-1)/2}) for q >= 1 (claimed "
                 "for n >= 3)";
  return make_record(id, statement,
                     {{"k", {1, c.inequality_k_max}}, {"n", {n_lo, n_hi}}, {"Q", c.trunc_degree}},
                     sweep.holds, sweep.witness, small_n, sweep.details());
}

CheckRecord coefficient_bound_proof_chain(const SuiteConfig& c) {
  Sweep sweep;
  const std::size_t Q = c.trunc_degree;
  const unsigned k_max = c.inequality_k_max;
  std::vector<TruncatedSeries> quotients;
  for (unsigned j = 1; j <= k_max; ++j) quotients.push_back(welcher_series(j, Q));

  for (std::size_t q = 0; q <= Q; ++q) {
    Rational shifted_sum = 0;
    for (unsigned j = 1; j <= k_max; ++j) {
      const long long shift = (2LL << j) - 2;
      const long long reduced = static_cast<long long>(q) - shift;
      const Rational& coeff = quotients[j - 1][q];
      if (reduced < 0) {
        sweep.record(coeff == 0, [&] { return json{{"j", j}, {"q", q}, {"coeff", to_string(coeff)}}; });
      } else {
        // Forgetting the degree-1 generator turns dim B_q into a cumulative count,
        // i.e. lattice points of the simplex.
        const BigInt lattice =
            j == 1 ? BigInt(1) : simplex_count_exact({j, static_cast<unsigned>(reduced)});
        const Rational bound = j == 1 ? Rational(1) : simplified_bound_polynomial(j, Rational(static_cast<long>(reduced)));
        sweep.record(coeff == Rational(lattice) && coeff <= bound, [&] {
          return json{{"j", j}, {"q", q}, {"coeff", to_string(coeff)},
                      {"lattice_points", to_string(lattice)}, {"bound", to_string(bound)}};
        });
        shifted_sum += bound;
      }
      if (q >= 1) {
        sweep.record(shifted_sum <= a_coefficient_bound(j, static_cast<unsigned>(q)), [&] {
          return json{{"k", j}, {"q", q}, {"shifted_sum", to_string(shifted_sum)},
                      {"bound", to_string(a_coefficient_bound(j, static_cast<unsigned>(q)))}};
        });
      }
    }
  }
  return make_record("coefficient_bound_proof_chain",
                     "length-j quotient coefficient at q = lattice points of the simplex with "
                     "budget q-(2^{j+1}-2) <= q^{j-1}/((j-1)! 2^{j(j-1)/2}); the shifted sum over "
                     "j <= k is <= the coefficient bound",
                     {{"j", {1, k_max}}, {"q", {0, Q}}}, sweep.holds, sweep.witness, false,
                     sweep.details());
}

CheckRecord simplex_chain(const SuiteConfig& c) {
  Sweep sweep;
  for (unsigned j = 2; j <= c.simplex_j_max; ++j)
    for (unsigned q = 1; q <= c.simplex_q_max; ++q) {
      const SimplexSpec spec{j, q};
      const Rational count(simplex_count_exact(spec));
      const Rational product = simplex_upper_bound(spec, SimplexBoundForm::exact_product);
      const Rational simplified = simplex_upper_bound(spec, SimplexBoundForm::simplified);
      sweep.record(count <= product && product <= simplified, [&] {
        return json{{"j", j}, {"q", q}, {"count", to_string(count)},
                    {"exact_product", to_string(product)}, {"simplified", to_string(simplified)}};
      });
    }
  return make_record("simplex_chain",
                     "lattice points of 3x_2 + ... + (2^j-1)x_j <= q <= exact-product bound <= "
                     "simplified bound",
                     {{"j", {2, c.simplex_j_max}}, {"q", {1, c.simplex_q_max}}}, sweep.holds,
                     sweep.witness, false, sweep.details());
}

CheckRecord integral_comparison(const SuiteConfig& c) {
  Sweep sweep;
  for (unsigned j = 1; j <= c.integral_j_max; ++j) {
    BigInt power_sum = 0;
    for (unsigned q = 1; q <= c.integral_q_max; ++q) {
      BigInt term;
      mpz_ui_pow_ui(term.get_mpz_t(), q, j - 1);
      power_sum += term;
      BigInt rhs;
      mpz_ui_pow_ui(rhs.get_mpz_t(), q + 1, j);
      sweep.record(BigInt(j) * power_sum <= rhs, [&] {
        return json{{"j", j}, {"q", q}, {"sum", to_string(power_sum)},
                    {"bound", to_string(Rational(rhs, j))}};
      });
    }
  }
  return make_record("integral_comparison", "sum_{i=1..q} i^{j-1} <= (q+1)^j / j",
                     {{"j", {1, c.integral_j_max}}, {"q", {1, c.integral_q_max}}}, sweep.holds,
                     sweep.witness, false, sweep.details());
}

std::vector<CheckRecord> mahler_checks(const SuiteConfig& c) {
  const Rational half(1, 2);
  const json params = {{"k", {0, c.mahler_k_max}}, {"q", {0, c.mahler_q_max}}, {"alpha", "1/2"}};
  Sweep partial_eq, display, converge, literal;
  for (unsigned q = 0; q <= c.mahler_q_max; ++q) {
    const Rational x(q + 1);
    const double xd = q + 1.0;
    const auto F = mahler_F(xd);
    Rational previous = -1;
    for (unsigned k = 0; k <= c.mahler_k_max; ++k) {
      const Rational stage = tower_stage_bound(k, q);
      const Rational partial = mahler_partial(k, x, half);
      partial_eq.record(stage == partial, [&] {
        return json{{"k", k}, {"q", q}, {"stage", to_string(stage)}, {"partial", to_string(partial)}};
      });
      display.record(stage == 1 + tower_stage_bound_from_one(k, q),
                     [&] { return json{{"k", k}, {"q", q}}; });

      // Taylor remainder: t_{k+1} <= tail <= t_{k+1} F(alpha^{k+1} x).
      const Rational next = mahler_term(k + 1, x, half);
      const double next_d = next.get_d();
      const auto tail = mahler_tail(k, xd);
      const auto damped = mahler_F(xd * std::ldexp(1.0, -static_cast<int>(k + 1)));
      const double upper = next_d * (damped.value + damped.remainder_bound);
      const bool ok = partial > previous && tail.value >= next_d * (1 - 1e-12) &&
                      tail.value <= upper * (1 + 1e-12) &&
                      std::abs(F.value - (partial.get_d() + tail.value)) <=
                          1e-12 * F.value + F.remainder_bound + tail.remainder_bound;
      converge.record(ok, [&] {
        return json{{"k", k}, {"q", q}, {"tail", tail.value}, {"next_term", next_d},
                    {"upper", upper}, {"F", F.value}};
      });
      // The claim "gap <= next term": the gap is at least t_{k+1} + t_{k+2}.
      const Rational gap_lower = next + mahler_term(k + 2, x, half);
      literal.record(gap_lower <= next, [&] {
        return json{{"k", k}, {"q", q}, {"gap_at_least", to_string(gap_lower)},
                    {"next_term", to_string(next)}};
      });
      previous = partial;
    }
  }

  const auto f1 = mahler_F(1.0, {half, 1e-12});
  const bool f1_ok = std::abs(f1.value - 2.2714929) <= 1e-6;

  Sweep fd;
  const double h = 1e-4;
  for (double q : {1.0, 2.0, 5.0, 10.0}) {
    const double derivative = (mahler_F(q + h).value - mahler_F(q - h).value) / (2 * h);
    const double target = mahler_F(q / 2).value;
    const double rel = std::abs(derivative - target) / target;
    fd.record(rel <= 1e-6, [&] { return json{{"q", q}, {"relative_error", rel}}; });
  }

  return {
      make_record("stage_bound_is_mahler_partial",
                  "sum_{j=0..k} (q+1)^j/(j! 2^{j(j-1)/2}) equals the degree-k Taylor "
                  "polynomial of F at q+1, alpha = 1/2",
                  params, partial_eq.holds, partial_eq.witness, false, partial_eq.details()),
      make_record("stage_bound_statement_vs_proof_display",
                  "sum from j=0 = 1 + sum from j=1 (the two displayed forms of the stage bound)",
                  params, display.holds, display.witness, false, display.details()),
      make_record("mahler_partial_sums_converge",
                  "partial sums strictly increase in k; F(q+1) - partial = tail with "
                  "t_{k+1} <= tail <= t_{k+1} F(alpha^{k+1}(q+1))",
                  params, converge.holds, converge.witness, false, converge.details()),
      make_record("mahler_gap_within_next_term",
                  "F(q+1) - partial_k <= t_{k+1} (false whenever t_{k+2} > 0: the tail has "
                  "positive terms)",
                  params, literal.holds, literal.witness, true, literal.details()),
      make_record("mahler_value_at_one", "F(1) = 2.2714929 +- 1e-6 at alpha = 1/2",
                  {{"alpha", "1/2"}, {"tol", 1e-12}}, f1_ok,
                  json{{"F(1)", f1.value}}, false, json{{"F(1)", f1.value}}),
      make_record("mahler_functional_equation",
                  "|(F(q+h) - F(q-h))/(2h) - F(q/2)| / F(q/2) <= 1e-6, h = 1e-4",
                  {{"q", {1, 2, 5, 10}}, {"h", h}}, fd.holds, fd.witness, false, fd.details()),
  };
}

std::vector<CheckRecord> group_checks(const SuiteConfig& c) {
  Rng rng(c.seed);
  const std::uint64_t primes[] = {2, 3, 5};
  const std::uint64_t orders[] = {0, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 25, 30, 60};

  Sweep additivity;
  for (unsigned trial = 0; trial < 1000; ++trial) {
    std::vector<std::uint64_t> fa, fb;
    for (auto* f : {&fa, &fb}) {
      const auto len = rng.below(4);
      for (std::uint64_t i = 0; i < len; ++i) f->push_back(orders[rng.below(std::size(orders))]);
    }
    const GroupDesc a(fa), b(fb);
    std::vector<std::uint64_t> combined = fb;
    combined.insert(combined.end(), fa.begin(), fa.end());
    std::reverse(combined.begin(), combined.end());
    for (auto p : primes) {
      const bool ok = ell_p(direct_sum(a, b), p) == ell_p(a, p) + ell_p(b, p) &&
                      ell_p(GroupDesc(combined), p) == ell_p(direct_sum(b, a), p);
      additivity.record(ok, [&] {
        return json{{"A", a.to_string()}, {"B", b.to_string()}, {"p", p}};
      });
    }
  }

  Sweep triples;
  const std::uint64_t cyclic_orders[] = {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24, 25, 27, 30};
  for (unsigned trial = 0; trial < c.triple_trials; ++trial) {
    const std::uint64_t p = primes[rng.below(3)];
    const std::uint64_t a = cyclic_orders[rng.below(std::size(cyclic_orders))];
    std::vector<std::uint64_t> b, m;
    std::uint64_t card = 1;
    const auto summands = 1 + rng.below(3);
    for (std::uint64_t i = 0; i < summands; ++i) {
      const std::uint64_t bi = cyclic_orders[1 + rng.below(std::size(cyclic_orders) - 1)];
      if (card * bi > 2000) break;
      card *= bi;
      b.push_back(bi);
      const std::uint64_t g = std::gcd(a, bi);
      m.push_back((bi / g) * rng.below(g));
    }
    const auto out = check_exact_triple(a, b, m, p);
    triples.record(out.holds, [&] {
      return json{{"a", a}, {"b", b}, {"multipliers", m}, {"p", p}, {"ell_a", out.ell_a},
                  {"ell_b", out.ell_b}, {"ell_c", out.ell_c}};
    });
  }
  return {
      make_record("ell_p_additivity",
                  "ell_p(A + B) = ell_p(A) + ell_p(B); ell_p ignores the order of factors",
                  {{"trials", 1000}, {"p", {2, 3, 5}}, {"seed", c.seed}}, additivity.holds,
                  additivity.witness, false, additivity.details()),
      make_record("exact_triples",
                  "for Z/a -> B -> B/im exact at B: ell_p(B) <= ell_p(Z/a) + ell_p(B/im)",
                  {{"trials", c.triple_trials}, {"p", {2, 3, 5}}, {"seed", c.seed}},
                  triples.holds, triples.witness, false, triples.details()),
  };
}

// ---------------------------------------------------------------------------
// Checks against the stable and unstable tables.

std::vector<CheckRecord> route_checks(const SuiteConfig& c, const StableStemsTable& stable) {
  const std::size_t q_max = min_size(min_size(c.route_q_max, c.trunc_degree), stable.q_max());
  BoundPropagator propagator(stable);
  Sweep dominated;
  json deltas = json::array();
  std::map<std::string, std::size_t> histogram;
  for (unsigned k = 0; k <= c.route_k_max; ++k)
    for (unsigned n = 1; n <= c.route_n_max; ++n) {
      const auto series = unstable_bound_series(k, n, q_max, stable);
      for (std::size_t q = 0; q <= q_max; ++q) {
        const Rational route1(propagator.value(k, n, static_cast<long>(q)));
        const Rational delta = series[q] - route1;
        histogram[(q == 0 ? "q=0:" : "q>=1:") + to_string(delta)] += 1;
        if (delta != 0)
          deltas.push_back({{"k", k}, {"n", n}, {"q", q}, {"delta", to_string(delta)}});
        dominated.record(delta >= 0, [&] {
          return json{{"k", k}, {"n", n}, {"q", q}, {"propagator", to_string(route1)},
                      {"series", to_string(series[q])}};
        });
      }
    }
  json details = dominated.details();
  details["delta_histogram"] = histogram;
  details["nonzero_deltas"] = deltas;

  // Propagated values obey the EHP inequality with the doubled sphere one
  // Goodwillie stage lower, once the constant term 1 absorbs the q = n-1 case.
  Sweep shifted, same_k;
  for (unsigned k = 0; k + 1 <= c.route_k_max; ++k)
    for (unsigned n = 1; n <= c.route_n_max; ++n) {
      const auto lhs = propagator.series(k + 1, n, q_max);
      const auto rhs_s = propagator.series(k + 1, n + 1, q_max) +
                         propagator.series(k, 2 * n + 1, q_max).shifted(n - 1);
      const auto cmp = coeff_le(lhs, rhs_s);
      shifted.record(cmp.holds, [&] {
        json w = violation_json(*cmp.witness);
        w["k"] = k;
        w["n"] = n;
        return w;
      });
    }
  for (unsigned k = 0; k <= c.route_k_max; ++k)
    for (unsigned n = 1; n <= c.route_n_max; ++n) {
      const auto lhs = propagator.series(k, n, q_max);
      const auto rhs_s = propagator.series(k, n + 1, q_max) +
                         propagator.series(k, 2 * n + 1, q_max).shifted(n - 1);
      const auto cmp = coeff_le(lhs, rhs_s);
      same_k.record(cmp.holds, [&] {
        json w = violation_json(*cmp.witness);
        w["k"] = k;
        w["n"] = n;
        return w;
      });
    }
  const json params = {{"k", {0, c.route_k_max}}, {"n", {1, c.route_n_max}}, {"q", {0, q_max}}};
  return {
      make_record("two_route_agreement",
                  "unrolled EHP bound B(k,n,q) <= coefficient q of A(k,n;t) L^S(t); deltas "
                  "recorded",
                  params, dominated.holds, dominated.witness, false, details),
      make_record("propagator_recursion",
                  "L_B(k+1,n) <= L_B(k+1,n+1) + t^{n-1} L_B(k,2n+1) with L_B = 1 + sum B t^q",
                  params, shifted.holds, shifted.witness, false, shifted.details()),
      make_record("propagator_recursion_same_k",
                  "L_B(k,n) <= L_B(k,n+1) + t^{n-1} L_B(k,2n+1) (same k in all three terms)",
                  params, same_k.holds, same_k.witness, true, same_k.details()),
  };
}

CheckRecord stage_bound_chain_sweep(const SuiteConfig& c, const StableStemsTable& stable) {
  const std::size_t Q = min_size(c.trunc_degree, stable.q_max());
  Sweep sweep;
  for (unsigned k = 0; k <= c.chain_k_max; ++k)
    for (unsigned n = 3; n <= c.chain_n_max; ++n) {
      const auto r = check_stage_bound_chain(k, n, Q, stable);
      sweep.record(r.holds, [&] { return r.witness; });
    }
  return make_record("stage_bound_chain",
                     "coefficient q >= 1 of A(k,n;t) L^S(t) <= ell_hat(q) * sum_{j=0..k} "
                     "(q+1)^j/(j! 2^{j(j-1)/2})",
                     {{"k", {0, c.chain_k_max}}, {"n", {3, c.chain_n_max}}, {"Q", Q}}, sweep.holds,
                     sweep.witness, false, sweep.details());
}

std::vector<CheckRecord> ground_truth_checks(const SuiteConfig& c, const StableStemsTable& stable,
                                             const UnstableTable& unstable) {
  const std::size_t Q = min_size(c.trunc_degree, stable.q_max());
  unsigned n_max = 2;
  for (const auto& [key, g] : unstable.entries()) n_max = std::max(n_max, key.first);

  Sweep dom;
  json compared = json::object();
  for (unsigned k = 0; k <= c.ground_truth_k_max; ++k) {
    const auto r = check_ground_truth(unstable, stable, k, 2, n_max, Q);
    dom.record(r.holds, [&] { return r.witness; });
    compared[std::to_string(k)] = r.details.at("compared");
  }
  json dom_details = dom.details();
  dom_details["compared_per_k"] = compared;

  Sweep stable_match, limit;
  const Rational half(1, 2);
  for (const auto& [key, g] : unstable.entries()) {
    const auto [n, q] = key;
    if (q > stable.q_max()) continue;
    // Freudenthal range: pi_{q+n}(S^n) is already stable.
    if (n >= q + 2) {
      stable_match.record(ell_p(g, 2) == stable.ell(q), [&, n = n, q = q, g = g] {
        return json{{"n", n}, {"q", q}, {"unstable", g.to_string()},
                    {"stable", stable.group(q).to_string()}};
      });
    }
    if (n >= 3) {
      const auto bound = unstable_limit_bound(q, stable);
      limit.record(ell_p(g, 2) <= bound.value, [&, n = n, q = q, g = g] {
        return json{{"n", n}, {"q", q}, {"ell_2", ell_p(g, 2)}, {"bound", bound.value}};
      });
    }
  }
  return {
      make_record("ground_truth_domination",
                  "ell_2(pi_{q+n} S^n) <= coefficient q of A(k,n;t) L^S(t) whenever q+n <= "
                  "(2^k+1)(n-1)",
                  {{"k", {0, c.ground_truth_k_max}}, {"n", {2, n_max}}, {"Q", Q}}, dom.holds,
                  dom.witness, false, dom_details),
      make_record("unstable_matches_stable_in_stable_range",
                  "tables agree: ell_2(pi_{q+n} S^n) = ell_2(pi_q^S) for n >= q+2", {{"Q", Q}},
                  stable_match.holds, stable_match.witness, false, stable_match.details()),
      make_record("ground_truth_limit_bound",
                  "ell_2(pi_{q+n} S^n) <= F(q+1) ell_hat(q) for n >= 3, alpha = 1/2", {{"Q", Q}},
                  limit.holds, limit.witness, false, limit.details()),
  };
}

std::vector<CheckRecord> n_dependent_checks(const SuiteConfig& c, const StableStemsTable& stable,
                                            AEnumCache& a_enum) {
  const std::size_t Q = min_size(c.trunc_degree, stable.q_max());
  Sweep coefficient, stage;
  for (unsigned k = 1; k <= c.inequality_k_max; ++k)
    for (unsigned n = 3; n <= c.inequality_n_max; ++n) {
      const auto& a = a_enum.get(k, n);
      for (unsigned q = 1; q <= c.trunc_degree; ++q) {
        const auto b = n_dependent_bounds(k, n, q);
        coefficient.record(a[q] <= b.coefficient_bound, [&] {
          return json{{"k", k}, {"n", n}, {"q", q}, {"A_q", to_string(a[q])},
                      {"bound", to_string(b.coefficient_bound)}};
        });
      }
    }
  for (unsigned k = 1; k <= c.chain_k_max; ++k)
    for (unsigned n = 3; n <= c.chain_n_max; ++n) {
      const auto series = unstable_bound_series(k, n, Q, stable);
      for (unsigned q = 1; q <= Q; ++q) {
        const Rational bound = Rational(stable.ell_hat(q)) * n_dependent_bounds(k, n, q).stage_bound;
        stage.record(series[q] <= bound, [&] {
          return json{{"k", k}, {"n", n}, {"q", q}, {"series", to_string(series[q])},
                      {"bound", to_string(bound)}};
        });
      }
    }
  return {
      make_record("n_dependent_coefficient_bound_vs_enumeration",
                  "A(k,n;t)_q <= sum_{j=1..k} (q-(n-1)(2^j-1)-1-3j)^{j-1}/((j-1)! 2^{j(j-1)/2}), "
                  "negative bases clamped to 0",
                  {{"k", {1, c.inequality_k_max}}, {"n", {3, c.inequality_n_max}},
                   {"Q", c.trunc_degree}},
                  coefficient.holds, coefficient.witness, true, coefficient.details()),
      make_record("n_dependent_stage_bound_vs_series",
                  "coefficient q of A(k,n;t) L^S(t) <= ell_hat(q) sum_{j=1..k} (q+2-n)^j/(j! "
                  "2^{j(j-1)/2}), negative bases clamped to 0",
                  {{"k", {1, c.chain_k_max}}, {"n", {3, c.chain_n_max}}, {"Q", Q}}, stage.holds,
                  stage.witness, true, stage.details()),
  };
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::informational: return "informational";
  }
  return "unknown";
}

void VerificationReport::add(CheckRecord record) {
  const std::string id = record.check_id;
  if (!records_.emplace(id, std::move(record)).second)
    throw std::logic_error("duplicate check id '" + id + "'");
}

const CheckRecord* VerificationReport::find(const std::string& check_id) const {
  const auto it = records_.find(check_id);
  return it == records_.end() ? nullptr : &it->second;
}

std::vector<const CheckRecord*> VerificationReport::checks() const {
  std::vector<const CheckRecord*> out;
  for (const auto& [id, r] : records_) out.push_back(&r);
  return out;
}

std::size_t VerificationReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      records_.begin(), records_.end(), [&](const auto& kv) { return kv.second.status == status; }));
}

nlohmann::json VerificationReport::to_json() const {
  json checks = json::array();
  for (const auto& [id, r] : records_) {
    checks.push_back({{"check_id", r.check_id},
                      {"statement", r.statement},
                      {"parameters", r.parameters},
                      {"status", to_string(r.status)},
                      {"holds", r.holds},
                      {"witness", r.witness},
                      {"details", r.details}});
  }
  return {{"summary",
           {{"pass", count(CheckStatus::pass)},
            {"fail", count(CheckStatus::fail)},
            {"informational", count(CheckStatus::informational)}}},
          {"checks", std::move(checks)}};
}

CheckRecord check_a_recursion(unsigned k_max, unsigned n_max, std::size_t trunc_degree,
                              std::optional<Perturbation> perturb) {
  AEnumCache a_enum(trunc_degree);
  Sweep sweep;
  for (unsigned k = 0; k < k_max; ++k)
    for (unsigned n = 1; n <= n_max; ++n) {
      TruncatedSeries lhs = a_enum.get(k + 1, n);
      if (perturb && perturb->k == k && perturb->n == n)
        lhs = lhs.with_coeff(perturb->degree, lhs[perturb->degree] + 1);
      const auto rhs = a_enum.get(k + 1, n + 1) + a_enum.get(k, 2 * n + 1).shifted(n - 1);
      const auto cmp = coeff_eq(lhs, rhs);
      sweep.record(cmp.holds, [&] {
        json w = violation_json(*cmp.witness);
        w["k"] = k;
        w["n"] = n;
        return w;
      });
    }
  json params = {{"k", {0, k_max == 0 ? 0 : k_max - 1}}, {"n", {1, n_max}}, {"Q", trunc_degree}};
  if (perturb) params["perturbation"] = {{"k", perturb->k}, {"n", perturb->n}, {"degree", perturb->degree}};
  return make_record("a_recursion", "A(k+1,n;t) = A(k+1,n+1;t) + t^{n-1} A(k,2n+1;t)",
                     std::move(params), sweep.holds, sweep.witness, false, sweep.details());
}

CheckRecord check_a_le_steenrod_quotient(unsigned k, unsigned n, std::size_t trunc_degree) {
  if (k == 0) throw std::invalid_argument("check_a_le_steenrod_quotient: k must be >= 1");
  const auto lhs = series_A_enum(k, n, trunc_degree);
  const auto rhs = TruncatedSeries::one(trunc_degree) + p_M0_Mk(k, trunc_degree);
  const auto cmp = coeff_le(lhs, rhs);
  json w = nullptr;
  if (!cmp.holds) {
    w = violation_json(*cmp.witness);
    w["k"] = k;
    w["n"] = n;
  }
  return make_record("a_le_steenrod_quotient", "A(k,n;t) <= 1 + P(M_0/M_k;t)",
                     {{"k", k}, {"n", n}, {"Q", trunc_degree}}, cmp.holds, w, n < 3);
}

CheckRecord check_a_le_coefficient_bound(unsigned k, unsigned n, std::size_t trunc_degree) {
  if (k == 0) throw std::invalid_argument("check_a_le_coefficient_bound: k must be >= 1");
  const auto a = series_A_enum(k, n, trunc_degree);
  Sweep sweep;
  for (std::size_t q = 1; q <= trunc_degree; ++q) {
    const Rational bound = a_coefficient_bound(k, static_cast<unsigned>(q));
    sweep.record(a[q] <= bound, [&] {
      return json{{"k", k}, {"n", n}, {"degree", q}, {"lhs", to_string(a[q])},
                  {"rhs", to_string(bound)}};
    });
  }
  return make_record("a_le_coefficient_bound",
                     "A(k,n;t)_q <= sum_{j=1..k} q^{j-1}/((j-1)! 2^{j(j-1)/2}), q >= 1",
                     {{"k", k}, {"n", n}, {"Q", trunc_degree}}, sweep.holds, sweep.witness, n < 3);
}

TruncatedSeries unstable_bound_series(unsigned k, unsigned n, std::size_t trunc_degree,
                                      const StableStemsTable& table) {
  return mul(series_A_enum(k, n, trunc_degree), table.L_S_series(trunc_degree));
}

CheckRecord check_stage_bound_chain(unsigned k, unsigned n, std::size_t trunc_degree,
                                    const StableStemsTable& table) {
  const auto series = unstable_bound_series(k, n, trunc_degree, table);
  Sweep sweep;
  for (std::size_t q = 1; q <= trunc_degree; ++q) {
    const Rational bound =
        Rational(table.ell_hat(q)) * tower_stage_bound(k, static_cast<unsigned>(q));
    sweep.record(series[q] <= bound, [&] {
      return json{{"k", k}, {"n", n}, {"degree", q}, {"lhs", to_string(series[q])},
                  {"rhs", to_string(bound)}};
    });
  }
  return make_record("stage_bound_chain",
                     "coefficient q >= 1 of A(k,n;t) L^S(t) <= ell_hat(q) * stage bound",
                     {{"k", k}, {"n", n}, {"Q", trunc_degree}}, sweep.holds, sweep.witness,
                     false, sweep.details());
}

BigInt BoundPropagator::value(unsigned k, unsigned n, long q) {
  if (n == 0) throw std::invalid_argument("BoundPropagator: n must be >= 1");
  if (q < 0) return 0;
  const auto uq = static_cast<std::size_t>(q);
  if (uq > table_.q_max())
    throw std::out_of_range("BoundPropagator: stem " + std::to_string(q) +
                            " beyond table coverage " + std::to_string(table_.q_max()));
  if (k == 0 || static_cast<long>(n) >= q + 2) return table_.ell(uq);

  const auto key = std::make_tuple(k, n, q);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  BigInt result = value(k, n + 1, q);
  if (q == static_cast<long>(n) - 1)
    result += 1;  // the Hopf invariant class contributes at most one factor of 2
  else
    result += value(k - 1, 2 * n + 1, q - (static_cast<long>(n) - 1));
  memo_.emplace(key, result);
  return result;
}

TruncatedSeries BoundPropagator::series(unsigned k, unsigned n, std::size_t trunc_degree) {
  std::vector<Rational> c(trunc_degree + 1);
  c[0] = 1;
  for (std::size_t q = 1; q <= trunc_degree; ++q) c[q] = Rational(value(k, n, static_cast<long>(q)));
  return TruncatedSeries(trunc_degree, std::move(c));
}

CheckRecord check_ground_truth(const UnstableTable& unstable, const StableStemsTable& stable,
                               unsigned k, unsigned n_min, unsigned n_max,
                               std::size_t trunc_degree) {
  if (n_min < 2) throw std::invalid_argument("check_ground_truth: n_min must be >= 2");
  std::map<unsigned, TruncatedSeries> bound_for_n;
  Sweep sweep;
  json compared = json::array();
  for (const auto& [key, g] : unstable.entries()) {
    const auto [n, q] = key;
    if (n < n_min || n > n_max || q > trunc_degree || q > stable.q_max()) continue;
    if (q + n > stable_range(k, n)) continue;
    auto it = bound_for_n.find(n);
    if (it == bound_for_n.end())
      it = bound_for_n.emplace(n, unstable_bound_series(k, n, trunc_degree, stable)).first;
    const unsigned truth = ell_p(g, 2);
    const Rational& bound = it->second[q];
    compared.push_back({n, q});
    sweep.record(Rational(truth) <= bound, [&, n = n, q = q, g = g] {
      return json{{"k", k}, {"n", n}, {"q", q}, {"group", g.to_string()}, {"ell_2", truth},
                  {"bound", to_string(bound)}};
    });
  }
  json details = sweep.details();
  details["compared"] = compared.size();
  return make_record("ground_truth_domination",
                     "ell_2(pi_{q+n} S^n) <= coefficient q of A(k,n;t) L^S(t) in the stable range "
                     "of the 2^k-th stage",
                     {{"k", k}, {"n", {n_min, n_max}}, {"Q", trunc_degree}}, sweep.holds,
                     sweep.witness, false, std::move(details));
}

void run_table_free_checks(const SuiteConfig& c, VerificationReport& report) {
  AEnumCache a_enum(c.trunc_degree);
  report.add(closed_form_vs_enumeration(c, a_enum));
  report.add(verbatim_formula_vs_enumeration(c, a_enum));
  report.add(summand_lowest_degree(c));
  for (auto& r : welcher_checks(c)) report.add(std::move(r));
  report.add(params_bijection(c));
  report.add(enumeration_invariants(c, a_enum));
  report.add(check_a_recursion(c.recursion_k_max, c.recursion_n_max, c.trunc_degree));
  report.add(inequality_sweep(c, false, true));
  report.add(inequality_sweep(c, true, true));
  report.add(inequality_sweep(c, false, false));
  report.add(inequality_sweep(c, true, false));
  report.add(coefficient_bound_proof_chain(c));
  report.add(simplex_chain(c));
  report.add(integral_comparison(c));
  for (auto& r : mahler_checks(c)) report.add(std::move(r));
  for (auto& r : group_checks(c)) report.add(std::move(r));
}

void run_table_checks(const SuiteConfig& c, const StableStemsTable& stable,
                      const UnstableTable& unstable, VerificationReport& report) {
  AEnumCache a_enum(c.trunc_degree);
  report.add(stage_bound_chain_sweep(c, stable));
  for (auto& r : route_checks(c, stable)) report.add(std::move(r));
  for (auto& r : ground_truth_checks(c, stable, unstable)) report.add(std::move(r));
  for (auto& r : n_dependent_checks(c, stable, a_enum)) report.add(std::move(r));
}

VerificationReport run_suite(const SuiteConfig& config) {
  const auto stable = load_stable_table(config.stable_table);
  const auto unstable = load_unstable_table(config.unstable_table);
  VerificationReport report;
  run_table_free_checks(config, report);
  run_table_checks(config, stable, unstable, report);
  return report;
}

}  // namespace ehplab
