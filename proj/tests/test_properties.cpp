// Randomized algebraic properties with a fixed seed.
#include "ehplab/closed_forms.hpp"
#include "ehplab/enumeration.hpp"
#include "ehplab/power_series.hpp"
#include "ehplab/stable_data.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ehplab;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t Q) {
  std::vector<Rational> c(Q + 1);
  for (auto& x : c) x = Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 4));
  return TruncatedSeries(Q, std::move(c));
}

}  // namespace

TEST(Properties, MulCommutativeAssociativeDistributive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t Q = rng() % 12;
    const auto a = random_series(rng, Q), b = random_series(rng, Q), c = random_series(rng, Q);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * TruncatedSeries::one(Q), a);
  }
}

TEST(Properties, TruncationCommutesWithProduct) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t Q = 1 + rng() % 12;
    const std::size_t R = rng() % (Q + 1);
    const auto a = random_series(rng, Q), b = random_series(rng, Q);
    EXPECT_EQ((a * b).truncated(R), a.truncated(R) * b.truncated(R));
  }
}

TEST(Properties, GeometricInvertsOneMinusMonomial) {
  for (unsigned d = 1; d <= 9; ++d)
    for (std::size_t Q : {0u, 5u, 20u}) {
      const auto one_minus = TruncatedSeries::one(Q) - TruncatedSeries::monomial(d, 1, Q);
      EXPECT_EQ(make_geometric(d, Q) * one_minus, TruncatedSeries::one(Q));
    }
}

TEST(Properties, ClosedFormTruncationCoherent) {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = 1; n <= 6; ++n)
      EXPECT_EQ(a_closed_form(k, n, 50).truncated(17), a_closed_form(k, n, 17));
}

TEST(Properties, EllAdditiveAndOrderFree) {
  std::mt19937_64 rng(13);
  const std::uint64_t pool[] = {0, 2, 3, 4, 6, 8, 9, 12, 16, 27, 32, 45};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint64_t> fa, fb;
    for (int i = rng() % 4; i > 0; --i) fa.push_back(pool[rng() % std::size(pool)]);
    for (int i = rng() % 4; i > 0; --i) fb.push_back(pool[rng() % std::size(pool)]);
    const GroupDesc a(fa), b(fb);
    for (std::uint64_t p : {2u, 3u, 5u})
      EXPECT_EQ(ell_p(direct_sum(a, b), p), ell_p(a, p) + ell_p(b, p));
    std::vector<std::uint64_t> shuffled = fa;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(GroupDesc(shuffled), a);
  }
}

TEST(Properties, UnadmissibleMonotonicity) {
  for (unsigned k = 0; k <= 3; ++k)
    for (unsigned n = 1; n <= 6; ++n) {
      EXPECT_TRUE(coeff_le(series_A_enum(k, n + 1, 30), series_A_enum(k, n, 30)));
      EXPECT_TRUE(coeff_le(series_A_enum(k, n, 30), series_A_enum(k + 1, n, 30)));
    }
}
