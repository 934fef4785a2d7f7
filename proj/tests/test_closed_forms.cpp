#include "ehplab/closed_forms.hpp"
#include "ehplab/enumeration.hpp"

#include <gtest/gtest.h>

using namespace ehplab;

namespace {

std::vector<long> ints(const TruncatedSeries& s) {
  std::vector<long> v;
  for (const auto& c : s.coeffs()) v.push_back(c.get_num().get_si());
  return v;
}

}  // namespace

TEST(Welcher, Examples) {
  EXPECT_EQ(ints(welcher_series(1, 5)), (std::vector<long>{0, 0, 1, 1, 1, 1}));
  const auto w2 = ints(welcher_series(2, 9));
  EXPECT_EQ(std::vector<long>(w2.begin() + 6, w2.end()), (std::vector<long>{1, 1, 1, 2}));
  EXPECT_EQ(std::vector<long>(w2.begin(), w2.begin() + 6), std::vector<long>(6, 0));
  const auto w3 = ints(welcher_series(3, 14));
  EXPECT_EQ(w3[14], 1);
  for (int q = 0; q < 14; ++q) EXPECT_EQ(w3[q], 0);
  EXPECT_THROW(welcher_series(0, 5), std::invalid_argument);
}

TEST(PM0Mk, Examples) {
  EXPECT_EQ(p_M0_Mk(1, 5), welcher_series(1, 5));
  EXPECT_EQ(ints(p_M0_Mk(2, 6)), (std::vector<long>{0, 0, 1, 1, 1, 1, 2}));
}

TEST(AClosedForm, Examples) {
  EXPECT_EQ(ints(a_closed_form(1, 3, 5)), (std::vector<long>{1, 0, 1, 1, 1, 1}));
  EXPECT_EQ(a_closed_form(2, 3, 11)[11], 3);
  EXPECT_EQ(ints(a_closed_form(1, 1, 3)), (std::vector<long>{2, 1, 1, 1}));
  EXPECT_EQ(ints(a_closed_form(0, 4, 3)), (std::vector<long>{1, 0, 0, 0}));
  EXPECT_THROW(a_closed_form(1, 0, 3), std::invalid_argument);
}

TEST(AClosedForm, AgreesWithEnumeration) {
  for (unsigned k = 0; k <= 4; ++k)
    for (unsigned n = 1; n <= 8; ++n)
      EXPECT_EQ(a_closed_form(k, n, 40), series_A_enum(k, n, 40)) << k << "," << n;
}

TEST(AClosedForm, VerbatimFormDiffers) {
  // The printed denominator uses 2^j - 1 throughout and omits the empty sequence.
  const auto verbatim = a_closed_form(2, 3, 20, AFormula::verbatim);
  EXPECT_EQ(verbatim[0], 0);
  EXPECT_NE(verbatim, series_A_enum(2, 3, 20));
  // At k = 1 the two denominators coincide, so only the constant term differs.
  EXPECT_EQ(a_closed_form(1, 3, 20, AFormula::verbatim) + TruncatedSeries::one(20),
            series_A_enum(1, 3, 20));
}

TEST(SummandLowestDegree, Examples) {
  EXPECT_EQ(a_summand_lowest_degree(1, 3), 2u);
  EXPECT_EQ(a_summand_lowest_degree(2, 3), 8u);
  EXPECT_EQ(a_summand_lowest_degree(1, 1), 0u);
  EXPECT_EQ(enumerate_I(3, 3, 30).begin()->first, a_summand_lowest_degree(3, 3));
}
