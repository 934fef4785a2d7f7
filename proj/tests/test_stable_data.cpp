#include "ehplab/stable_data.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace ehplab;

namespace {

const std::filesystem::path kData = EHPLAB_TEST_DATA_DIR;

StableStemsTable parse_stable(const std::string& text) {
  std::istringstream in(text);
  return parse_stable_table(in, "inline");
}

std::size_t stable_error_line(const std::string& text) {
  try {
    parse_stable(text);
  } catch (const DataError& e) {
    return e.line();
  }
  return 0;
}

// ell_2 of the 2-primary stable stems, stems 0..62, entered independently of
// the CSV (as log_2 of each group's 2-order).
const std::vector<unsigned> kStableEll2 = {
    0, 1, 1, 3, 0, 0, 1, 4, 2, 3, 1, 3, 0, 0, 2, 6, 2, 4, 4, 4, 3,
    2, 2, 8, 2, 2, 2, 3, 1, 0, 1, 8, 4, 5, 5, 5, 1, 2, 3, 9, 6, 3,
    4, 3, 3, 7, 5, 10, 4, 3, 3, 5, 3, 4, 3, 5, 2, 2, 2, 5, 2, 0, 4};

// ell_2(pi_{q+n} S^n), rows q = 0..13, columns n = 3..8.
const unsigned kUnstableEll2[14][6] = {
    {0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {2, 2, 3, 3, 3, 3},
    {1, 2, 1, 0, 0, 0}, {1, 2, 1, 0, 0, 0}, {0, 3, 1, 1, 1, 1}, {0, 0, 1, 2, 3, 3},
    {1, 1, 1, 4, 3, 4}, {2, 3, 3, 3, 4, 5}, {3, 6, 4, 4, 4, 7}, {4, 7, 5, 5, 4, 4},
    {2, 6, 3, 4, 0, 0}, {1, 5, 2, 1, 1, 2}};

}  // namespace

TEST(GroupDesc, NormalForm) {
  const GroupDesc g({8, 1, 0, 2});
  EXPECT_EQ(g.to_string(), "Z+Z/2+Z/8");
  EXPECT_FALSE(g.is_finite());
  EXPECT_THROW(g.order(), std::domain_error);
  EXPECT_EQ(GroupDesc({2, 4}).order(), 8u);
  EXPECT_EQ(GroupDesc({1}), GroupDesc());
  EXPECT_EQ(GroupDesc().to_string(), "0");
  EXPECT_EQ(direct_sum(GroupDesc::cyclic(4), GroupDesc::cyclic(2)), GroupDesc({2, 4}));
}

TEST(EllP, Examples) {
  EXPECT_EQ(ell_p(GroupDesc::cyclic(24), 2), 3u);
  EXPECT_EQ(ell_p(GroupDesc::integers(), 2), 0u);
  EXPECT_EQ(ell_p(GroupDesc({2, 4}), 2), 3u);
  EXPECT_EQ(ell_p(GroupDesc::cyclic(24), 3), 1u);
  EXPECT_THROW(ell_p(GroupDesc::cyclic(24), 4), std::invalid_argument);
}

TEST(StableTable, Accessors) {
  const auto t = parse_stable("0,0\n1,2\n2,2\n3,8;3\n");
  EXPECT_EQ(t.q_max(), 3u);
  EXPECT_EQ(t.group(3), GroupDesc({3, 8}));
  EXPECT_EQ(t.ell(3), 3u);
  EXPECT_EQ(t.ell_hat(2), 1u);
  EXPECT_EQ(t.ell_hat(3), 3u);
  const auto L = t.L_S_series(3);
  EXPECT_EQ(L, TruncatedSeries::from_coeffs({1, 1, 1, 3}));
  EXPECT_THROW(t.ell(4), std::out_of_range);
  EXPECT_THROW(t.L_S_series(4), std::out_of_range);
}

TEST(StableTable, ParseErrors) {
  EXPECT_EQ(stable_error_line("0,0\n1,2\n3,8\n"), 3u);   // q = 2 missing
  EXPECT_EQ(stable_error_line("0,0\n1,x\n"), 2u);        // non-integer
  EXPECT_EQ(stable_error_line("0,0\n1,1\n"), 2u);        // factor 1
  EXPECT_EQ(stable_error_line("0,0\n1,2,3\n"), 2u);      // field count
  EXPECT_EQ(stable_error_line("0,0\n\n1,2\n"), 2u);      // blank line
  EXPECT_EQ(stable_error_line("1,2\n"), 1u);             // must start at 0
  EXPECT_NO_THROW(parse_stable("0,0\r\n1,2\r\n"));
  try {
    parse_stable("0,0\n1,x\n");
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("inline:2"), std::string::npos);
  }
}

TEST(UnstableTable, ParseErrors) {
  std::istringstream dup("3,1,2\n3,1,2\n");
  EXPECT_THROW(parse_unstable_table(dup, "dup"), DataError);
  std::istringstream zero_n("0,1,2\n");
  EXPECT_THROW(parse_unstable_table(zero_n, "zero"), DataError);
  std::istringstream ok("3,2,2\n3,4,\n");
  const auto t = parse_unstable_table(ok, "ok");
  EXPECT_EQ(t.entries().size(), 2u);
  EXPECT_TRUE(t.entries().at({3, 4}).is_trivial());
}

TEST(ExactTriple, Examples) {
  const auto a = check_exact_triple(2, 4, 2, 2);
  EXPECT_EQ(a.ell_a, 1u);
  EXPECT_EQ(a.ell_b, 2u);
  EXPECT_EQ(a.ell_c, 1u);
  EXPECT_TRUE(a.holds);
  const auto b = check_exact_triple(1, 8, 0, 2);
  EXPECT_EQ(b.ell_a + b.ell_b + b.ell_c, 6u);
  EXPECT_TRUE(b.holds);
  const auto c = check_exact_triple(6, 6, 1, 2);
  EXPECT_EQ(c.ell_b, 1u);
  EXPECT_EQ(c.ell_c, 0u);
  EXPECT_TRUE(c.holds);
  EXPECT_THROW(check_exact_triple(2, 4, 1, 2), std::invalid_argument);  // not a homomorphism
}

TEST(ExactTriple, TwoSummands) {
  const std::vector<std::uint64_t> b = {4, 2};
  const std::vector<std::uint64_t> m = {2, 1};
  const auto r = check_exact_triple(2, b, m, 2);
  EXPECT_EQ(r.ell_b, 3u);
  EXPECT_EQ(r.ell_c, 2u);  // (Z/4 + Z/2)/<(2,1)> = Z/4
  EXPECT_TRUE(r.holds);
}

TEST(ShippedData, StableTranscriptionsAgree) {
  const auto t = load_stable_table(kData / "stable_stems.csv");
  ASSERT_EQ(t.q_max() + 1, kStableEll2.size());
  for (std::size_t q = 0; q <= t.q_max(); ++q) EXPECT_EQ(t.ell(q), kStableEll2[q]) << "stem " << q;
  for (std::size_t q = 0; q <= t.q_max(); ++q)
    for (auto f : t.group(q).factors())
      EXPECT_TRUE(f == 0 || (f & (f - 1)) == 0) << "stem " << q << " is not 2-primary";
}

TEST(ShippedData, UnstableTranscriptionsAgree) {
  const auto t = load_unstable_table(kData / "unstable_groups.csv");
  EXPECT_EQ(t.entries().size(), 14u * 6u);
  for (const auto& [key, g] : t.entries()) {
    const auto [n, q] = key;
    ASSERT_TRUE(n >= 3 && n <= 8 && q <= 13);
    EXPECT_EQ(ell_p(g, 2), kUnstableEll2[q][n - 3]) << "n " << n << " q " << q;
  }
  // pi_n(S^n) = Z and pi_{4n-1}(S^{2n}) contains Z.
  EXPECT_EQ(t.entries().at({4, 0}), GroupDesc::integers());
  EXPECT_FALSE(t.entries().at({4, 3}).is_finite());
  EXPECT_FALSE(t.entries().at({6, 5}).is_finite());
  EXPECT_FALSE(t.entries().at({8, 7}).is_finite());
}

TEST(ShippedData, UnstableAgreesWithStableInFreudenthalRange) {
  const auto s = load_stable_table(kData / "stable_stems.csv");
  const auto u = load_unstable_table(kData / "unstable_groups.csv");
  std::size_t compared = 0;
  for (const auto& [key, g] : u.entries())
    if (key.first >= key.second + 2) {
      EXPECT_EQ(g, s.group(key.second)) << key.first << "," << key.second;
      ++compared;
    }
  EXPECT_EQ(compared, 27u);  // sum over n = 3..8 of (n - 1)
}
