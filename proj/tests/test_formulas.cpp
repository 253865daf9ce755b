#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace maxcross;

namespace {

using oracle::choose;

// K_n with diagonals of lengths 1..k-1 deleted, summed length by length.
std::int64_t star_by_deletion(std::int64_t n, std::int64_t k) {
  std::int64_t c = choose(n, 4);
  for (std::int64_t l = 2; l < k; ++l) c -= n * (l - 1) * (n - 2 * l);
  return c;
}

// The even-even bound as the star of degree d+1 minus the crossings of the
// removed matching, everything scaled by 4 to stay integral.
std::int64_t star_like_by_removal(std::int64_t n, std::int64_t d) {
  std::int64_t k = (n - d) / 2, g = std::gcd(n, k);
  std::int64_t star4 = 4 * star_by_deletion(n, k);
  std::int64_t removed4 = (n / g) % 2 == 0 ? n * (k - 1) * (2 * n - 4 * k + 1)
                                           : (2 * n - 4 * k + 1) * (k * n - n + g) - 4 * g;
  EXPECT_EQ((star4 - removed4) % 4, 0) << n << ' ' << d;
  return (star4 - removed4) / 4;
}

}  // namespace

TEST(Formulas, OddSumAgainstStepwiseDeletion) {
  for (int n = 3; n <= 200; ++n)
    for (int d = 2; d <= n - 1; ++d) {
      if ((n + d) % 2 == 0) continue;
      ASSERT_EQ(exact_odd(n, d), star_by_deletion(n, (n - d + 1) / 2)) << n << ' ' << d;
    }
}

TEST(Formulas, EvenEvenAgainstRemovalCount) {
  for (int n = 4; n <= 200; n += 2)
    for (int d = 2; d <= n - 2; d += 2) ASSERT_EQ(lower_bound_even(n, d), star_like_by_removal(n, d)) << n << ' ' << d;
}

TEST(Formulas, PublishedValues) {
  EXPECT_EQ(exact_odd(10, 7), 210);
  EXPECT_EQ(exact_odd(9, 4), 81);
  EXPECT_EQ(exact_odd(10, 5), 150);
  EXPECT_EQ(exact_odd(10, 3), 70);
  EXPECT_EQ(lower_bound_even(8, 4), 52);
  EXPECT_EQ(lower_bound_even(10, 4), 105);
  EXPECT_EQ(lower_bound_even(10, 2), 32);
  EXPECT_EQ(lower_bound_even(10, 6), 173);  // printed as 133
}

TEST(Formulas, Specializations) {
  for (int n = 4; n <= 200; ++n) {
    EXPECT_EQ(exact_complete(n), choose(n, 4));
    if (n % 2 == 1) {
      // d = 2 on odd n is the cycle; d = n - 1 the complete graph
      EXPECT_EQ(exact_odd(n, 2), exact_cycle(n));
      EXPECT_EQ(exact_cycle(n), n * (n - 3) / 2);
    } else {
      EXPECT_EQ(exact_odd(n, n - 1), choose(n, 4));
      EXPECT_EQ(exact_r_n_nminus2(n), choose(n, 4));
      EXPECT_EQ(exact_r_n_2_even(n), (n * (2 * n - 7)) / 4);
      EXPECT_EQ(lower_bound_even(n, 2), exact_r_n_2_even(n)) << n;
      if (n >= 6) EXPECT_EQ(lower_bound_even(n, n - 2), choose(n, 4)) << n;
      EXPECT_EQ(exact_cycle(n), n * (n - 4) / 2 + 1);
    }
  }
  EXPECT_EQ(exact_r_n_2_even(4), 1);
}

TEST(Formulas, ThrackleAndAccountingBounds) {
  for (int n = 4; n <= 120; ++n)
    for (int d = 2; d <= n - 1; ++d) {
      if (!feasible(n, d)) continue;
      std::int64_t m = std::int64_t{n} * d / 2;
      EXPECT_EQ(thrackle_upper(n, d), choose(m, 2) - n * choose(d, 2));
      EXPECT_EQ(min_noncrossing_pairs(n, d), std::int64_t{n} * d * (d - 1) * (d - 2) / 6);
      if ((n + d) % 2 == 1) {
        // thrackle bound minus half the minimized accounting is attained
        EXPECT_EQ(2 * exact_odd(n, d), 2 * thrackle_upper(n, d) - min_noncrossing_pairs(n, d));
      }
    }
}

TEST(Formulas, CFunctionNonnegative) {
  for (int d = 3; d <= 60; ++d)
    for (int s = 1; s <= max_endvertex_type(d); ++s) {
      std::int64_t direct = std::int64_t{s} * (d - s - 1) * (d - 2 * ((d - 1) / 2 - s + 1));
      for (int i = 1; i < s; ++i) direct -= 2 * i * (d - i - 1);
      EXPECT_EQ(c_function(s, d), direct);
      EXPECT_GT(c_function(s, d), 0) << s << ' ' << d;
    }
  EXPECT_THROW(c_function(3, 6), ArgumentError);
}

TEST(Formulas, RemovalCount) {
  EXPECT_EQ(removal_count(10, 2), 60);
  EXPECT_EQ(removal_count(10, 1), 0);
  EXPECT_THROW(removal_count(10, 6), ArgumentError);
}

TEST(Formulas, Preconditions) {
  EXPECT_THROW(exact_odd(8, 4), ArgumentError);
  EXPECT_THROW(exact_odd(7, 3), ArgumentError);
  EXPECT_THROW(lower_bound_even(9, 4), ArgumentError);
  EXPECT_THROW(lower_bound_even(8, 8), ArgumentError);
  EXPECT_THROW(exact_r_n_2_even(7), ArgumentError);
  EXPECT_THROW(best_known(7, 3), ArgumentError);
  EXPECT_THROW(exact_odd(20001, 2), ArgumentError);
}

TEST(BestKnown, Classification) {
  BoundReport odd = best_known(10, 7);
  EXPECT_TRUE(odd.exact);
  EXPECT_EQ(odd.lower, 210);
  EXPECT_EQ(odd.upper, 210);

  BoundReport cyc = best_known(8, 2);
  EXPECT_TRUE(cyc.exact);
  EXPECT_EQ(cyc.value(), 18);

  BoundReport near_complete = best_known(8, 6);
  EXPECT_TRUE(near_complete.exact);
  EXPECT_EQ(near_complete.value(), 70);

  BoundReport open = best_known(8, 4);
  EXPECT_FALSE(open.exact);
  EXPECT_TRUE(open.conjectured);
  EXPECT_EQ(open.lower, 52);
  // accounting bound nd(3nd - 2d^2 - 6d + 2)/24 = 56 is below C(8,4) = 70
  EXPECT_EQ(open.upper, 56);

  BoundReport r106 = best_known(10, 6);
  EXPECT_EQ(r106.lower, 173);
  EXPECT_EQ(r106.upper, 185);

  for (int n = 4; n <= 60; n += 2)
    for (int d = 2; d <= n - 2; d += 2) {
      BoundReport r = best_known(n, d);
      EXPECT_LE(r.lower, r.upper);
      EXPECT_LE(r.upper, choose(n, 4));
    }
}
