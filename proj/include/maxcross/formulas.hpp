#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxcross/errors.hpp"
#include "maxcross/graph.hpp"

namespace maxcross {

namespace detail {

inline constexpr int kFormulaMaxOrder = 10000;

// Division that must be exact; a remainder means a mistranscribed formula.
inline std::int64_t exact_div(std::int64_t numerator, std::int64_t denominator) {
  if (numerator % denominator != 0)
    throw std::logic_error("formula value " + std::to_string(numerator) + " not divisible by " +
                           std::to_string(denominator));
  return numerator / denominator;
}

inline void require_class(int n, int d) {
  require(n <= kFormulaMaxOrder, "order too large for 64-bit evaluation");
  require(feasible(n, d), "no d-regular graph of order n exists (n and d both odd)");
}

inline std::int64_t binomial4(std::int64_t n) { return n * (n - 1) * (n - 2) * (n - 3) / 24; }

// nd(3nd - 2d^2 - 6d + 2)/24 without the parity precondition. Integral for
// every feasible (n, d).
inline std::int64_t odd_sum_formula(std::int64_t n, std::int64_t d) {
  return exact_div(n * d * (3 * n * d - 2 * d * d - 6 * d + 2), 24);
}

}  // namespace detail

/// Maximum rectilinear crossing number of R(n,d) for n + d odd.
inline std::int64_t exact_odd(int n, int d) {
  detail::require_class(n, d);
  detail::require((n + d) % 2 == 1, "exact_odd needs n + d odd");
  return detail::odd_sum_formula(n, d);
}

/// Crossings of the star-like drawing for n, d even.
inline std::int64_t lower_bound_even(int n, int d) {
  detail::require_class(n, d);
  detail::require(n % 2 == 0 && d % 2 == 0 && d <= n - 2, "lower_bound_even needs n, d even, d <= n-2");
  const std::int64_t nn = n, dd = d;
  const std::int64_t k = (nn - dd) / 2;
  const std::int64_t g = std::gcd(nn, k);
  const std::int64_t base = nn * dd * (3 * nn * dd - 2 * dd * dd - 6 * dd - 1);
  if ((nn / g) % 2 == 0) return detail::exact_div(base, 24);
  // base/24 - g(2d-3)/4 over the common denominator 24
  return detail::exact_div(base - 6 * g * (2 * dd - 3), 24);
}

/// Maximum rectilinear crossing number of the cycle C_n.
inline std::int64_t exact_cycle(int n) {
  detail::require(n >= 3 && n <= detail::kFormulaMaxOrder, "cycle needs n >= 3");
  const std::int64_t nn = n;
  if (nn % 2 == 1) return detail::exact_div(nn * (nn - 3), 2);
  return detail::exact_div(nn * (nn - 4), 2) + 1;
}

/// R(n,2) for even n: floor(n(2n-7)/4).
inline std::int64_t exact_r_n_2_even(int n) {
  detail::require(n >= 4 && n % 2 == 0 && n <= detail::kFormulaMaxOrder, "exact_r_n_2_even needs even n >= 4");
  const std::int64_t nn = n;
  return nn * (2 * nn - 7) / 4;  // positive for n >= 4, so truncation is floor
}

inline std::int64_t exact_complete(int n) {
  detail::require(n >= 4 && n <= detail::kFormulaMaxOrder, "exact_complete needs n >= 4");
  return detail::binomial4(n);
}

/// R(n, n-2) for even n: every 4-tuple carries at most one crossing.
inline std::int64_t exact_r_n_nminus2(int n) {
  detail::require(n >= 4 && n % 2 == 0 && n <= detail::kFormulaMaxOrder, "exact_r_n_nminus2 needs even n >= 4");
  return detail::binomial4(n);
}

/// Number of non-adjacent edge pairs: (1/2)(nd/2)(nd/2 - 2d + 1).
inline std::int64_t thrackle_upper(int n, int d) {
  detail::require_class(n, d);
  const std::int64_t nn = n, dd = d;
  return detail::exact_div(nn * dd * (3 * nn * dd - 12 * dd + 6), 24);
}

/// Crossings lost when all length-k diagonals are deleted from convex K_n
/// already stripped of every shorter diagonal.
inline std::int64_t removal_count(int n, int k) {
  detail::require(n >= 3 && n <= detail::kFormulaMaxOrder, "removal_count needs n >= 3");
  detail::require(k >= 1 && k <= n / 2, "removal_count needs 1 <= k <= n/2");
  const std::int64_t nn = n, kk = k;
  return nn * (kk - 1) * (nn - 2 * kk);
}

/// Minimum of the edge-type accounting value M: nd(d-1)(d-2)/6.
inline std::int64_t min_noncrossing_pairs(int n, int d) {
  detail::require_class(n, d);
  const std::int64_t nn = n, dd = d;
  return detail::exact_div(nn * dd * (dd - 1) * (dd - 2), 6);
}

inline int max_endvertex_type(int d) { return (d - 1) / 2; }

/// s(d-s-1)(d - 2(D-s+1)) - 2 sum_{i=1}^{s-1} i(d-i-1), D = floor((d-1)/2).
inline std::int64_t c_function(int s, int d) {
  detail::require(d >= 1 && d <= detail::kFormulaMaxOrder, "c_function needs d >= 1");
  const int big_d = max_endvertex_type(d);
  detail::require(s >= 0 && s <= big_d, "c_function needs 0 <= s <= floor((d-1)/2)");
  const std::int64_t ss = s, dd = d;
  std::int64_t tail = 0;
  for (std::int64_t i = 1; i < ss; ++i) tail += i * (dd - i - 1);
  return ss * (dd - ss - 1) * (dd - 2 * (big_d - ss + 1)) - 2 * tail;
}

/// Best bounds known for R(n,d).
struct BoundReport {
  int n = 0;
  int d = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool exact = false;        // proven lower == upper
  bool conjectured = false;  // lower believed sharp but unproven
  std::vector<std::string> provenance;

  std::int64_t value() const { return lower; }
};

inline BoundReport best_known(int n, int d) {
  detail::require_class(n, d);
  BoundReport r{n, d, 0, 0, false, false, {}};
  auto set_exact = [&](std::int64_t v) {
    r.lower = r.upper = v;
    r.exact = true;
  };
  if ((n + d) % 2 == 1) {
    set_exact(exact_odd(n, d));
    r.provenance = {"generalized-star-construction", "edge-type-accounting-upper"};
  } else if (d == 2) {
    set_exact(exact_r_n_2_even(n));
    r.provenance = {"star-like-construction", "even-cycle-edge-bound"};
  } else if (d == n - 2) {
    set_exact(exact_r_n_nminus2(n));
    r.provenance = {"star-like-construction", "four-tuple-bound"};
  } else {
    r.lower = lower_bound_even(n, d);
    const std::int64_t accounting = detail::odd_sum_formula(n, d);
    const std::int64_t tuples = detail::binomial4(n);
    r.upper = std::min(accounting, tuples);
    r.conjectured = true;
    r.provenance = {"star-like-construction",
                    accounting <= tuples ? "edge-type-accounting-upper" : "four-tuple-bound",
                    "conjectured-sharp"};
  }
  return r;
}

}  // namespace maxcross
