#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permarith/core.hpp"

namespace permarith {

// Derived sums of a permutation of {1..2k-1}:
//   alpha = p_1 + ... + p_{k-1},   beta = p_{k+1} + ... + p_{2k-1}
//   U = {(k-2)*alpha} u {alpha - p_i : i <= k-1}     (always k elements)
//   V = {(k-2)*beta}  u {beta - p_i  : i >= k+1}
//   max_lcm = max lcm(a, b) over a in U, b in V.
struct SumProfile {
  int k = 0;
  Value alpha = 0;
  Value beta = 0;
  std::vector<Value> U;  // sorted ascending
  std::vector<Value> V;
  Value max_lcm = 0;
};

// Requires p of odd length 2k-1 >= 5.
SumProfile sum_profile(const Permutation& p);

// Exact max of SumProfile::max_lcm over all of S_{2k-1}, by enumeration.
// Supported for k <= 5 (S_9); larger k is refused.
Value max_profile_lcm(int k);

// Closed form 9(k-2)(k^2-k)^2 / 4, an upper bound on max_profile_lcm(k).
// Always an exact integer since k^2-k is even.
Value profile_lcm_bound(int k);

// Closed form (k-1)(3k-4)/2: every shorter permutation admits a 2-additive
// avoider of length k (the staircase), so the threshold f(k,2) is at least
// this. Exact integer.
Value f2_lower_bound(int k);

// (2/k) * (e/(k-1))^(k-1) * n^(k-1): upper bound on the minimum number of
// ell-additive length-k subsequences over S_n.
double min_count_upper_bound(int k, double n);

// n / (f*(ln n - ln f + 2)) - f/(ln f - 4) + 1, valid once the pattern
// threshold f is known. Requires f >= 55 (so ln f > 4) and n > f/e^2; the
// bound is only meaningful for large n and may be negative before that.
double min_count_lower_bound(double n, double f);

// Monotone (k=3, l=2) count bounds: n/(18(ln n - ln 18 + 2)) - 6 and
// n^2/18 + 7n/6.
double monotone_count_lower_bound(double n);
double monotone_count_upper_bound(double n);

// (a^2+5-4a)/(4a^2) * n^2 + (a+4)/(2a) * n: counts of monotone 2-additive
// triples in the two-run permutation are at most this. Minimal at a=3, where
// it equals monotone_count_upper_bound(n).
double two_run_count_bound(double n, double a);

struct BoundReport {
  int k = 0;
  Value ell = 2;
  std::optional<Value> n;
  bool monotone = false;
  std::vector<std::pair<std::string, std::string>> entries;
};

// Assembles every bound that applies to the given parameters. `f_known`
// feeds min_count_lower_bound; `exact_profile_lcm` additionally runs the
// exhaustive max_profile_lcm enumeration (k <= 5).
BoundReport make_bound_report(int k, Value ell, std::optional<Value> n, bool monotone,
                              std::optional<double> f_known, bool exact_profile_lcm);

}  // namespace permarith
