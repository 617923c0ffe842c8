#pragma once

// Test-only helpers. naive_count_hits is the independent oracle: it walks
// every C(n,k) position combination and asks pattern_holds, sharing no code
// with the optimized per-anchor enumeration it cross-checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "permarith/core.hpp"

namespace permarith::test {

inline void for_each_combination(Value n, int k, const std::function<void(const std::vector<Value>&)>& fn) {
  if (k > n) return;
  std::vector<Value> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;  // 1-based positions
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

inline std::uint64_t naive_count_hits(const Permutation& p, const PatternSpec& spec) {
  std::uint64_t count = 0;
  for_each_combination(p.n(), spec.k, [&](const std::vector<Value>& positions) {
    std::vector<Value> vals;
    vals.reserve(positions.size());
    for (Value q : positions) vals.push_back(p.at(q));
    if (pattern_holds(ValueSequence(vals), spec)) ++count;
  });
  return count;
}

inline bool naive_has_hit(const Permutation& p, const PatternSpec& spec) {
  return naive_count_hits(p, spec) > 0;
}

inline void for_each_permutation(Value n, const std::function<void(const Permutation&)>& fn) {
  std::vector<Value> vals(static_cast<std::size_t>(n));
  for (Value i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = i + 1;
  do {
    fn(Permutation(vals));
  } while (std::next_permutation(vals.begin(), vals.end()));
}

inline Permutation random_permutation(Value n, std::mt19937_64& rng) {
  std::vector<Value> vals(static_cast<std::size_t>(n));
  for (Value i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(vals.begin(), vals.end(), rng);
  return Permutation(std::move(vals));
}

// Monotone 3-AP presence by direct triple enumeration (independent of
// has_monotone_3ap's pair-midpoint scan).
inline bool naive_has_monotone_3ap(const Permutation& p) {
  bool found = false;
  for_each_combination(p.n(), 3, [&](const std::vector<Value>& pos) {
    const Value x = p.at(pos[0]);
    const Value y = p.at(pos[1]);
    const Value z = p.at(pos[2]);
    const bool monotone = (x < y && y < z) || (x > y && y > z);
    if (monotone && x + z == 2 * y) found = true;
  });
  return found;
}

}  // namespace permarith::test
