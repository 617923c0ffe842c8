#include "permarith/transforms.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "permarith/detail/pattern_check.hpp"

namespace permarith {

BigInt lcm_upto(Value n) {
  if (n < 1) throw std::invalid_argument("lcm_upto: n must be >= 1");
  BigInt l = 1;
  for (Value i = 2; i <= n; ++i) l = lcm(l, BigInt(i));
  return l;
}

std::vector<BigInt> pow2_lift(const ValueSequence& seq) {
  std::vector<BigInt> out;
  out.reserve(seq.size());
  for (Value x : seq.values()) {
    out.push_back(BigInt(1) << static_cast<unsigned>(x));
  }
  return out;
}

ValueSequence pow2_lift_i64(const ValueSequence& seq) {
  std::vector<Value> out;
  out.reserve(seq.size());
  for (Value x : seq.values()) {
    if (x > 62) {
      throw std::overflow_error("pow2_lift_i64: 2^" + std::to_string(x) +
                                " does not fit a 64-bit word");
    }
    out.push_back(Value{1} << x);
  }
  return ValueSequence(std::move(out));
}

std::vector<BigInt> divisor_lift(const ValueSequence& seq, Value n) {
  const BigInt l = lcm_upto(n);
  std::vector<BigInt> out;
  out.reserve(seq.size());
  for (Value x : seq.values()) {
    if (x < 1 || x > n) {
      throw std::invalid_argument("divisor_lift: value " + std::to_string(x) + " not in 1.." +
                                  std::to_string(n));
    }
    out.push_back(l / x);
  }
  return out;
}

ValueSequence divisor_lift_i64(const ValueSequence& seq, Value n) {
  const BigInt l = lcm_upto(n);
  if (l > std::numeric_limits<Value>::max()) {
    throw std::overflow_error("divisor_lift_i64: lcm(1.." + std::to_string(n) +
                              ") does not fit a 64-bit word");
  }
  const Value li = static_cast<Value>(l);
  std::vector<Value> out;
  out.reserve(seq.size());
  for (Value x : seq.values()) {
    if (x < 1 || x > n) {
      throw std::invalid_argument("divisor_lift: value " + std::to_string(x) + " not in 1.." +
                                  std::to_string(n));
    }
    out.push_back(li / x);
  }
  return ValueSequence(std::move(out));
}

std::optional<Anchor> pattern_holds(const std::vector<BigInt>& seq, const PatternSpec& spec) {
  std::vector<BigInt> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("pattern_holds: values must be distinct");
  }
  return detail::check_pattern(seq, spec);
}

Permutation extract_power_subperm(const Permutation& q) {
  // q holds every value up to q.n(), so the largest complete power range is
  // 2^1..2^n with 2^n <= q.n().
  int n = 0;
  Value pw = 1;
  while (pw <= q.n() / 2) {
    pw *= 2;
    ++n;
  }
  if (n < 1) throw std::invalid_argument("extract_power_subperm: host contains no powers of two");
  return extract_power_subperm(q, n);
}

Permutation extract_power_subperm(const Permutation& q, int n) {
  if (n < 1) throw std::invalid_argument("extract_power_subperm: n must be >= 1");
  std::set<Value> powers;
  Value x = 1;
  for (int i = 1; i <= n; ++i) {
    if (x > q.n() / 2) {
      throw std::invalid_argument("extract_power_subperm: host is missing 2^" + std::to_string(i));
    }
    x *= 2;
    powers.insert(x);
  }
  const ValueSequence sub = subpermutation(q, powers);
  std::vector<Value> vals;
  vals.reserve(sub.size());
  for (Value v : sub.values()) {
    int e = 0;
    while (v > 1) {
      v /= 2;
      ++e;
    }
    vals.push_back(e);
  }
  return Permutation(std::move(vals));
}

Permutation extract_divisor_subperm(const Permutation& q, Value n) {
  if (n < 1) throw std::invalid_argument("extract_divisor_subperm: n must be >= 1");
  const BigInt l = lcm_upto(n);
  if (l > std::numeric_limits<Value>::max()) {
    throw std::invalid_argument("extract_divisor_subperm: lcm(1.." + std::to_string(n) +
                                ") exceeds the representable host size");
  }
  const Value li = static_cast<Value>(l);
  std::set<Value> divisors;
  for (Value a = 1; a <= n; ++a) {
    const Value d = li / a;
    if (d > q.n()) {
      throw std::invalid_argument("extract_divisor_subperm: host is missing value " +
                                  std::to_string(d));
    }
    divisors.insert(d);
  }
  // a appears left of b exactly when L_n/a appears left of L_n/b, so reading
  // the divisor subpermutation off position by position gives p_i = L_n/q'_i.
  const ValueSequence sub = subpermutation(q, divisors);
  std::vector<Value> vals;
  vals.reserve(sub.size());
  for (Value v : sub.values()) vals.push_back(li / v);
  return Permutation(std::move(vals));
}

}  // namespace permarith
