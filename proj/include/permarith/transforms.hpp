#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

#include "permarith/core.hpp"

namespace permarith {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision numerator/denominator, kept in
// lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

// lcm(1, 2, ..., n). Exceeds 64 bits near n = 43, hence arbitrary precision.
BigInt lcm_upto(Value n);

// Elementwise 2^x. The default is exact at any size; the _i64 fast path
// requires every value <= 62 and fails loudly beyond instead of wrapping.
std::vector<BigInt> pow2_lift(const ValueSequence& seq);
ValueSequence pow2_lift_i64(const ValueSequence& seq);

// Elementwise L_n/x for values in {1..n}. The _i64 fast path requires L_n to
// fit a signed 64-bit word (n <= 42).
std::vector<BigInt> divisor_lift(const ValueSequence& seq, Value n);
ValueSequence divisor_lift_i64(const ValueSequence& seq, Value n);

// Relation check on big-valued sequences (lift images). Values must be
// positive and distinct.
std::optional<Anchor> pattern_holds(const std::vector<BigInt>& seq, const PatternSpec& spec);

// Reads off the permutation of S_n induced by q's subpermutation on
// {2^1, ..., 2^n}: position i of the subpermutation carries value log2 of its
// term. q needs to contain all n powers (it may be longer than 2^n); with no
// explicit n, the largest complete power range is used.
Permutation extract_power_subperm(const Permutation& q);
Permutation extract_power_subperm(const Permutation& q, int n);

// Same for the divisor set {L_n/1, ..., L_n/n}: a sits left of b in the
// result exactly when L_n/a sits left of L_n/b in q.
Permutation extract_divisor_subperm(const Permutation& q, Value n);

}  // namespace permarith
