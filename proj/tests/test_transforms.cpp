#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <random>
#include <set>

#include "permarith/constructions.hpp"
#include "permarith/core.hpp"
#include "permarith/transforms.hpp"
#include "support.hpp"

using namespace permarith;
using permarith::test::random_permutation;

TEST_CASE("lcm_upto") {
  CHECK(lcm_upto(1) == 1);
  CHECK(lcm_upto(5) == 60);
  CHECK(lcm_upto(10) == 2520);
  CHECK(lcm_upto(20) == 232792560);
  // crosses the 64-bit boundary near n=43
  CHECK(lcm_upto(42) <= std::numeric_limits<Value>::max());
  CHECK(lcm_upto(43) > std::numeric_limits<Value>::max());
  CHECK_THROWS_AS(lcm_upto(0), std::invalid_argument);

  // folding one more value only multiplies by primes or prime powers
  BigInt prev = 1;
  for (Value n = 1; n <= 30; ++n) {
    const BigInt cur = lcm_upto(n);
    CHECK(cur % prev == 0);
    prev = cur;
  }
}

TEST_CASE("power-of-two lift") {
  CHECK(pow2_lift_i64(ValueSequence({1, 2, 3})).values() == std::vector<Value>{2, 4, 8});
  const auto big = pow2_lift(ValueSequence({1, 100}));
  CHECK(big[0] == 2);
  CHECK(big[1] == BigInt(1) << 100);
  CHECK_THROWS_AS(pow2_lift_i64(ValueSequence({63})), std::overflow_error);
  CHECK(pow2_lift_i64(ValueSequence({62})).values() == std::vector<Value>{Value{1} << 62});
}

TEST_CASE("divisor lift") {
  CHECK(divisor_lift_i64(ValueSequence({3, 2, 5}), 5).values() == std::vector<Value>{20, 30, 12});
  const auto big = divisor_lift(ValueSequence({1, 43}), 43);
  CHECK(big[0] == lcm_upto(43));
  CHECK(big[1] == lcm_upto(43) / 43);
  CHECK_THROWS_AS(divisor_lift_i64(ValueSequence({1}), 43), std::overflow_error);
  CHECK_THROWS_AS(divisor_lift_i64(ValueSequence({7}), 5), std::invalid_argument);
}

TEST_CASE("pattern check on big values agrees with the word-sized path") {
  const PatternSpec mul2 = make_pattern_spec(3, 2, Flavor::multiplicative, false);
  CHECK(pattern_holds(std::vector<BigInt>{2, 4, 8}, mul2) == Anchor::last);
  const PatternSpec inv2 = make_pattern_spec(3, 2, Flavor::inverse_additive, false);
  CHECK(pattern_holds(std::vector<BigInt>{20, 30, 12}, inv2) == Anchor::last);
  CHECK_THROWS_AS(pattern_holds(std::vector<BigInt>{2, 2, 4}, mul2), std::invalid_argument);
}

namespace {

// Random distinct sequences, with hits planted every few iterations so both
// directions of the equivalences get real coverage.
std::vector<Value> random_distinct(std::mt19937_64& rng, int k, Value lo, Value hi) {
  std::set<Value> chosen;
  std::uniform_int_distribution<Value> val(lo, hi);
  while (static_cast<int>(chosen.size()) < k) chosen.insert(val(rng));
  std::vector<Value> seq(chosen.begin(), chosen.end());
  std::shuffle(seq.begin(), seq.end(), rng);
  return seq;
}

std::optional<std::vector<Value>> plant_additive_hit(std::mt19937_64& rng, int k, Value ell,
                                                     Value hi, bool monotone) {
  const auto sets = relation_sets(hi, make_pattern_spec(k, ell, Flavor::additive, monotone));
  if (sets.empty()) return std::nullopt;
  const RelationSet& rs = sets[rng() % sets.size()];
  std::vector<Value> seq = rs.values;  // ascending
  if (monotone) {
    if (rng() % 2) std::reverse(seq.begin(), seq.end());
  } else {
    // anchor first or last, the rest shuffled between
    std::vector<Value> rest;
    for (Value v : seq) {
      if (v != rs.anchor) rest.push_back(v);
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    seq.clear();
    if (rng() % 2) {
      seq.push_back(rs.anchor);
      seq.insert(seq.end(), rest.begin(), rest.end());
    } else {
      seq = rest;
      seq.push_back(rs.anchor);
    }
  }
  return seq;
}

}  // namespace

TEST_CASE("power lift carries additive patterns to multiplicative ones and back") {
  std::mt19937_64 rng(424242);
  for (int iter = 0; iter < 3000; ++iter) {
    const int k = 3 + static_cast<int>(rng() % 3);
    const Value ell = 2 + static_cast<Value>(rng() % 2);
    const bool monotone = (rng() % 2) == 0;
    std::vector<Value> seq;
    if (iter % 3 == 0) {
      const auto planted = plant_additive_hit(rng, k, ell, 40, monotone);
      if (!planted) continue;
      seq = *planted;
    } else {
      seq = random_distinct(rng, k, 1, 62);
    }
    const PatternSpec add = make_pattern_spec(k, ell, Flavor::additive, monotone);
    const PatternSpec mul = make_pattern_spec(k, ell, Flavor::multiplicative, monotone);
    const auto before = pattern_holds(ValueSequence(seq), add);
    const auto after = pattern_holds(pow2_lift(ValueSequence(seq)), mul);
    CHECK(before == after);
    if (seq.size() == 3 || *std::max_element(seq.begin(), seq.end()) <= 62) {
      CHECK(pattern_holds(pow2_lift_i64(ValueSequence(seq)), mul) == before);
    }
  }
}

TEST_CASE("divisor lift carries additive patterns to inverse-additive ones and back") {
  std::mt19937_64 rng(515151);
  for (int iter = 0; iter < 3000; ++iter) {
    const int k = 3 + static_cast<int>(rng() % 3);
    const Value ell = 2 + static_cast<Value>(rng() % 2);
    const bool monotone = (rng() % 2) == 0;
    const Value n = 20;
    std::vector<Value> seq;
    if (iter % 3 == 0) {
      const auto planted = plant_additive_hit(rng, k, ell, n, monotone);
      if (!planted) continue;
      seq = *planted;
    } else {
      seq = random_distinct(rng, k, 1, n);
    }
    const PatternSpec add = make_pattern_spec(k, ell, Flavor::additive, monotone);
    const PatternSpec inv = make_pattern_spec(k, ell, Flavor::inverse_additive, monotone);
    const auto before = pattern_holds(ValueSequence(seq), add);
    // elementwise x -> L/x keeps the anchored end (the relation rescales by
    // 1/L) and flips monotone direction, which the check is insensitive to
    const auto after = pattern_holds(divisor_lift(ValueSequence(seq), n), inv);
    CHECK(before == after);
  }
}

TEST_CASE("power subpermutation extraction") {
  CHECK(extract_power_subperm(make_permutation({4, 1, 3, 2})).values() ==
        std::vector<Value>{2, 1});
  CHECK(extract_power_subperm(make_permutation({4, 1, 3, 2}), 2).values() ==
        std::vector<Value>{2, 1});
  CHECK_THROWS_AS(extract_power_subperm(make_permutation({4, 1, 3, 2}), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(extract_power_subperm(make_permutation({1})), std::invalid_argument);

  std::mt19937_64 rng(77);
  const Permutation q = random_permutation(16, rng);
  const Permutation p = extract_power_subperm(q);
  CHECK(p.n() == 4);
  // relative order of powers in q matches relative order of exponents in p
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      if (a == b) continue;
      const bool left_in_p = p.position_of(a) < p.position_of(b);
      const bool left_in_q = q.position_of(Value{1} << a) < q.position_of(Value{1} << b);
      CHECK(left_in_p == left_in_q);
    }
  }
}

TEST_CASE("divisor subpermutation extraction") {
  // host holding 6,3,2 in that order; lcm(1..3) = 6 maps them to 1,2,3
  const Permutation q = make_permutation({3, 1, 6, 5, 2, 4});
  CHECK(extract_divisor_subperm(q, 3).values() == std::vector<Value>{2, 1, 3});

  std::mt19937_64 rng(78);
  const Permutation host = random_permutation(60, rng);
  const Permutation p = extract_divisor_subperm(host, 5);
  CHECK(p.n() == 5);
  const Value l = 60;
  for (Value a = 1; a <= 5; ++a) {
    for (Value b = 1; b <= 5; ++b) {
      if (a == b) continue;
      CHECK((left_set(p, b).count(a) != 0) ==
            (left_set(host, l / b).count(l / a) != 0));
    }
  }
  CHECK_THROWS_AS(extract_divisor_subperm(make_permutation({1, 2, 3}), 3),
                  std::invalid_argument);
}

TEST_CASE("extraction inverts embedding of the power image") {
  std::mt19937_64 rng(79);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Permutation p = random_permutation(n, rng);
    // build a host of size 2^n whose power subpermutation spells p
    const Value host_n = Value{1} << n;
    std::vector<Value> non_powers;
    for (Value v = 1; v <= host_n; ++v) {
      if ((v & (v - 1)) != 0 || v == 1) non_powers.push_back(v);
    }
    std::shuffle(non_powers.begin(), non_powers.end(), rng);
    std::vector<Value> host_vals;
    std::size_t np = 0;
    for (Value slot = 1; slot <= host_n; ++slot) {
      // interleave: powers at every other slot until exhausted
      if (slot % 2 == 0 && (slot / 2) <= n) {
        host_vals.push_back(Value{1} << p.at(slot / 2));
      } else {
        host_vals.push_back(non_powers[np++]);
      }
    }
    const Permutation host = make_permutation(host_vals);
    CHECK(extract_power_subperm(host, n) == p);
  }
}

TEST_CASE("multiplicative hits in a power host mirror additive hits in the extract") {
  std::mt19937_64 rng(80);
  const PatternSpec add = make_pattern_spec(3, 2, Flavor::additive, false);
  const PatternSpec mul = make_pattern_spec(3, 2, Flavor::multiplicative, false);
  for (int iter = 0; iter < 200; ++iter) {
    const Permutation q = random_permutation(16, rng);
    const Permutation p = extract_power_subperm(q);
    // every additive hit in p lifts to a distinct multiplicative hit in q
    CHECK(count_hits(q, mul) >= count_hits(p, add));
    const auto hit = find_hit(p, add);
    if (hit) {
      std::vector<Value> lifted;
      for (Value v : hit->values) lifted.push_back(Value{1} << v);
      CHECK(pattern_holds(ValueSequence(lifted), mul) == hit->anchor);
      // and the lifted values appear in q in the same relative order
      for (std::size_t i = 1; i < lifted.size(); ++i) {
        CHECK(q.position_of(lifted[i - 1]) < q.position_of(lifted[i]));
      }
    }
  }
}

TEST_CASE("exact rationals are canonical") {
  const ExactRational r(2, 4);
  CHECK(numerator(r) == 1);
  CHECK(denominator(r) == 2);
  const ExactRational neg = ExactRational(1) / ExactRational(-2);
  CHECK(numerator(neg) == -1);
  CHECK(denominator(neg) == 2);
  CHECK(gcd(numerator(r), denominator(r)) == 1);
  CHECK(ExactRational(1, 20) + ExactRational(1, 30) + ExactRational(1, 12) == ExactRational(1, 6));
}
