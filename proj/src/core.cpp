#include "permarith/core.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "permarith/detail/pattern_check.hpp"

namespace permarith {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::additive: return "additive";
    case Flavor::multiplicative: return "multiplicative";
    case Flavor::inverse_additive: return "inverse_additive";
  }
  return "?";
}

const char* to_string(Anchor a) { return a == Anchor::first ? "first" : "last"; }

const char* flavor_code(Flavor f) {
  switch (f) {
    case Flavor::additive: return "add";
    case Flavor::multiplicative: return "mul";
    case Flavor::inverse_additive: return "inv";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(const std::string& code) {
  if (code == "add") return Flavor::additive;
  if (code == "mul") return Flavor::multiplicative;
  if (code == "inv") return Flavor::inverse_additive;
  return std::nullopt;
}

PatternSpec make_pattern_spec(int k, Value ell, Flavor flavor, bool monotone) {
  if (k < 3) throw std::invalid_argument("pattern spec: k must be >= 3, got " + std::to_string(k));
  if (ell < 2) throw std::invalid_argument("pattern spec: ell must be >= 2, got " + std::to_string(ell));
  return PatternSpec{k, ell, flavor, monotone};
}

Permutation::Permutation(std::vector<Value> values) : values_(std::move(values)) {
  const Value n = static_cast<Value>(values_.size());
  pos_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Value i = 0; i < n; ++i) {
    const Value v = values_[static_cast<std::size_t>(i)];
    if (v < 1) {
      throw std::invalid_argument("not a permutation: non-positive value " + std::to_string(v));
    }
    if (v > n) {
      throw std::invalid_argument("not a permutation: value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (pos_[static_cast<std::size_t>(v)] != 0) {
      throw std::invalid_argument("not a permutation: duplicate value " + std::to_string(v));
    }
    pos_[static_cast<std::size_t>(v)] = i + 1;
  }
}

Value Permutation::at(Value pos) const {
  if (pos < 1 || pos > n()) throw std::out_of_range("position out of range");
  return values_[static_cast<std::size_t>(pos - 1)];
}

Value Permutation::position_of(Value value) const {
  if (value < 1 || value > n()) {
    throw std::invalid_argument("value " + std::to_string(value) + " not in 1.." +
                                std::to_string(n()));
  }
  return pos_[static_cast<std::size_t>(value)];
}

Permutation make_permutation(std::vector<Value> values) { return Permutation(std::move(values)); }

ValueSequence::ValueSequence(std::vector<Value> values) : values_(std::move(values)) {
  for (Value v : values_) {
    if (v < 1) throw std::invalid_argument("value sequence: non-positive value " + std::to_string(v));
  }
  std::vector<Value> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw std::invalid_argument("value sequence: duplicate value " + std::to_string(*dup));
  }
}

ValueSequence make_value_sequence(std::vector<Value> values) {
  return ValueSequence(std::move(values));
}

std::set<Value> left_set(const Permutation& p, Value s) {
  const Value i = p.position_of(s);
  std::set<Value> out;
  for (Value j = 1; j < i; ++j) out.insert(p.at(j));
  return out;
}

std::set<Value> right_set(const Permutation& p, Value s) {
  const Value i = p.position_of(s);
  std::set<Value> out;
  for (Value j = i + 1; j <= p.n(); ++j) out.insert(p.at(j));
  return out;
}

ValueSequence subpermutation(const Permutation& p, const std::set<Value>& keep) {
  for (Value v : keep) {
    if (v < 1 || v > p.n()) {
      throw std::invalid_argument("subpermutation: value " + std::to_string(v) +
                                  " not in 1.." + std::to_string(p.n()));
    }
  }
  std::vector<Value> out;
  out.reserve(keep.size());
  for (Value v : p.values()) {
    if (keep.count(v)) out.push_back(v);
  }
  return ValueSequence(std::move(out));
}

std::optional<Anchor> pattern_holds(const ValueSequence& seq, const PatternSpec& spec) {
  return detail::check_pattern(seq.values(), spec);
}

namespace {

// --- enumeration of relation sets -----------------------------------------
//
// A relation set is anchored on a value m: the remaining k-1 values form a
// "support" whose sum is (ell-1)*m (additive), whose product is m^(ell-1)
// (multiplicative), or whose reciprocal sum is (ell-1)/m (inverse-additive).
// Supports are enumerated ascending with interval pruning; the final slot is
// solved directly instead of scanned.

using Emit = std::function<void(const RelationSet&)>;

void emit_set(std::vector<Value>& support, Value m, const Emit& fn) {
  RelationSet rs;
  rs.values.reserve(support.size() + 1);
  rs.values = support;
  rs.values.insert(std::upper_bound(rs.values.begin(), rs.values.end(), m), m);
  rs.anchor = m;
  fn(rs);
}

void additive_supports(Value target, int slots, Value next, Value hi, Value skip,
                       std::vector<Value>& acc, Value m, const Emit& fn) {
  if (slots == 1) {
    const Value x = target;
    if (x >= next && x <= hi && x != skip) {
      acc.push_back(x);
      emit_set(acc, m, fn);
      acc.pop_back();
    }
    return;
  }
  for (Value x = next; x <= hi; ++x) {
    if (x == skip) continue;
    const Value rest = target - x;
    const Value s = slots - 1;
    const Value min_rest = s * x + s * (s + 1) / 2;      // x+1 .. x+s
    const Value max_rest = s * hi - s * (s - 1) / 2;     // hi-s+1 .. hi
    if (rest < min_rest) break;
    if (rest > max_rest) continue;
    acc.push_back(x);
    additive_supports(rest, slots - 1, x + 1, hi, skip, acc, m, fn);
    acc.pop_back();
  }
}

void multiplicative_supports(const cpp_int& target, int slots, Value next, Value hi, Value skip,
                             std::vector<Value>& acc, Value m, const Emit& fn) {
  if (slots == 1) {
    if (target >= next && target <= hi) {
      const Value x = static_cast<Value>(target);
      if (x != skip) {
        acc.push_back(x);
        emit_set(acc, m, fn);
        acc.pop_back();
      }
    }
    return;
  }
  for (Value x = next; x <= hi; ++x) {
    if (x == skip) continue;
    if (target % x != 0) continue;
    const cpp_int rest = target / x;
    const auto s = static_cast<unsigned>(slots - 1);
    if (rest < pow(cpp_int(x + 1), s)) break;   // even the smallest admissible tail is too big
    if (rest > pow(cpp_int(hi), s)) continue;
    acc.push_back(x);
    multiplicative_supports(rest, slots - 1, x + 1, hi, skip, acc, m, fn);
    acc.pop_back();
  }
}

cpp_rational reciprocal_range_sum(Value from, Value count) {
  cpp_rational s = 0;
  for (Value j = 0; j < count; ++j) s += cpp_rational(1, from + j);
  return s;
}

void inverse_supports(const cpp_rational& target, int slots, Value next, Value hi, Value skip,
                      std::vector<Value>& acc, Value m, const Emit& fn) {
  if (target <= 0) return;
  if (slots == 1) {
    // 1/x = target needs a unit numerator in lowest terms.
    if (numerator(target) == 1) {
      const cpp_int d = denominator(target);
      if (d >= next && d <= hi) {
        const Value x = static_cast<Value>(d);
        if (x != skip) {
          acc.push_back(x);
          emit_set(acc, m, fn);
          acc.pop_back();
        }
      }
    }
    return;
  }
  if (hi - next + 1 < slots) return;
  // slots distinct values <= hi sum to at least the reciprocals of the top slots values
  if (target < reciprocal_range_sum(hi - slots + 1, slots)) return;
  for (Value x = next; x <= hi; ++x) {
    if (x == skip) continue;
    // largest achievable tail uses x..x+slots-1; shrinks as x grows
    if (target > reciprocal_range_sum(x, slots)) break;
    const cpp_rational term(1, x);
    if (term >= target) continue;  // remaining slots need a positive remainder
    acc.push_back(x);
    inverse_supports(target - term, slots - 1, x + 1, hi, skip, acc, m, fn);
    acc.pop_back();
  }
}

void supports_in_range(Value n, const PatternSpec& spec, Value m, Value lo, Value hi,
                       const Emit& fn) {
  if (hi < lo) return;
  std::vector<Value> acc;
  acc.reserve(static_cast<std::size_t>(spec.k));
  const int slots = spec.k - 1;
  switch (spec.flavor) {
    case Flavor::additive:
      additive_supports((spec.ell - 1) * m, slots, lo, hi, m, acc, m, fn);
      break;
    case Flavor::multiplicative:
      multiplicative_supports(pow(cpp_int(m), static_cast<unsigned>(spec.ell - 1)), slots, lo, hi,
                              m, acc, m, fn);
      break;
    case Flavor::inverse_additive:
      inverse_supports(cpp_rational(spec.ell - 1, m), slots, lo, hi, m, acc, m, fn);
      break;
  }
  (void)n;
}

}  // namespace

void for_each_relation_set(Value n, const PatternSpec& spec, const Emit& fn) {
  if (spec.k < 3 || spec.ell < 2) throw std::invalid_argument("invalid pattern spec");
  if (n < spec.k) return;
  for (Value m = 1; m <= n; ++m) {
    if (spec.monotone) {
      // A monotone hit reads the set in value order (or reversed), so the
      // anchor must be the set's min or max.
      supports_in_range(n, spec, m, m + 1, n, fn);  // m = min
      supports_in_range(n, spec, m, 1, m - 1, fn);  // m = max
    } else {
      supports_in_range(n, spec, m, 1, n, fn);
    }
  }
}

std::vector<RelationSet> relation_sets(Value n, const PatternSpec& spec) {
  std::vector<RelationSet> out;
  for_each_relation_set(n, spec, [&](const RelationSet& rs) { out.push_back(rs); });
  return out;
}

bool set_hits(const Permutation& p, const PatternSpec& spec, const RelationSet& rs) {
  if (spec.monotone) {
    bool inc = true, dec = true;
    Value prev = p.position_of(rs.values.front());
    for (std::size_t i = 1; i < rs.values.size(); ++i) {
      const Value q = p.position_of(rs.values[i]);
      if (q < prev) inc = false;
      if (q > prev) dec = false;
      prev = q;
    }
    return inc || dec;
  }
  const Value pm = p.position_of(rs.anchor);
  bool anchor_first = true, anchor_last = true;
  for (Value v : rs.values) {
    if (v == rs.anchor) continue;
    const Value q = p.position_of(v);
    if (q < pm) anchor_first = false;
    if (q > pm) anchor_last = false;
  }
  return anchor_first || anchor_last;
}

std::optional<Hit> find_hit(const Permutation& p, const PatternSpec& spec) {
  std::optional<std::vector<Value>> best;  // position tuple, sorted ascending
  std::optional<Value> best_anchor_value;
  for_each_relation_set(p.n(), spec, [&](const RelationSet& rs) {
    if (!set_hits(p, spec, rs)) return;
    std::vector<Value> positions;
    positions.reserve(rs.values.size());
    for (Value v : rs.values) positions.push_back(p.position_of(v));
    std::sort(positions.begin(), positions.end());
    if (!best || positions < *best) {
      best = std::move(positions);
      best_anchor_value = rs.anchor;
    }
  });
  if (!best) return std::nullopt;
  Hit h;
  h.positions = *best;
  h.values.reserve(h.positions.size());
  for (Value q : h.positions) h.values.push_back(p.at(q));
  h.anchor = (p.position_of(*best_anchor_value) == h.positions.front()) ? Anchor::first
                                                                        : Anchor::last;
  return h;
}

std::uint64_t count_hits(const Permutation& p, const PatternSpec& spec) {
  std::uint64_t count = 0;
  for_each_relation_set(p.n(), spec, [&](const RelationSet& rs) {
    if (set_hits(p, spec, rs)) ++count;
  });
  return count;
}

std::uint64_t count_hits(const Permutation& p, const PatternSpec& spec,
                         const std::vector<RelationSet>& sets) {
  std::uint64_t count = 0;
  for (const RelationSet& rs : sets) {
    if (set_hits(p, spec, rs)) ++count;
  }
  return count;
}

bool has_monotone_3ap(const Permutation& p) {
  const Value n = p.n();
  for (Value u = 1; u <= n; ++u) {
    for (Value w = u + 2; w <= n; w += 2) {
      const Value v = (u + w) / 2;
      const Value pu = p.position_of(u);
      const Value pv = p.position_of(v);
      const Value pw = p.position_of(w);
      if ((pu < pv && pv < pw) || (pw < pv && pv < pu)) return true;
    }
  }
  return false;
}

Permutation reversed(const Permutation& p) {
  std::vector<Value> vals(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(vals));
}

}  // namespace permarith
