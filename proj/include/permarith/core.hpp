#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace permarith {

// All sequence entries are positive integers.
using Value = long long;

enum class Flavor { additive, multiplicative, inverse_additive };

// Which end of a qualifying subsequence the defining relation binds:
// `first` means the relation holds with the first term (e.g. sum = ell*x_1),
// `last` means it holds with the last term. A qualifying subsequence has
// exactly one anchor because its first and last values differ.
enum class Anchor { first, last };

const char* to_string(Flavor f);
const char* to_string(Anchor a);

// Short codes used by the CLI and file formats: "add" | "mul" | "inv".
const char* flavor_code(Flavor f);
std::optional<Flavor> parse_flavor(const std::string& code);

// A subsequence pattern: length k, multiplier ell, one of
//   additive:          x_1 + ... + x_k = ell*x_1  or  ell*x_k
//   multiplicative:    x_1 * ... * x_k = x_1^ell  or  x_k^ell
//   inverse_additive:  1/x_1 + ... + 1/x_k = ell/x_1  or  ell/x_k
// and, when monotone is set, the subsequence must additionally be strictly
// increasing or strictly decreasing.
struct PatternSpec {
  int k = 3;
  Value ell = 2;
  Flavor flavor = Flavor::additive;
  bool monotone = false;

  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

// Validates k >= 3 and ell >= 2.
PatternSpec make_pattern_spec(int k, Value ell, Flavor flavor, bool monotone);

// A permutation of {1..n} in one-line notation, with a value -> position
// index. Positions are 1-based throughout.
class Permutation {
 public:
  // Rejects anything that is not a permutation of {1..n}, naming the
  // offending value in the exception message.
  explicit Permutation(std::vector<Value> values);

  Value n() const { return static_cast<Value>(values_.size()); }
  std::size_t size() const { return values_.size(); }
  const std::vector<Value>& values() const { return values_; }

  // Value at 1-based position `pos`.
  Value at(Value pos) const;
  // 1-based position of `value`; throws if value not in {1..n}.
  Value position_of(Value value) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Value> values_;
  std::vector<Value> pos_;  // pos_[v] = 1-based position of v; pos_[0] unused
};

Permutation make_permutation(std::vector<Value> values);

// A finite sequence of distinct positive integers. Unlike a permutation it
// need not cover {1..m}; a subpermutation keeps its original labels.
class ValueSequence {
 public:
  ValueSequence() = default;
  explicit ValueSequence(std::vector<Value> values);  // validates invariants

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<Value>& values() const { return values_; }

  friend bool operator==(const ValueSequence&, const ValueSequence&) = default;

 private:
  std::vector<Value> values_;
};

ValueSequence make_value_sequence(std::vector<Value> values);

// Values strictly to the left / right of value s in p.
std::set<Value> left_set(const Permutation& p, Value s);
std::set<Value> right_set(const Permutation& p, Value s);

// The terms of p restricted to `keep`, in p's order, labels retained.
ValueSequence subpermutation(const Permutation& p, const std::set<Value>& keep);

// Evaluates the pattern relation on seq (length must equal spec.k) with
// exact arithmetic; never wraps. Returns the anchor if the relation holds
// (and, for monotone specs, the sequence is strictly monotone).
std::optional<Anchor> pattern_holds(const ValueSequence& seq, const PatternSpec& spec);

// A witnessed qualifying subsequence.
struct Hit {
  std::vector<Value> positions;  // strictly increasing, 1-based
  std::vector<Value> values;     // induced values, in position order
  Anchor anchor = Anchor::last;

  friend bool operator==(const Hit&, const Hit&) = default;
};

// A k-set of values in {1..n} that satisfies the arithmetic relation of the
// pattern, together with the unique value the relation is anchored on.
// Whether such a set yields a hit in a given permutation depends only on the
// positional arrangement of its values:
//   non-monotone: the anchor sits positionally first or last among the set;
//   monotone:     the whole set reads strictly monotone by position (the
//                 anchor is then the set's min or max by construction).
struct RelationSet {
  std::vector<Value> values;  // sorted ascending
  Value anchor = 0;

  friend bool operator==(const RelationSet&, const RelationSet&) = default;
};

// Enumerates every relation set over {1..n} in a fixed deterministic order.
// The streaming form avoids materializing large lists.
std::vector<RelationSet> relation_sets(Value n, const PatternSpec& spec);
void for_each_relation_set(Value n, const PatternSpec& spec,
                           const std::function<void(const RelationSet&)>& fn);

// Does this relation set hit in p? (All set values must lie in {1..p.n()}.)
bool set_hits(const Permutation& p, const PatternSpec& spec, const RelationSet& rs);

// First qualifying subsequence under lexicographic-by-positions order, if any.
std::optional<Hit> find_hit(const Permutation& p, const PatternSpec& spec);

// Number of distinct position-sets whose induced subsequence satisfies the
// spec. Each position-set is counted once; the two anchor conditions are
// mutually exclusive, so no double counting arises. k > n gives 0.
std::uint64_t count_hits(const Permutation& p, const PatternSpec& spec);
std::uint64_t count_hits(const Permutation& p, const PatternSpec& spec,
                         const std::vector<RelationSet>& sets);

// True iff p contains a monotone three-term arithmetic progression, i.e. a
// monotone subsequence (x, y, z) with x + z = 2y.
bool has_monotone_3ap(const Permutation& p);

Permutation reversed(const Permutation& p);

}  // namespace permarith
