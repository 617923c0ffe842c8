#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "permarith/core.hpp"

namespace permarith {

// A corpus entry binding a permutation to an avoidance claim.
struct WitnessRecord {
  std::string id;
  Value n = 0;
  PatternSpec spec;
  Permutation permutation{std::vector<Value>{}};
  std::string claim;  // currently always "avoider"
  std::string note;

  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

// (1, 2, ..., k-2, m-1, m-2, ..., k-1) with m = (k-1)(3k-4)/2: a permutation
// of S_{m-1} with no 2-additive subsequence of length k.
Permutation staircase_avoider(int k);

// (2p_1, ..., 2p_n, 2p_1-1, ..., 2p_n-1): doubles the length and preserves
// monotone-3-AP-freeness.
Permutation odda_double(const Permutation& p);

// (ceil(n/a), ceil(n/a)-1, ..., 1, n, n-1, ..., ceil(n/a)+1): two decreasing
// runs, hence no increasing subsequence of length three. Requires
// 2 <= a <= ceil(n/2).
Permutation two_run_permutation(Value n, Value a);

Permutation identity_permutation(Value n);

// The built-in extremal witnesses, re-verified (count_hits == 0) on first
// access. Known ids: s7_f43, s12_f34, s17_g32, s31_mult2, s59_inv2.
const std::vector<WitnessRecord>& builtin_corpus();
WitnessRecord builtin_witness(const std::string& id);

// Corpus text format: one self-describing record per line, e.g.
//   witness id=s7_f43 n=7 k=4 ell=3 flavor=add monotone=0 claim=avoider
//     perm=2,4,6,7,5,3,1 note=free text to end of line
// (shown wrapped here; real records are a single line)
void write_corpus(std::ostream& out, const std::vector<WitnessRecord>& records);
std::vector<WitnessRecord> read_corpus(std::istream& in);

}  // namespace permarith
