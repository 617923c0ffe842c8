#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permarith/core.hpp"

namespace permarith {

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;  // per run() call
  std::optional<double> max_seconds;       // wall clock, per run() call
};

struct SearchOptions {
  int threads = 1;
  // Fixes value 1 left of value 2, which is sound for existence questions
  // because reversing a permutation preserves every pattern flavor (the two
  // anchor conditions swap).
  bool break_reversal_symmetry = true;
};

enum class SearchStatus { avoider_found, exhausted, inconclusive };
const char* to_string(SearchStatus s);

// Unexplored remainder of an insertion-order search. Each prefix lists the
// gap index (0-based, gap g sits before the current (g+1)-th element) chosen
// for values 1, 2, ..., len(prefix) in insertion order; the subtree hanging
// below the prefix is still pending. A fresh search is the single empty
// prefix.
struct SearchFrontier {
  std::vector<std::vector<int>> prefixes;

  static SearchFrontier whole_tree() { return SearchFrontier{{{}}}; }
  bool empty() const { return prefixes.empty(); }
  friend bool operator==(const SearchFrontier&, const SearchFrontier&) = default;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<Permutation> witness;   // present iff avoider_found
  std::uint64_t nodes_explored = 0;     // cumulative over the whole state
  double elapsed_seconds = 0.0;         // this call
  bool parallel = false;                // nodes_explored not schedule-stable when set
  std::string note;                     // inconclusive reason
};

// Resumable state of a single "does S_n contain an avoider?" question.
struct SearchState {
  Value n = 0;
  PatternSpec spec;
  bool break_reversal_symmetry = true;
  SearchFrontier frontier = SearchFrontier::whole_tree();
  std::uint64_t nodes = 0;

  friend bool operator==(const SearchState&, const SearchState&) = default;
};

SearchState make_search_state(Value n, const PatternSpec& spec, const SearchOptions& opts = {});

// Explores the state's frontier. On an inconclusive outcome the state holds
// the still-pending frontier, so repeated calls finish the search exactly:
// the node total over a direct run equals the total over any resumed split.
SearchOutcome run_avoider_search(SearchState& state, const SearchBudget& budget = {},
                                 const SearchOptions& opts = {});

// One-shot convenience: exhaustive over S_n (up to the symmetry reduction).
// status == exhausted means no permutation of S_n avoids the pattern;
// avoider_found returns a witness re-verified by count_hits == 0; running
// out of budget is reported as inconclusive, never as exhausted.
SearchOutcome exists_avoider(Value n, const PatternSpec& spec, const SearchBudget& budget = {},
                             const SearchOptions& opts = {});

struct PerNStat {
  Value n = 0;
  SearchStatus status = SearchStatus::inconclusive;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;

  friend bool operator==(const PerNStat&, const PerNStat&) = default;
};

struct ThresholdResult {
  PatternSpec spec;
  Value threshold = 0;               // first n with no avoider
  Permutation largest_avoider{std::vector<Value>{}};  // verified avoider in S_{threshold-1}
  std::vector<PerNStat> per_n;
};

struct ThresholdOutcome {
  std::optional<ThresholdResult> result;  // engaged iff resolved
  std::string unresolved_reason;          // set iff unresolved
  std::vector<PerNStat> per_n;

  bool resolved() const { return result.has_value(); }
};

// Resumable state of a threshold scan (first n in [n_start, n_max] whose
// search exhausts).
struct ThresholdState {
  PatternSpec spec;
  Value n_start = 1;
  Value n_max = 0;
  SearchState current;                     // search at current.n in progress
  std::vector<PerNStat> per_n;             // completed levels
  std::optional<Permutation> prev_witness; // avoider from the last completed level

  friend bool operator==(const ThresholdState&, const ThresholdState&) = default;
};

ThresholdState make_threshold_state(const PatternSpec& spec, Value n_start, Value n_max,
                                    const SearchOptions& opts = {});

// Walks n upward until a level exhausts. The budget applies to the whole
// call; on budget exhaustion the outcome is unresolved and the state resumes
// where it stopped.
ThresholdOutcome run_threshold(ThresholdState& state, const SearchBudget& budget = {},
                               const SearchOptions& opts = {});

ThresholdOutcome find_threshold(const PatternSpec& spec, Value n_start, Value n_max,
                                const SearchBudget& budget = {}, const SearchOptions& opts = {});

// ---- exact minimum counts --------------------------------------------------

inline constexpr Value kMaxExhaustiveMinCountN = 10;

struct MinCountResult {
  Value n = 0;
  PatternSpec spec;
  std::uint64_t minimum = 0;
  Permutation argmin{std::vector<Value>{}};
};

// Exact min of count_hits over all of S_n by full enumeration; refuses
// n > kMaxExhaustiveMinCountN, which would need a certified branch-and-bound.
MinCountResult min_count(Value n, const PatternSpec& spec);

// ---- checkpoint files -------------------------------------------------------
//
// Self-describing text format, round-trippable:
//   permarith-checkpoint v1
//   mode = search           (or threshold)
//   k = 3 / ell = 2 / flavor = add / monotone = 1
//   n = 18 / symmetry_break = 1 / nodes = 123
//   pending = 0,1,2         (one line per frontier prefix; "-" = empty prefix)
// threshold mode adds n_start/n_max, one "stat = n status nodes elapsed_ms"
// line per completed level, and the current best witness.

void save_search_checkpoint(const std::string& path, const SearchState& state);
SearchState load_search_checkpoint(const std::string& path);

void save_threshold_checkpoint(const std::string& path, const ThresholdState& state);
ThresholdState load_threshold_checkpoint(const std::string& path);

}  // namespace permarith
