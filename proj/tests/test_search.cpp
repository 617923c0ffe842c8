#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>

#include "permarith/core.hpp"
#include "permarith/search.hpp"
#include "support.hpp"

using namespace permarith;
using permarith::test::for_each_permutation;
using permarith::test::naive_count_hits;

namespace {

const PatternSpec kAdd32 = make_pattern_spec(3, 2, Flavor::additive, false);
const PatternSpec kMono32 = make_pattern_spec(3, 2, Flavor::additive, true);
const PatternSpec kAdd43 = make_pattern_spec(4, 3, Flavor::additive, false);
const PatternSpec kAdd34 = make_pattern_spec(3, 4, Flavor::additive, false);
const PatternSpec kAdd44 = make_pattern_spec(4, 4, Flavor::additive, false);

// Literal enumeration: does any permutation of S_n avoid the pattern?
bool brute_force_avoider_exists(Value n, const PatternSpec& spec) {
  bool found = false;
  for_each_permutation(n, [&](const Permutation& p) {
    if (!found && count_hits(p, spec) == 0) found = true;
  });
  return found;
}

}  // namespace

TEST_CASE("exists_avoider on the worked examples") {
  const SearchOutcome a4 = exists_avoider(4, kAdd32);
  CHECK(a4.status == SearchStatus::avoider_found);
  REQUIRE(a4.witness.has_value());
  CHECK(naive_count_hits(*a4.witness, kAdd32) == 0);

  const SearchOutcome a5 = exists_avoider(5, kAdd32);
  CHECK(a5.status == SearchStatus::exhausted);
  CHECK(!a5.witness.has_value());

  const SearchOutcome a7 = exists_avoider(7, kAdd43);
  CHECK(a7.status == SearchStatus::avoider_found);
  CHECK(naive_count_hits(*a7.witness, kAdd43) == 0);

  const SearchOutcome a17 = exists_avoider(17, kMono32);
  CHECK(a17.status == SearchStatus::avoider_found);
  CHECK(naive_count_hits(*a17.witness, kMono32) == 0);

  CHECK(exists_avoider(18, kMono32).status == SearchStatus::exhausted);
}

TEST_CASE("search agrees with literal enumeration for n <= 7") {
  const std::vector<PatternSpec> base = {kAdd32, kAdd43, kAdd34, kAdd44};
  for (const PatternSpec& b : base) {
    for (const bool monotone : {false, true}) {
      PatternSpec spec = b;
      spec.monotone = monotone;
      for (Value n = 1; n <= 7; ++n) {
        const bool brute = brute_force_avoider_exists(n, spec);
        const SearchOutcome o = exists_avoider(n, spec);
        CHECK(o.status == (brute ? SearchStatus::avoider_found : SearchStatus::exhausted));
        if (o.witness) CHECK(count_hits(*o.witness, spec) == 0);
      }
    }
  }
}

TEST_CASE("symmetry breaking does not change any status") {
  SearchOptions with, without;
  with.break_reversal_symmetry = true;
  without.break_reversal_symmetry = false;
  const std::vector<PatternSpec> specs = {kAdd32, kMono32, kAdd43, kAdd34,
                                          make_pattern_spec(3, 2, Flavor::multiplicative, false),
                                          make_pattern_spec(3, 2, Flavor::inverse_additive, false)};
  for (const PatternSpec& spec : specs) {
    for (Value n = 1; n <= 7; ++n) {
      const SearchOutcome r = exists_avoider(n, spec, {}, with);
      const SearchOutcome u = exists_avoider(n, spec, {}, without);
      CHECK(r.status == u.status);
    }
  }
}

TEST_CASE("sequential runs are reproducible") {
  const SearchOutcome a = exists_avoider(17, kMono32);
  const SearchOutcome b = exists_avoider(17, kMono32);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.witness == b.witness);

  const SearchOutcome e1 = exists_avoider(10, kMono32);
  const SearchOutcome e2 = exists_avoider(10, kMono32);
  CHECK(e1.nodes_explored == e2.nodes_explored);
}

TEST_CASE("budget exhaustion is inconclusive, never a wrong answer") {
  SearchBudget tiny;
  tiny.max_nodes = 25;
  const SearchOutcome o = exists_avoider(18, kMono32, tiny);
  CHECK(o.status == SearchStatus::inconclusive);
  CHECK(o.nodes_explored <= 25);
  CHECK(o.note == "node budget exceeded");

  SearchBudget zero_time;
  zero_time.max_seconds = 0.0;
  const SearchOutcome t = exists_avoider(18, kMono32, zero_time);
  CHECK(t.status == SearchStatus::inconclusive);
  CHECK(t.note == "time budget exceeded");
}

TEST_CASE("interrupted searches resume to the same answer and node total") {
  for (const auto& [n, spec] : std::vector<std::pair<Value, PatternSpec>>{
           {18, kMono32}, {17, kMono32}, {5, kAdd32}, {8, kAdd43}}) {
    const SearchOutcome direct = exists_avoider(n, spec);

    SearchState st = make_search_state(n, spec);
    SearchBudget slice;
    slice.max_nodes = std::max<std::uint64_t>(1, direct.nodes_explored / 4);
    SearchOutcome last;
    int rounds = 0;
    do {
      last = run_avoider_search(st, slice);
      ++rounds;
      REQUIRE(rounds < 10000);
    } while (last.status == SearchStatus::inconclusive);

    CHECK(last.status == direct.status);
    CHECK(last.nodes_explored == direct.nodes_explored);
    CHECK(last.witness == direct.witness);
    CHECK(rounds >= 2);  // the budget really did interrupt
  }
}

TEST_CASE("rerunning a finished state is a no-op") {
  SearchState st = make_search_state(5, kAdd32);
  const SearchOutcome first = run_avoider_search(st);
  CHECK(first.status == SearchStatus::exhausted);
  CHECK(st.frontier.empty());
  const SearchOutcome again = run_avoider_search(st);
  CHECK(again.status == SearchStatus::exhausted);
  CHECK(again.nodes_explored == first.nodes_explored);
}

TEST_CASE("parallel search returns the same statuses") {
  SearchOptions par;
  par.threads = 4;
  CHECK(exists_avoider(5, kAdd32, {}, par).status == SearchStatus::exhausted);
  CHECK(exists_avoider(4, kAdd32, {}, par).status == SearchStatus::avoider_found);
  CHECK(exists_avoider(18, kMono32, {}, par).status == SearchStatus::exhausted);
  CHECK(exists_avoider(17, kMono32, {}, par).status == SearchStatus::avoider_found);

  // exhausted runs visit the identical node set, so totals agree with the
  // sequential engine even across schedules
  const SearchOutcome seq = exists_avoider(18, kMono32);
  const SearchOutcome p = exists_avoider(18, kMono32, {}, par);
  CHECK(p.parallel);
  CHECK(p.nodes_explored == seq.nodes_explored);
}

TEST_CASE("thresholds reproduce the known extremal values") {
  const ThresholdOutcome f32 = find_threshold(kAdd32, 1, 10);
  REQUIRE(f32.resolved());
  CHECK(f32.result->threshold == 5);
  CHECK(f32.result->largest_avoider.n() == 4);
  CHECK(count_hits(f32.result->largest_avoider, kAdd32) == 0);

  const ThresholdOutcome f43 = find_threshold(kAdd43, 1, 10);
  REQUIRE(f43.resolved());
  CHECK(f43.result->threshold == 8);

  const ThresholdOutcome f34 = find_threshold(kAdd34, 1, 15);
  REQUIRE(f34.resolved());
  CHECK(f34.result->threshold == 13);

  const ThresholdOutcome g32 = find_threshold(kMono32, 1, 20);
  REQUIRE(g32.resolved());
  CHECK(g32.result->threshold == 18);
  CHECK(g32.result->largest_avoider.n() == 17);
  CHECK(naive_count_hits(g32.result->largest_avoider, kMono32) == 0);

  // statuses along the way follow the monotone structure: avoiders at every
  // level below the threshold, exhaustion exactly at it
  for (const PerNStat& s : g32.result->per_n) {
    CHECK(s.status == (s.n < 18 ? SearchStatus::avoider_found : SearchStatus::exhausted));
  }
  CHECK(exists_avoider(19, kMono32).status == SearchStatus::exhausted);
}

TEST_CASE("identity works forever at k = ell, so the scan stays unresolved") {
  const ThresholdOutcome o = find_threshold(kAdd44, 1, 9);
  CHECK(!o.resolved());
  CHECK(o.unresolved_reason.find("n_max") != std::string::npos);
  CHECK(o.per_n.size() == 9);
}

TEST_CASE("threshold budget interruptions are resumable") {
  const ThresholdOutcome direct = find_threshold(kMono32, 1, 20);
  REQUIRE(direct.resolved());

  ThresholdState st = make_threshold_state(kMono32, 1, 20);
  SearchBudget slice;
  slice.max_nodes = 100;
  ThresholdOutcome last = run_threshold(st, slice);
  int rounds = 1;
  while (!last.resolved()) {
    REQUIRE(last.unresolved_reason.find("budget") != std::string::npos);
    last = run_threshold(st, slice);
    ++rounds;
    REQUIRE(rounds < 10000);
  }
  CHECK(rounds >= 2);
  CHECK(last.result->threshold == direct.result->threshold);
  CHECK(last.result->largest_avoider == direct.result->largest_avoider);
}

TEST_CASE("a scan starting above the true threshold cannot fake a result") {
  // f(3,2) = 5: starting at 6 exhausts immediately, and the level below has
  // no avoider either, so the scan reports the anomaly instead of a result
  const ThresholdOutcome above = find_threshold(kAdd32, 6, 8);
  CHECK(!above.resolved());
  CHECK(above.unresolved_reason.find("below n_start") != std::string::npos);

  // starting exactly at the threshold works: the avoider is recovered from
  // the level below
  const ThresholdOutcome at = find_threshold(kAdd32, 5, 8);
  REQUIRE(at.resolved());
  CHECK(at.result->threshold == 5);
  CHECK(at.result->largest_avoider.n() == 4);
}

TEST_CASE("min_count on the worked examples") {
  const MinCountResult m4 = min_count(4, kAdd32);
  CHECK(m4.minimum == 0);
  CHECK(count_hits(m4.argmin, kAdd32) == 0);

  const MinCountResult m5 = min_count(5, kAdd32);
  CHECK(m5.minimum == 1);
  CHECK(count_hits(m5.argmin, kAdd32) == 1);

  CHECK_THROWS_AS(min_count(18, kAdd32), std::invalid_argument);
  CHECK_THROWS_AS(min_count(0, kAdd32), std::invalid_argument);
}

TEST_CASE("min_count matches a literal scan of S_n") {
  for (const PatternSpec& spec : {kAdd32, kMono32, kAdd43}) {
    for (Value n = 3; n <= 6; ++n) {
      std::uint64_t best = UINT64_MAX;
      for_each_permutation(n, [&](const Permutation& p) {
        best = std::min(best, naive_count_hits(p, spec));
      });
      CHECK(min_count(n, spec).minimum == best);
    }
  }
}

TEST_CASE("search checkpoints round-trip") {
  const std::string path = "/tmp/permarith_test_search.ckpt";

  SearchState st = make_search_state(18, kMono32);
  SearchBudget slice;
  slice.max_nodes = 123;
  run_avoider_search(st, slice);
  REQUIRE(!st.frontier.empty());

  save_search_checkpoint(path, st);
  const SearchState back = load_search_checkpoint(path);
  CHECK(back == st);

  // resuming from the file reaches the same terminal answer
  SearchState resumed = back;
  SearchOutcome o;
  do {
    o = run_avoider_search(resumed, slice);
  } while (o.status == SearchStatus::inconclusive);
  CHECK(o.status == SearchStatus::exhausted);
  CHECK(o.nodes_explored == exists_avoider(18, kMono32).nodes_explored);
  std::remove(path.c_str());
}

TEST_CASE("threshold checkpoints round-trip") {
  const std::string path = "/tmp/permarith_test_threshold.ckpt";

  ThresholdState st = make_threshold_state(kMono32, 1, 20);
  SearchBudget slice;
  slice.max_nodes = 500;
  const ThresholdOutcome first = run_threshold(st, slice);
  REQUIRE(!first.resolved());

  save_threshold_checkpoint(path, st);
  const ThresholdState back = load_threshold_checkpoint(path);
  CHECK(back == st);

  ThresholdState resumed = back;
  ThresholdOutcome o = run_threshold(resumed, slice);
  while (!o.resolved()) o = run_threshold(resumed, slice);
  CHECK(o.result->threshold == 18);
  std::remove(path.c_str());

  CHECK_THROWS(load_threshold_checkpoint("/tmp/permarith_does_not_exist.ckpt"));
}

TEST_CASE("checkpoint files reject mode confusion and corruption") {
  const std::string path = "/tmp/permarith_test_mode.ckpt";
  SearchState st = make_search_state(6, kAdd32);
  save_search_checkpoint(path, st);
  CHECK_THROWS_AS(load_threshold_checkpoint(path), std::invalid_argument);

  {
    std::ofstream f(path);
    f << "not a checkpoint\n";
  }
  CHECK_THROWS_AS(load_search_checkpoint(path), std::invalid_argument);
  std::remove(path.c_str());
}
