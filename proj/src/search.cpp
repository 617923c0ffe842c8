#include "permarith/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <deque>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace permarith {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::avoider_found: return "avoider_found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Relation sets regrouped for insertion-order search: values are inserted in
// increasing value order, so a set first becomes fully placed when its
// largest value goes in. Checking each set once, at that moment, is sound
// and complete because later insertions never change the relative order of
// already-placed values.
struct Constraint {
  std::vector<int> others;  // the set minus its max, ascending by value
  int anchor = 0;
};

struct Tables {
  int n = 0;
  PatternSpec spec;
  std::vector<std::vector<Constraint>> by_max;
};

Tables build_tables(Value n, const PatternSpec& spec) {
  Tables t;
  t.n = static_cast<int>(n);
  t.spec = spec;
  t.by_max.resize(static_cast<std::size_t>(n) + 1);
  for_each_relation_set(n, spec, [&](const RelationSet& rs) {
    Constraint c;
    const Value mx = rs.values.back();
    c.others.reserve(rs.values.size() - 1);
    for (Value v : rs.values) {
      if (v != mx) c.others.push_back(static_cast<int>(v));
    }
    c.anchor = static_cast<int>(rs.anchor);
    t.by_max[static_cast<std::size_t>(mx)].push_back(std::move(c));
  });
  return t;
}

struct Control {
  std::atomic<std::uint64_t> nodes{0};
  std::optional<std::uint64_t> max_nodes;
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> found{false};
  std::atomic<bool> aborted{false};
  std::atomic<bool> time_tripped{false};
  std::mutex mu;
  std::optional<Permutation> witness;
  std::vector<std::vector<int>> leftover;
};

enum class Tri { ok, budget, found_elsewhere };
enum class Result { found, exhausted, stop_budget, stop_found };

class Worker {
 public:
  Worker(const Tables& t, bool break_symmetry, Control& ctl)
      : t_(t), break_symmetry_(break_symmetry), ctl_(ctl) {}

  // Explores the subtree pending under `prefix` (whose final placement has
  // not been counted yet). On a budget stop the still-pending prefixes are
  // flushed to the shared leftover list in DFS order.
  Result explore(const std::vector<int>& prefix) {
    reset();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const int v = static_cast<int>(i) + 1;
      const auto [lo, hi] = allowed_range(v);
      const int g = prefix[i];
      if (g < lo || g > hi) {
        throw std::invalid_argument("search frontier prefix violates the pattern constraints");
      }
      if (i + 1 == prefix.size()) {
        const Tri tri = try_consume();
        if (tri == Tri::found_elsewhere) return Result::stop_found;
        if (tri == Tri::budget) {
          local_leftover_.push_back(prefix);
          flush_leftover();
          return Result::stop_budget;
        }
      }
      place(v, g);
      path_.push_back(g);
    }
    Result r;
    if (static_cast<int>(prefix.size()) == t_.n) {
      r = report_found();
    } else {
      r = dfs(static_cast<int>(prefix.size()) + 1);
    }
    flush_leftover();
    return r;
  }

  // Replaces a pending prefix by its children one level deeper, consuming
  // the prefix's own pending placement. children_out may come back empty
  // (dead subtree).
  Tri expand(const std::vector<int>& prefix, std::vector<std::vector<int>>& children_out) {
    reset();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const int v = static_cast<int>(i) + 1;
      const auto [lo, hi] = allowed_range(v);
      const int g = prefix[i];
      if (g < lo || g > hi) {
        throw std::invalid_argument("search frontier prefix violates the pattern constraints");
      }
      if (i + 1 == prefix.size()) {
        const Tri tri = try_consume();
        if (tri != Tri::ok) return tri;
      }
      place(v, g);
    }
    if (static_cast<int>(prefix.size()) == t_.n) {
      report_found();
      return Tri::found_elsewhere;
    }
    const int v = static_cast<int>(prefix.size()) + 1;
    const auto [lo, hi] = allowed_range(v);
    for (int g = lo; g <= hi; ++g) {
      std::vector<int> child = prefix;
      child.push_back(g);
      children_out.push_back(std::move(child));
    }
    return Tri::ok;
  }

 private:
  void reset() {
    pos_.assign(static_cast<std::size_t>(t_.n) + 1, 0);
    path_.clear();
  }

  Tri try_consume() {
    if (ctl_.found.load(std::memory_order_relaxed)) return Tri::found_elsewhere;
    if (ctl_.aborted.load(std::memory_order_relaxed)) return Tri::budget;
    if ((++ticker_ & 1023) == 0 && ctl_.deadline && Clock::now() > *ctl_.deadline) {
      ctl_.time_tripped.store(true);
      ctl_.aborted.store(true);
      return Tri::budget;
    }
    if (ctl_.max_nodes) {
      const std::uint64_t prev = ctl_.nodes.fetch_add(1, std::memory_order_relaxed);
      if (prev >= *ctl_.max_nodes) {
        ctl_.nodes.fetch_sub(1, std::memory_order_relaxed);
        ctl_.aborted.store(true);
        return Tri::budget;
      }
    } else {
      ctl_.nodes.fetch_add(1, std::memory_order_relaxed);
    }
    return Tri::ok;
  }

  // Feasible insertion gaps for value v given the current partial order.
  // Every constraint cuts the gap set down to an interval, so the result is
  // a single range (possibly empty, lo > hi).
  std::pair<int, int> allowed_range(int v) const {
    const int len = v - 1;
    int lo = 0;
    int hi = len;
    if (break_symmetry_ && v == 2) lo = std::max(lo, pos_[1]);
    for (const Constraint& c : t_.by_max[static_cast<std::size_t>(v)]) {
      if (t_.spec.monotone) {
        bool inc = true, dec = true;
        int prev = pos_[static_cast<std::size_t>(c.others[0])];
        for (std::size_t i = 1; i < c.others.size(); ++i) {
          const int q = pos_[static_cast<std::size_t>(c.others[i])];
          if (q < prev) {
            inc = false;
          } else {
            dec = false;
          }
          prev = q;
        }
        const int pl = pos_[static_cast<std::size_t>(c.others.back())];
        if (inc) {
          hi = std::min(hi, pl - 1);  // v after the chain tail would read increasing
        } else if (dec) {
          lo = std::max(lo, pl);      // v before the chain tail would read decreasing
        }
      } else if (c.anchor == v) {
        int mn = INT_MAX, mx = 0;
        for (const int u : c.others) {
          const int q = pos_[static_cast<std::size_t>(u)];
          mn = std::min(mn, q);
          mx = std::max(mx, q);
        }
        // v itself is the anchor: it must land strictly between the others.
        lo = std::max(lo, mn);
        hi = std::min(hi, mx - 1);
      } else {
        const int pm = pos_[static_cast<std::size_t>(c.anchor)];
        bool m_first = true, m_last = true;
        for (const int u : c.others) {
          if (u == c.anchor) continue;
          if (pos_[static_cast<std::size_t>(u)] < pm) {
            m_first = false;
          } else {
            m_last = false;
          }
        }
        if (m_first) {
          hi = std::min(hi, pm - 1);  // keep v left of the anchor
        } else if (m_last) {
          lo = std::max(lo, pm);      // keep v right of the anchor
        }
      }
      if (lo > hi) break;
    }
    return {lo, hi};
  }

  void place(int v, int g) {
    for (int u = 1; u < v; ++u) {
      if (pos_[static_cast<std::size_t>(u)] > g) ++pos_[static_cast<std::size_t>(u)];
    }
    pos_[static_cast<std::size_t>(v)] = g + 1;
  }

  void unplace(int v) {
    const int q = pos_[static_cast<std::size_t>(v)];
    pos_[static_cast<std::size_t>(v)] = 0;
    for (int u = 1; u < v; ++u) {
      if (pos_[static_cast<std::size_t>(u)] > q) --pos_[static_cast<std::size_t>(u)];
    }
  }

  Result report_found() {
    std::lock_guard<std::mutex> lock(ctl_.mu);
    if (!ctl_.found.load()) {
      std::vector<Value> vals(static_cast<std::size_t>(t_.n));
      for (int v = 1; v <= t_.n; ++v) {
        vals[static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)] - 1)] = v;
      }
      ctl_.witness = Permutation(std::move(vals));
      ctl_.found.store(true);
    }
    return Result::found;
  }

  Result dfs(int v) {
    if (v > t_.n) return report_found();
    const auto [lo, hi] = allowed_range(v);
    for (int g = lo; g <= hi; ++g) {
      const Tri tri = try_consume();
      if (tri == Tri::found_elsewhere) return Result::stop_found;
      if (tri == Tri::budget) {
        dump_pending(g, hi);
        return Result::stop_budget;
      }
      place(v, g);
      path_.push_back(g);
      const Result r = dfs(v + 1);
      path_.pop_back();
      unplace(v);
      if (r == Result::found || r == Result::stop_found) return r;
      if (r == Result::stop_budget) {
        dump_pending(g + 1, hi);
        return r;
      }
    }
    return Result::exhausted;
  }

  void dump_pending(int from, int to) {
    for (int g = from; g <= to; ++g) {
      std::vector<int> prefix = path_;
      prefix.push_back(g);
      local_leftover_.push_back(std::move(prefix));
    }
  }

  void flush_leftover() {
    if (local_leftover_.empty()) return;
    std::lock_guard<std::mutex> lock(ctl_.mu);
    for (auto& p : local_leftover_) ctl_.leftover.push_back(std::move(p));
    local_leftover_.clear();
  }

  const Tables& t_;
  bool break_symmetry_;
  Control& ctl_;
  std::vector<int> pos_;
  std::vector<int> path_;
  std::vector<std::vector<int>> local_leftover_;
  std::uint64_t ticker_ = 0;
};

// Grows the prefix pool until it is wide enough to split across threads.
// Expansion consumes each parent's pending placement, so node totals stay
// consistent with a sequential run.
void expand_pool(const Tables& t, bool break_symmetry, Control& ctl,
                 std::vector<std::vector<int>>& pool, std::size_t target) {
  std::deque<std::vector<int>> queue(pool.begin(), pool.end());
  std::vector<std::vector<int>> done;
  Worker w(t, break_symmetry, ctl);
  while (!queue.empty() && queue.size() + done.size() < target) {
    std::vector<int> p = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(p.size()) >= t.n) {
      done.push_back(std::move(p));
      continue;
    }
    std::vector<std::vector<int>> children;
    const Tri tri = w.expand(p, children);
    if (tri == Tri::found_elsewhere) return;  // witness already recorded
    if (tri == Tri::budget) {
      done.push_back(std::move(p));  // pending placement not consumed; keep it
      break;
    }
    for (auto& c : children) queue.push_back(std::move(c));
  }
  pool.clear();
  for (auto& p : done) pool.push_back(std::move(p));
  for (auto& p : queue) pool.push_back(std::move(p));
}

}  // namespace

SearchState make_search_state(Value n, const PatternSpec& spec, const SearchOptions& opts) {
  if (n < 1) throw std::invalid_argument("search: n must be >= 1");
  make_pattern_spec(spec.k, spec.ell, spec.flavor, spec.monotone);  // validate
  SearchState st;
  st.n = n;
  st.spec = spec;
  st.break_reversal_symmetry = opts.break_reversal_symmetry;
  st.frontier = SearchFrontier::whole_tree();
  st.nodes = 0;
  return st;
}

SearchOutcome run_avoider_search(SearchState& state, const SearchBudget& budget,
                                 const SearchOptions& opts) {
  const auto start = Clock::now();
  SearchOutcome out;
  out.parallel = opts.threads > 1;
  if (state.frontier.empty()) {
    // Nothing pending: the state was already searched to exhaustion.
    out.status = SearchStatus::exhausted;
    out.nodes_explored = state.nodes;
    return out;
  }

  const Tables tables = build_tables(state.n, state.spec);
  Control ctl;
  ctl.max_nodes = budget.max_nodes;
  if (budget.max_seconds) {
    ctl.deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(*budget.max_seconds));
  }

  std::vector<std::vector<int>> pool = std::move(state.frontier.prefixes);
  state.frontier.prefixes.clear();

  const int threads = std::max(1, opts.threads);
  std::size_t next_unclaimed = 0;
  if (threads == 1) {
    Worker w(tables, state.break_reversal_symmetry, ctl);
    std::size_t i = 0;
    for (; i < pool.size(); ++i) {
      if (ctl.found.load() || ctl.aborted.load()) break;
      w.explore(pool[i]);
    }
    next_unclaimed = i;
  } else {
    expand_pool(tables, state.break_reversal_symmetry, ctl, pool, static_cast<std::size_t>(threads) * 16);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> crew;
    crew.reserve(static_cast<std::size_t>(threads));
    for (int ti = 0; ti < threads; ++ti) {
      crew.emplace_back([&] {
        Worker w(tables, state.break_reversal_symmetry, ctl);
        while (!ctl.found.load() && !ctl.aborted.load()) {
          const std::size_t i = next.fetch_add(1);
          if (i >= pool.size()) break;
          w.explore(pool[i]);
        }
      });
    }
    for (auto& th : crew) th.join();
    next_unclaimed = std::min(next.load(), pool.size());
  }

  state.nodes += ctl.nodes.load();
  out.nodes_explored = state.nodes;
  out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();

  if (ctl.found.load()) {
    out.status = SearchStatus::avoider_found;
    out.witness = ctl.witness;
    if (count_hits(*out.witness, state.spec) != 0) {
      throw std::logic_error("search returned a witness that fails re-verification");
    }
    state.frontier.prefixes.clear();
  } else if (ctl.aborted.load()) {
    out.status = SearchStatus::inconclusive;
    out.note = ctl.time_tripped.load() ? "time budget exceeded" : "node budget exceeded";
    state.frontier.prefixes = std::move(ctl.leftover);
    for (std::size_t i = next_unclaimed; i < pool.size(); ++i) {
      state.frontier.prefixes.push_back(std::move(pool[i]));
    }
  } else {
    out.status = SearchStatus::exhausted;
  }
  return out;
}

SearchOutcome exists_avoider(Value n, const PatternSpec& spec, const SearchBudget& budget,
                             const SearchOptions& opts) {
  SearchState st = make_search_state(n, spec, opts);
  return run_avoider_search(st, budget, opts);
}

ThresholdState make_threshold_state(const PatternSpec& spec, Value n_start, Value n_max,
                                    const SearchOptions& opts) {
  if (n_start < 1 || n_start > n_max) {
    throw std::invalid_argument("threshold: need 1 <= n_start <= n_max");
  }
  ThresholdState st;
  st.spec = spec;
  st.n_start = n_start;
  st.n_max = n_max;
  st.current = make_search_state(n_start, spec, opts);
  return st;
}

ThresholdOutcome run_threshold(ThresholdState& state, const SearchBudget& budget,
                               const SearchOptions& opts) {
  const auto start = Clock::now();
  std::uint64_t nodes_used = 0;

  auto remaining_budget = [&]() -> std::optional<SearchBudget> {
    SearchBudget rem;
    if (budget.max_nodes) {
      if (nodes_used >= *budget.max_nodes) return std::nullopt;
      rem.max_nodes = *budget.max_nodes - nodes_used;
    }
    if (budget.max_seconds) {
      const double used = std::chrono::duration<double>(Clock::now() - start).count();
      if (used >= *budget.max_seconds) return std::nullopt;
      rem.max_seconds = *budget.max_seconds - used;
    }
    return rem;
  };

  ThresholdOutcome out;
  out.per_n = state.per_n;

  while (true) {
    if (state.current.n > state.n_max) {
      out.unresolved_reason = "every n up to n_max=" + std::to_string(state.n_max) +
                              " admits an avoider";
      return out;
    }
    const auto rem = remaining_budget();
    if (!rem) {
      out.unresolved_reason = "budget exhausted before n=" + std::to_string(state.current.n) +
                              " was decided";
      return out;
    }
    const std::uint64_t before = state.current.nodes;
    const SearchOutcome so = run_avoider_search(state.current, *rem, opts);
    nodes_used += state.current.nodes - before;

    if (so.status == SearchStatus::inconclusive) {
      out.unresolved_reason = "search at n=" + std::to_string(state.current.n) +
                              " inconclusive: " + so.note;
      return out;
    }

    PerNStat stat{state.current.n, so.status, state.current.nodes, so.elapsed_seconds};
    state.per_n.push_back(stat);
    out.per_n = state.per_n;

    if (so.status == SearchStatus::exhausted) {
      const Value n_star = state.current.n;
      if (!state.prev_witness) {
        if (n_star == 1) {
          out.unresolved_reason = "exhausted at n=1; no shorter avoider exists";
          return out;
        }
        // n_start sat above the first exhausted level; fetch the avoider one
        // level down to complete the result.
        const auto rem2 = remaining_budget();
        if (!rem2) {
          out.unresolved_reason = "budget exhausted before the n=" + std::to_string(n_star - 1) +
                                  " avoider was recovered";
          return out;
        }
        const SearchOutcome below = exists_avoider(n_star - 1, state.spec, *rem2, opts);
        if (below.status != SearchStatus::avoider_found) {
          out.unresolved_reason =
              below.status == SearchStatus::exhausted
                  ? "S_" + std::to_string(n_star - 1) +
                        " has no avoider either; the true threshold lies below n_start"
                  : "search below the exhausted level was inconclusive: " + below.note;
          return out;
        }
        state.prev_witness = below.witness;
      }
      ThresholdResult res{state.spec, n_star, *state.prev_witness, state.per_n};
      out.result = std::move(res);
      return out;
    }

    state.prev_witness = so.witness;
    const bool sym = state.current.break_reversal_symmetry;
    state.current = make_search_state(state.current.n + 1, state.spec, opts);
    state.current.break_reversal_symmetry = sym;
  }
}

ThresholdOutcome find_threshold(const PatternSpec& spec, Value n_start, Value n_max,
                                const SearchBudget& budget, const SearchOptions& opts) {
  ThresholdState st = make_threshold_state(spec, n_start, n_max, opts);
  return run_threshold(st, budget, opts);
}

MinCountResult min_count(Value n, const PatternSpec& spec) {
  if (n < 1) throw std::invalid_argument("min_count: n must be >= 1");
  if (n > kMaxExhaustiveMinCountN) {
    throw std::invalid_argument(
        "min_count: n=" + std::to_string(n) + " exceeds the certified exhaustive range (n <= " +
        std::to_string(kMaxExhaustiveMinCountN) + "); a certified branch-and-bound is not built");
  }
  const std::vector<RelationSet> sets = relation_sets(n, spec);

  std::vector<Value> vals(static_cast<std::size_t>(n));
  for (Value i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);

  std::optional<std::uint64_t> best;
  std::vector<Value> best_vals;
  do {
    for (Value i = 0; i < n; ++i) pos[static_cast<std::size_t>(vals[static_cast<std::size_t>(i)])] = static_cast<int>(i) + 1;
    std::uint64_t count = 0;
    for (const RelationSet& rs : sets) {
      if (spec.monotone) {
        bool inc = true, dec = true;
        int prev = pos[static_cast<std::size_t>(rs.values.front())];
        for (std::size_t i = 1; i < rs.values.size(); ++i) {
          const int q = pos[static_cast<std::size_t>(rs.values[i])];
          if (q < prev) inc = false;
          else dec = false;
          prev = q;
        }
        if (inc || dec) ++count;
      } else {
        const int pm = pos[static_cast<std::size_t>(rs.anchor)];
        bool first = true, last = true;
        for (const Value v : rs.values) {
          if (v == rs.anchor) continue;
          if (pos[static_cast<std::size_t>(v)] < pm) first = false;
          else last = false;
        }
        if (first || last) ++count;
      }
      if (best && count >= *best) break;  // can only grow
    }
    if (!best || count < *best) {
      best = count;
      best_vals = vals;
      if (count == 0) break;  // cannot improve on zero
    }
  } while (std::next_permutation(vals.begin(), vals.end()));

  MinCountResult res{n, spec, *best, Permutation(best_vals)};
  if (count_hits(res.argmin, spec) != res.minimum) {
    throw std::logic_error("min_count: fast path disagrees with count_hits");
  }
  return res;
}

// ---- checkpoint files -------------------------------------------------------

namespace {

constexpr const char* kCheckpointHeader = "permarith-checkpoint v1";

std::string encode_prefix(const std::vector<int>& p) {
  if (p.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os.str();
}

std::vector<int> decode_prefix(const std::string& s) {
  if (s == "-") return {};
  std::vector<int> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::string encode_values(const std::vector<Value>& vals) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) os << ',';
    os << vals[i];
  }
  return os.str();
}

std::vector<Value> decode_values(const std::string& s) {
  std::vector<Value> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

std::optional<SearchStatus> parse_status(const std::string& s) {
  if (s == "avoider_found") return SearchStatus::avoider_found;
  if (s == "exhausted") return SearchStatus::exhausted;
  if (s == "inconclusive") return SearchStatus::inconclusive;
  return std::nullopt;
}

struct KvFile {
  std::vector<std::pair<std::string, std::string>> lines;

  std::string require(const std::string& key) const {
    for (const auto& [k, v] : lines) {
      if (k == key) return v;
    }
    throw std::invalid_argument("checkpoint: missing field '" + key + "'");
  }
  std::optional<std::string> find(const std::string& key) const {
    for (const auto& [k, v] : lines) {
      if (k == key) return v;
    }
    return std::nullopt;
  }
  std::vector<std::string> all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : lines) {
      if (k == key) out.push_back(v);
    }
    return out;
  }
};

KvFile read_kv_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open checkpoint file: " + path);
  std::string line;
  if (!std::getline(f, line) || line != kCheckpointHeader) {
    throw std::invalid_argument("not a permarith checkpoint file: " + path);
  }
  KvFile kv;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto sep = line.find(" = ");
    if (sep == std::string::npos) {
      throw std::invalid_argument("checkpoint: malformed line '" + line + "'");
    }
    kv.lines.emplace_back(line.substr(0, sep), line.substr(sep + 3));
  }
  return kv;
}

void write_spec_fields(std::ostream& f, const PatternSpec& spec) {
  f << "k = " << spec.k << "\n";
  f << "ell = " << spec.ell << "\n";
  f << "flavor = " << flavor_code(spec.flavor) << "\n";
  f << "monotone = " << (spec.monotone ? 1 : 0) << "\n";
}

PatternSpec read_spec_fields(const KvFile& kv) {
  const auto flavor = parse_flavor(kv.require("flavor"));
  if (!flavor) throw std::invalid_argument("checkpoint: bad flavor");
  return make_pattern_spec(std::stoi(kv.require("k")), std::stoll(kv.require("ell")), *flavor,
                           std::stoi(kv.require("monotone")) != 0);
}

void write_search_fields(std::ostream& f, const SearchState& st) {
  f << "n = " << st.n << "\n";
  f << "symmetry_break = " << (st.break_reversal_symmetry ? 1 : 0) << "\n";
  f << "nodes = " << st.nodes << "\n";
  for (const auto& p : st.frontier.prefixes) {
    f << "pending = " << encode_prefix(p) << "\n";
  }
}

SearchState read_search_fields(const KvFile& kv, const PatternSpec& spec) {
  SearchState st;
  st.n = std::stoll(kv.require("n"));
  st.spec = spec;
  st.break_reversal_symmetry = std::stoi(kv.require("symmetry_break")) != 0;
  st.nodes = std::stoull(kv.require("nodes"));
  st.frontier.prefixes.clear();
  for (const std::string& s : kv.all("pending")) {
    st.frontier.prefixes.push_back(decode_prefix(s));
  }
  return st;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void save_search_checkpoint(const std::string& path, const SearchState& state) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write checkpoint file: " + path);
  f << kCheckpointHeader << "\n";
  f << "mode = search\n";
  write_spec_fields(f, state.spec);
  write_search_fields(f, state);
}

SearchState load_search_checkpoint(const std::string& path) {
  const KvFile kv = read_kv_file(path);
  if (kv.require("mode") != "search") {
    throw std::invalid_argument("checkpoint mode is not 'search'");
  }
  return read_search_fields(kv, read_spec_fields(kv));
}

void save_threshold_checkpoint(const std::string& path, const ThresholdState& state) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write checkpoint file: " + path);
  f << kCheckpointHeader << "\n";
  f << "mode = threshold\n";
  write_spec_fields(f, state.spec);
  f << "n_start = " << state.n_start << "\n";
  f << "n_max = " << state.n_max << "\n";
  if (state.prev_witness) {
    f << "prev_witness = " << encode_values(state.prev_witness->values()) << "\n";
  }
  for (const PerNStat& s : state.per_n) {
    f << "stat = " << s.n << ' ' << to_string(s.status) << ' ' << s.nodes << ' '
      << fmt_double(s.elapsed_seconds) << "\n";
  }
  write_search_fields(f, state.current);
}

ThresholdState load_threshold_checkpoint(const std::string& path) {
  const KvFile kv = read_kv_file(path);
  if (kv.require("mode") != "threshold") {
    throw std::invalid_argument("checkpoint mode is not 'threshold'");
  }
  const PatternSpec spec = read_spec_fields(kv);
  ThresholdState st;
  st.spec = spec;
  st.n_start = std::stoll(kv.require("n_start"));
  st.n_max = std::stoll(kv.require("n_max"));
  if (const auto w = kv.find("prev_witness")) {
    st.prev_witness = Permutation(decode_values(*w));
  }
  for (const std::string& line : kv.all("stat")) {
    std::istringstream is(line);
    Value n = 0;
    std::string status_str;
    std::uint64_t nodes = 0;
    double elapsed = 0.0;
    if (!(is >> n >> status_str >> nodes >> elapsed)) {
      throw std::invalid_argument("checkpoint: malformed stat line '" + line + "'");
    }
    const auto status = parse_status(status_str);
    if (!status) throw std::invalid_argument("checkpoint: bad status '" + status_str + "'");
    st.per_n.push_back(PerNStat{n, *status, nodes, elapsed});
  }
  st.current = read_search_fields(kv, spec);
  return st;
}

}  // namespace permarith
