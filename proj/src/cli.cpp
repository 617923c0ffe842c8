#include "permarith/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permarith/bounds.hpp"
#include "permarith/constructions.hpp"
#include "permarith/core.hpp"
#include "permarith/report.hpp"
#include "permarith/search.hpp"

namespace permarith {

namespace {

using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kValuedOptions = {
    "--perm", "--perm-file", "--corpus-file", "--k",      "--ell",          "--flavor",
    "--n",    "--a",         "--n-start",     "--n-max",  "--budget-nodes", "--budget-ms",
    "--threads", "--checkpoint", "--id",      "--family", "--iterations",   "--out",
    "--f"};

const std::set<std::string> kBoolOptions = {"--monotone", "--pretty", "--all-builtin",
                                            "--exact-nk", "--no-symmetry-break"};

struct Args {
  std::string command;
  std::map<std::string, std::string> valued;
  std::set<std::string> flags;

  bool has(const std::string& name) const {
    return valued.count(name) != 0 || flags.count(name) != 0;
  }
  std::optional<std::string> value(const std::string& name) const {
    const auto it = valued.find(name);
    if (it == valued.end()) return std::nullopt;
    return it->second;
  }
  std::string require(const std::string& name) const {
    const auto v = value(name);
    if (!v) throw UsageError("missing required option " + name);
    return *v;
  }
};

Args parse_args(const std::vector<std::string>& argv) {
  if (argv.empty()) {
    throw UsageError(
        "usage: permarith <detect|count|search|threshold|min-count|bounds|construct|verify|corpus> "
        "[options]");
  }
  Args a;
  a.command = argv[0];
  for (std::size_t i = 1; i < argv.size(); ++i) {
    const std::string& tok = argv[i];
    if (kBoolOptions.count(tok)) {
      a.flags.insert(tok);
    } else if (kValuedOptions.count(tok)) {
      if (i + 1 >= argv.size()) throw UsageError("option " + tok + " needs a value");
      if (!a.valued.emplace(tok, argv[++i]).second) {
        throw UsageError("option " + tok + " given twice");
      }
    } else {
      throw UsageError("unknown option '" + tok + "'");
    }
  }
  return a;
}

long long parse_ll(const std::string& name, const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("option " + name + ": '" + s + "' is not an integer");
  }
}

double parse_double(const std::string& name, const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("option " + name + ": '" + s + "' is not a number");
  }
}

std::vector<Value> parse_value_list(const std::string& s) {
  std::vector<Value> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    out.push_back(parse_ll("--perm", tok));
  }
  if (out.empty()) throw UsageError("empty permutation");
  return out;
}

PatternSpec spec_from(const Args& a) {
  const int k = static_cast<int>(parse_ll("--k", a.require("--k")));
  const Value ell = a.value("--ell") ? parse_ll("--ell", *a.value("--ell")) : 2;
  Flavor flavor = Flavor::additive;
  if (const auto f = a.value("--flavor")) {
    const auto parsed = parse_flavor(*f);
    if (!parsed) throw UsageError("--flavor must be one of add|mul|inv");
    flavor = *parsed;
  }
  return make_pattern_spec(k, ell, flavor, a.flags.count("--monotone") != 0);
}

void add_spec_fields(RunReport& r, const PatternSpec& spec) {
  r.add("k", spec.k);
  r.add("ell", spec.ell);
  r.add("flavor", flavor_code(spec.flavor));
  r.add("monotone", spec.monotone);
}

std::string join_values(const std::vector<Value>& vals) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) os << ',';
    os << vals[i];
  }
  return os.str();
}

std::vector<Permutation> input_permutations(const Args& a) {
  const auto inline_perm = a.value("--perm");
  const auto file = a.value("--perm-file");
  if (inline_perm && file) throw UsageError("give either --perm or --perm-file, not both");
  std::vector<Permutation> out;
  if (inline_perm) {
    out.push_back(Permutation(parse_value_list(*inline_perm)));
  } else if (file) {
    std::ifstream f(*file);
    if (!f) throw UsageError("cannot open permutation file: " + *file);
    std::string line;
    while (std::getline(f, line)) {
      if (line.empty() || line[0] == '#') continue;
      out.push_back(Permutation(parse_value_list(line)));
    }
    if (out.empty()) throw UsageError("no permutations in " + *file);
  } else {
    throw UsageError("missing --perm or --perm-file");
  }
  return out;
}

SearchBudget budget_from(const Args& a) {
  SearchBudget b;
  if (const auto v = a.value("--budget-nodes")) {
    const long long nodes = parse_ll("--budget-nodes", *v);
    if (nodes < 0) throw UsageError("--budget-nodes must be >= 0");
    b.max_nodes = static_cast<std::uint64_t>(nodes);
  }
  if (const auto v = a.value("--budget-ms")) {
    const double ms = parse_double("--budget-ms", *v);
    if (ms < 0) throw UsageError("--budget-ms must be >= 0");
    b.max_seconds = ms / 1000.0;
  }
  return b;
}

SearchOptions options_from(const Args& a) {
  SearchOptions o;
  if (const auto v = a.value("--threads")) {
    o.threads = static_cast<int>(parse_ll("--threads", *v));
  } else if (const char* env = std::getenv("PERMARITH_THREADS")) {
    o.threads = std::max(1, std::atoi(env));
  }
  if (o.threads < 1) throw UsageError("--threads must be >= 1");
  o.break_reversal_symmetry = a.flags.count("--no-symmetry-break") == 0;
  return o;
}

void emit(const RunReport& r, const Args& a, std::ostream& out) {
  if (a.flags.count("--pretty")) {
    r.write_pretty(out);
  } else {
    r.write(out);
  }
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

RunReport base_report(const std::string& command) {
  RunReport r;
  r.add("command", command);
  r.add("version", std::string(kToolName) + " " + kToolVersion);
  return r;
}

void add_search_outcome(RunReport& r, const SearchOutcome& o) {
  r.add("status", to_string(o.status));
  if (o.witness) r.add("witness", join_values(o.witness->values()));
  if (!o.note.empty()) r.add("note", o.note);
  r.add("nodes", o.nodes_explored);
  r.add("parallel", o.parallel);
  r.add("elapsed_ms", o.elapsed_seconds * 1000.0);
}

void add_per_n_stats(RunReport& r, const std::vector<PerNStat>& stats) {
  for (const PerNStat& s : stats) {
    std::ostringstream os;
    os << to_string(s.status) << " nodes=" << s.nodes;
    char buf[48];
    std::snprintf(buf, sizeof buf, " elapsed_ms=%.3f", s.elapsed_seconds * 1000.0);
    os << buf;
    r.add("per_n." + std::to_string(s.n), os.str());
  }
}

// ---- commands ---------------------------------------------------------------

int cmd_detect(const Args& a, std::ostream& out) {
  const PatternSpec spec = spec_from(a);
  const std::vector<Permutation> perms = input_permutations(a);
  bool first = true;
  for (const Permutation& p : perms) {
    if (!first) out << "\n";
    first = false;
    const auto start = Clock::now();
    const std::optional<Hit> hit = find_hit(p, spec);
    RunReport r = base_report("detect");
    add_spec_fields(r, spec);
    r.add("perm", join_values(p.values()));
    r.add("result", hit ? "hit" : "none");
    if (hit) {
      r.add("hit.positions", join_values(hit->positions));
      r.add("hit.values", join_values(hit->values));
      r.add("hit.anchor", to_string(hit->anchor));
    }
    r.add("elapsed_ms", ms_since(start));
    emit(r, a, out);
  }
  return 0;
}

int cmd_count(const Args& a, std::ostream& out) {
  const PatternSpec spec = spec_from(a);
  const std::vector<Permutation> perms = input_permutations(a);
  bool first = true;
  for (const Permutation& p : perms) {
    if (!first) out << "\n";
    first = false;
    const auto start = Clock::now();
    const std::uint64_t c = count_hits(p, spec);
    RunReport r = base_report("count");
    add_spec_fields(r, spec);
    r.add("perm", join_values(p.values()));
    r.add("count", c);
    r.add("elapsed_ms", ms_since(start));
    emit(r, a, out);
  }
  return 0;
}

int cmd_search(const Args& a, std::ostream& out) {
  const PatternSpec spec = spec_from(a);
  const Value n = parse_ll("--n", a.require("--n"));
  const SearchBudget budget = budget_from(a);
  const SearchOptions opts = options_from(a);
  const auto checkpoint = a.value("--checkpoint");

  SearchState state = make_search_state(n, spec, opts);
  if (checkpoint) {
    std::ifstream probe(*checkpoint);
    if (probe.good()) {
      state = load_search_checkpoint(*checkpoint);
      if (state.n != n || !(state.spec == spec)) {
        throw UsageError("checkpoint " + *checkpoint + " was written for a different search");
      }
    }
  }

  const SearchOutcome o = run_avoider_search(state, budget, opts);

  RunReport r = base_report("search");
  add_spec_fields(r, spec);
  r.add("n", n);
  r.add("threads", opts.threads);
  add_search_outcome(r, o);

  if (o.status == SearchStatus::inconclusive) {
    if (checkpoint) {
      save_search_checkpoint(*checkpoint, state);
      r.add("checkpoint", *checkpoint);
    }
    emit(r, a, out);
    return 3;
  }
  if (checkpoint) std::remove(checkpoint->c_str());
  emit(r, a, out);
  return 0;
}

int cmd_threshold(const Args& a, std::ostream& out) {
  const PatternSpec spec = spec_from(a);
  const Value n_start = a.value("--n-start") ? parse_ll("--n-start", *a.value("--n-start")) : 1;
  const Value n_max = a.value("--n-max") ? parse_ll("--n-max", *a.value("--n-max")) : 64;
  const SearchBudget budget = budget_from(a);
  const SearchOptions opts = options_from(a);
  const auto checkpoint = a.value("--checkpoint");
  const auto start = Clock::now();

  ThresholdState state = make_threshold_state(spec, n_start, n_max, opts);
  if (checkpoint) {
    std::ifstream probe(*checkpoint);
    if (probe.good()) {
      state = load_threshold_checkpoint(*checkpoint);
      if (!(state.spec == spec) || state.n_start != n_start || state.n_max != n_max) {
        throw UsageError("checkpoint " + *checkpoint + " was written for a different threshold run");
      }
    }
  }

  const ThresholdOutcome o = run_threshold(state, budget, opts);

  RunReport r = base_report("threshold");
  add_spec_fields(r, spec);
  r.add("n_start", n_start);
  r.add("n_max", n_max);
  r.add("threads", opts.threads);
  r.add("resolved", o.resolved());
  if (o.resolved()) {
    r.add("threshold", o.result->threshold);
    r.add("largest_avoider", join_values(o.result->largest_avoider.values()));
  } else {
    r.add("reason", o.unresolved_reason);
  }
  add_per_n_stats(r, o.per_n);
  r.add("elapsed_ms", ms_since(start));

  if (!o.resolved()) {
    // A budget interruption is resumable; a completed-but-unresolved scan is not.
    const bool resumable = !state.current.frontier.empty() && state.current.n <= state.n_max;
    if (checkpoint && resumable) {
      save_threshold_checkpoint(*checkpoint, state);
      r.add("checkpoint", *checkpoint);
    }
    emit(r, a, out);
    return 3;
  }
  if (checkpoint) std::remove(checkpoint->c_str());
  emit(r, a, out);
  return 0;
}

int cmd_min_count(const Args& a, std::ostream& out) {
  const PatternSpec spec = spec_from(a);
  const Value n = parse_ll("--n", a.require("--n"));
  const auto start = Clock::now();
  const MinCountResult res = min_count(n, spec);
  RunReport r = base_report("min-count");
  add_spec_fields(r, spec);
  r.add("n", n);
  r.add("minimum", res.minimum);
  r.add("argmin", join_values(res.argmin.values()));
  r.add("elapsed_ms", ms_since(start));
  emit(r, a, out);
  return 0;
}

int cmd_bounds(const Args& a, std::ostream& out) {
  const int k = static_cast<int>(parse_ll("--k", a.require("--k")));
  const Value ell = a.value("--ell") ? parse_ll("--ell", *a.value("--ell")) : 2;
  std::optional<Value> n;
  if (const auto v = a.value("--n")) n = parse_ll("--n", *v);
  std::optional<double> f_known;
  if (const auto v = a.value("--f")) f_known = parse_double("--f", *v);
  const bool monotone = a.flags.count("--monotone") != 0;
  const bool exact = a.flags.count("--exact-nk") != 0;

  const BoundReport br = make_bound_report(k, ell, n, monotone, f_known, exact);
  RunReport r = base_report("bounds");
  r.add("k", br.k);
  r.add("ell", br.ell);
  if (br.n) r.add("n", *br.n);
  r.add("monotone", br.monotone);
  r.add("log_base", "natural");
  for (const auto& [name, value] : br.entries) r.add(name, value);
  emit(r, a, out);
  return 0;
}

int cmd_construct(const Args& a, std::ostream& out) {
  const std::string family = a.require("--family");
  RunReport r = base_report("construct");
  r.add("family", family);
  if (family == "staircase") {
    const int k = static_cast<int>(parse_ll("--k", a.require("--k")));
    const Permutation p = staircase_avoider(k);
    r.add("k", k);
    r.add("n", p.n());
    r.add("perm", join_values(p.values()));
  } else if (family == "odda") {
    Permutation p(parse_value_list(a.require("--perm")));
    const long long iters =
        a.value("--iterations") ? parse_ll("--iterations", *a.value("--iterations")) : 1;
    if (iters < 1) throw UsageError("--iterations must be >= 1");
    r.add("seed", join_values(p.values()));
    r.add("iterations", iters);
    for (long long i = 0; i < iters; ++i) p = odda_double(p);
    r.add("n", p.n());
    r.add("perm", join_values(p.values()));
  } else if (family == "two-run") {
    const Value n = parse_ll("--n", a.require("--n"));
    const Value run_a = parse_ll("--a", a.require("--a"));
    const Permutation p = two_run_permutation(n, run_a);
    r.add("n", n);
    r.add("a", run_a);
    r.add("perm", join_values(p.values()));
  } else if (family == "identity") {
    const Value n = parse_ll("--n", a.require("--n"));
    r.add("n", n);
    r.add("perm", join_values(identity_permutation(n).values()));
  } else if (family == "witness") {
    const WitnessRecord w = builtin_witness(a.require("--id"));
    r.add("id", w.id);
    add_spec_fields(r, w.spec);
    r.add("n", w.n);
    r.add("claim", w.claim);
    r.add("perm", join_values(w.permutation.values()));
    r.add("note", w.note);
  } else {
    throw UsageError("unknown family '" + family +
                     "' (expected staircase|odda|two-run|identity|witness)");
  }
  emit(r, a, out);
  return 0;
}

int cmd_verify(const Args& a, std::ostream& out) {
  const bool builtin = a.flags.count("--all-builtin") != 0;
  const auto file = a.value("--corpus-file");
  if (builtin == static_cast<bool>(file)) {
    throw UsageError("verify needs exactly one of --all-builtin or --corpus-file");
  }
  const auto start = Clock::now();
  std::vector<WitnessRecord> records;
  if (builtin) {
    records = builtin_corpus();
  } else {
    std::ifstream f(*file);
    if (!f) throw UsageError("cannot open corpus file: " + *file);
    records = read_corpus(f);
  }

  RunReport r = base_report("verify");
  r.add("source", builtin ? std::string("builtin") : *file);
  int passed = 0;
  for (const WitnessRecord& w : records) {
    const std::uint64_t c = count_hits(w.permutation, w.spec);
    const bool ok = (w.claim == "avoider") && c == 0;
    if (ok) ++passed;
    std::ostringstream os;
    os << (ok ? "pass" : "FAIL") << " n=" << w.n << " k=" << w.spec.k << " ell=" << w.spec.ell
       << " flavor=" << flavor_code(w.spec.flavor) << " monotone=" << (w.spec.monotone ? 1 : 0)
       << " count=" << c;
    r.add("record." + w.id, os.str());
  }
  r.add("passed", passed);
  r.add("total", static_cast<long long>(records.size()));
  r.add("summary", std::to_string(passed) + "/" + std::to_string(records.size()) +
                       " witnesses pass");
  r.add("elapsed_ms", ms_since(start));
  emit(r, a, out);
  return passed == static_cast<int>(records.size()) ? 0 : 1;
}

int cmd_corpus(const Args& a, std::ostream& out) {
  const auto path = a.value("--out");
  if (!path) {
    write_corpus(out, builtin_corpus());
    return 0;
  }
  std::ofstream f(*path);
  if (!f) throw UsageError("cannot write corpus file: " + *path);
  write_corpus(f, builtin_corpus());
  RunReport r = base_report("corpus");
  r.add("out", *path);
  r.add("records", static_cast<long long>(builtin_corpus().size()));
  emit(r, a, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const Args a = parse_args(args);
    if (a.command == "detect") return cmd_detect(a, out);
    if (a.command == "count") return cmd_count(a, out);
    if (a.command == "search") return cmd_search(a, out);
    if (a.command == "threshold") return cmd_threshold(a, out);
    if (a.command == "min-count") return cmd_min_count(a, out);
    if (a.command == "bounds") return cmd_bounds(a, out);
    if (a.command == "construct") return cmd_construct(a, out);
    if (a.command == "verify") return cmd_verify(a, out);
    if (a.command == "corpus") return cmd_corpus(a, out);
    throw UsageError("unknown command '" + a.command + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace permarith
