#include "permarith/constructions.hpp"

#include <algorithm>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace permarith {

Permutation staircase_avoider(int k) {
  if (k < 3) throw std::invalid_argument("staircase_avoider: k must be >= 3");
  const Value kk = k;
  const Value m = (kk - 1) * (3 * kk - 4) / 2;
  std::vector<Value> vals;
  vals.reserve(static_cast<std::size_t>(m - 1));
  for (Value v = 1; v <= kk - 2; ++v) vals.push_back(v);
  for (Value v = m - 1; v >= kk - 1; --v) vals.push_back(v);
  return Permutation(std::move(vals));
}

Permutation odda_double(const Permutation& p) {
  std::vector<Value> vals;
  vals.reserve(p.size() * 2);
  for (Value v : p.values()) vals.push_back(2 * v);
  for (Value v : p.values()) vals.push_back(2 * v - 1);
  return Permutation(std::move(vals));
}

Permutation two_run_permutation(Value n, Value a) {
  const Value half_up = (n + 1) / 2;
  if (a < 2 || a > half_up) {
    throw std::invalid_argument("two_run_permutation: a must be in [2, ceil(n/2)]");
  }
  const Value c = (n + a - 1) / a;  // ceil(n/a)
  std::vector<Value> vals;
  vals.reserve(static_cast<std::size_t>(n));
  for (Value v = c; v >= 1; --v) vals.push_back(v);
  for (Value v = n; v >= c + 1; --v) vals.push_back(v);
  return Permutation(std::move(vals));
}

Permutation identity_permutation(Value n) {
  if (n < 1) throw std::invalid_argument("identity_permutation: n must be >= 1");
  std::vector<Value> vals(static_cast<std::size_t>(n));
  for (Value i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(vals));
}

namespace {

// The length-59 inverse-additive avoider is pinned only on the 28 values that
// can occur in a qualifying triple; the canonical completion appends the
// remaining values of {1..59} in increasing order.
Permutation s59_completion() {
  const std::vector<Value> block = {27, 21, 14, 56, 45, 24, 18, 42, 15, 6,  10, 2,  7,  8,
                                    40, 5,  4,  20, 3,  16, 12, 30, 9,  36, 48, 28, 35, 54};
  std::vector<bool> used(60, false);
  std::vector<Value> vals = block;
  for (Value v : block) used[static_cast<std::size_t>(v)] = true;
  for (Value v = 1; v <= 59; ++v) {
    if (!used[static_cast<std::size_t>(v)]) vals.push_back(v);
  }
  return Permutation(std::move(vals));
}

std::vector<WitnessRecord> build_corpus() {
  std::vector<WitnessRecord> recs;

  recs.push_back(WitnessRecord{
      "s7_f43", 7, make_pattern_spec(4, 3, Flavor::additive, false),
      Permutation({2, 4, 6, 7, 5, 3, 1}), "avoider",
      "extremal avoider showing the (k=4, l=3) additive threshold is 8"});

  recs.push_back(WitnessRecord{
      "s12_f34", 12, make_pattern_spec(3, 4, Flavor::additive, false),
      Permutation({9, 10, 7, 1, 4, 3, 2, 5, 6, 11, 12, 8}), "avoider",
      "extremal avoider showing the (k=3, l=4) additive threshold is 13"});

  recs.push_back(WitnessRecord{
      "s17_g32", 17, make_pattern_spec(3, 2, Flavor::additive, true),
      Permutation({8, 10, 12, 14, 3, 5, 16, 1, 7, 11, 4, 17, 13, 2, 9, 6, 15}), "avoider",
      "extremal avoider showing the monotone (k=3, l=2) additive threshold is 18"});

  recs.push_back(WitnessRecord{
      "s31_mult2", 31, make_pattern_spec(3, 2, Flavor::multiplicative, false),
      Permutation({1,  5,  10, 20, 7,  14, 28, 2,  26, 13, 22, 11, 21, 30, 16, 15,
                   8,  4,  24, 12, 6,  18, 3,  27, 9,  17, 19, 23, 25, 29, 31}),
      "avoider", "extremal avoider showing the (k=3, l=2) multiplicative threshold is 32"});

  recs.push_back(WitnessRecord{
      "s59_inv2", 59, make_pattern_spec(3, 2, Flavor::inverse_additive, false),
      s59_completion(), "avoider",
      "avoider (fixed 28-value block, canonical increasing completion) showing the "
      "(k=3, l=2) inverse-additive threshold is at least 60"});

  for (const WitnessRecord& r : recs) {
    if (r.permutation.n() != r.n) {
      throw std::logic_error("corpus record " + r.id + ": length mismatch");
    }
    if (count_hits(r.permutation, r.spec) != 0) {
      throw std::logic_error("corpus record " + r.id + ": avoidance claim failed verification");
    }
  }
  return recs;
}

}  // namespace

const std::vector<WitnessRecord>& builtin_corpus() {
  static const std::vector<WitnessRecord> corpus = build_corpus();
  return corpus;
}

WitnessRecord builtin_witness(const std::string& id) {
  for (const WitnessRecord& r : builtin_corpus()) {
    if (r.id == id) return r;
  }
  throw std::invalid_argument("unknown witness id: " + id);
}

namespace {

std::string join_values(const std::vector<Value>& vals) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) os << ',';
    os << vals[i];
  }
  return os.str();
}

std::vector<Value> split_values(const std::string& s) {
  std::vector<Value> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer: " + tok);
    out.push_back(v);
  }
  return out;
}

}  // namespace

void write_corpus(std::ostream& out, const std::vector<WitnessRecord>& records) {
  out << "# permarith witness corpus v1\n";
  for (const WitnessRecord& r : records) {
    out << "witness id=" << r.id << " n=" << r.n << " k=" << r.spec.k << " ell=" << r.spec.ell
        << " flavor=" << flavor_code(r.spec.flavor) << " monotone=" << (r.spec.monotone ? 1 : 0)
        << " claim=" << r.claim << " perm=" << join_values(r.permutation.values())
        << " note=" << r.note << "\n";
  }
}

std::vector<WitnessRecord> read_corpus(std::istream& in) {
  std::vector<WitnessRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string tag;
    is >> tag;
    if (tag != "witness") {
      throw std::invalid_argument("corpus line " + std::to_string(lineno) +
                                  ": expected 'witness', got '" + tag + "'");
    }
    std::string id, claim, perm_str, note;
    Value n = -1, ell = -1;
    int k = -1, monotone = -1;
    std::optional<Flavor> flavor;
    std::string tok;
    while (is >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("corpus line " + std::to_string(lineno) + ": bad token '" +
                                    tok + "'");
      }
      const std::string key = tok.substr(0, eq);
      std::string val = tok.substr(eq + 1);
      if (key == "note") {
        // note runs to end of line
        std::string rest;
        std::getline(is, rest);
        note = val + rest;
        break;
      }
      if (key == "id") id = val;
      else if (key == "n") n = std::stoll(val);
      else if (key == "k") k = std::stoi(val);
      else if (key == "ell") ell = std::stoll(val);
      else if (key == "flavor") flavor = parse_flavor(val);
      else if (key == "monotone") monotone = std::stoi(val);
      else if (key == "claim") claim = val;
      else if (key == "perm") perm_str = val;
      else throw std::invalid_argument("corpus line " + std::to_string(lineno) +
                                       ": unknown key '" + key + "'");
    }
    if (id.empty() || n < 0 || k < 0 || ell < 0 || !flavor || monotone < 0 || claim.empty() ||
        perm_str.empty()) {
      throw std::invalid_argument("corpus line " + std::to_string(lineno) + ": missing fields");
    }
    WitnessRecord r{id, n, make_pattern_spec(k, ell, *flavor, monotone != 0),
                    Permutation(split_values(perm_str)), claim, note};
    if (r.permutation.n() != r.n) {
      throw std::invalid_argument("corpus line " + std::to_string(lineno) +
                                  ": n does not match permutation length");
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace permarith
