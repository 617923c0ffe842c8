#include "permarith/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace permarith {

SumProfile sum_profile(const Permutation& p) {
  const Value len = p.n();
  if (len < 5 || len % 2 == 0) {
    throw std::invalid_argument("sum_profile: length must be odd and >= 5, got " +
                                std::to_string(len));
  }
  const int k = static_cast<int>((len + 1) / 2);
  SumProfile sp;
  sp.k = k;
  for (Value i = 1; i <= k - 1; ++i) sp.alpha += p.at(i);
  for (Value i = k + 1; i <= len; ++i) sp.beta += p.at(i);

  sp.U.push_back((k - 2) * sp.alpha);
  for (Value i = 1; i <= k - 1; ++i) sp.U.push_back(sp.alpha - p.at(i));
  sp.V.push_back((k - 2) * sp.beta);
  for (Value i = k + 1; i <= len; ++i) sp.V.push_back(sp.beta - p.at(i));
  std::sort(sp.U.begin(), sp.U.end());
  std::sort(sp.V.begin(), sp.V.end());

  sp.max_lcm = 0;
  for (Value a : sp.U) {
    for (Value b : sp.V) {
      sp.max_lcm = std::max(sp.max_lcm, std::lcm(a, b));
    }
  }
  return sp;
}

Value max_profile_lcm(int k) {
  if (k < 3) throw std::invalid_argument("max_profile_lcm: k must be >= 3");
  if (k > 5) {
    throw std::invalid_argument("max_profile_lcm: enumeration over S_" +
                                std::to_string(2 * k - 1) + " exceeds the supported budget (k <= 5)");
  }
  const Value len = 2 * static_cast<Value>(k) - 1;
  std::vector<Value> vals(static_cast<std::size_t>(len));
  for (Value i = 0; i < len; ++i) vals[static_cast<std::size_t>(i)] = i + 1;
  Value best = 0;
  do {
    // Inline profile evaluation; validating Permutation 9! times is wasteful.
    Value alpha = 0, beta = 0;
    for (int i = 0; i < k - 1; ++i) alpha += vals[static_cast<std::size_t>(i)];
    for (Value i = k; i < len; ++i) beta += vals[static_cast<std::size_t>(i)];
    Value U[8], V[8];
    U[0] = (k - 2) * alpha;
    V[0] = (k - 2) * beta;
    for (int i = 0; i < k - 1; ++i) {
      U[i + 1] = alpha - vals[static_cast<std::size_t>(i)];
      V[i + 1] = beta - vals[static_cast<std::size_t>(k + i)];
    }
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const Value l = std::lcm(U[i], V[j]);
        if (l > best) best = l;
      }
    }
  } while (std::next_permutation(vals.begin(), vals.end()));
  return best;
}

Value profile_lcm_bound(int k) {
  if (k < 3) throw std::invalid_argument("profile_lcm_bound: k must be >= 3");
  const Value kk = k;
  const Value q = kk * kk - kk;  // even, so q*q is divisible by 4
  return 9 * (kk - 2) * (q * q / 4);
}

Value f2_lower_bound(int k) {
  if (k < 3) throw std::invalid_argument("f2_lower_bound: k must be >= 3");
  const Value kk = k;
  return (kk - 1) * (3 * kk - 4) / 2;
}

double min_count_upper_bound(int k, double n) {
  if (k < 3) throw std::invalid_argument("min_count_upper_bound: k must be >= 3");
  const double e = std::exp(1.0);
  return 2.0 / k * std::pow(e / (k - 1), k - 1) * std::pow(n, k - 1);
}

double min_count_lower_bound(double n, double f) {
  if (f < 55.0) {
    throw std::domain_error("min_count_lower_bound: requires f >= 55 (ln f must exceed 4)");
  }
  const double log_term = std::log(n) - std::log(f) + 2.0;
  if (!(n >= 1.0) || log_term <= 0.0) {
    throw std::domain_error("min_count_lower_bound: n too small for the bound's domain");
  }
  return n / (f * log_term) - f / (std::log(f) - 4.0) + 1.0;
}

double monotone_count_lower_bound(double n) {
  const double log_term = std::log(n) - std::log(18.0) + 2.0;
  if (!(n >= 1.0) || log_term <= 0.0) {
    throw std::domain_error("monotone_count_lower_bound: n too small");
  }
  return n / (18.0 * log_term) - 6.0;
}

double monotone_count_upper_bound(double n) { return n * n / 18.0 + 7.0 * n / 6.0; }

double two_run_count_bound(double n, double a) {
  if (a < 2.0) throw std::invalid_argument("two_run_count_bound: a must be >= 2");
  return (a * a + 5.0 - 4.0 * a) / (4.0 * a * a) * n * n + (a + 4.0) / (2.0 * a) * n;
}

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

BoundReport make_bound_report(int k, Value ell, std::optional<Value> n, bool monotone,
                              std::optional<double> f_known, bool exact_profile_lcm) {
  BoundReport r;
  r.k = k;
  r.ell = ell;
  r.n = n;
  r.monotone = monotone;

  if (ell == 2) {
    r.entries.emplace_back("f2_lower", std::to_string(f2_lower_bound(k)));
    r.entries.emplace_back("N_k_upper", std::to_string(profile_lcm_bound(k)));
    if (exact_profile_lcm) {
      r.entries.emplace_back("N_k", std::to_string(max_profile_lcm(k)));
    }
  }
  if (n) {
    r.entries.emplace_back("F_upper", fmt(min_count_upper_bound(k, static_cast<double>(*n))));
    if (f_known) {
      r.entries.emplace_back("F_lower",
                             fmt(min_count_lower_bound(static_cast<double>(*n), *f_known)));
    }
    if (monotone && k == 3 && ell == 2) {
      r.entries.emplace_back("G_lower", fmt(monotone_count_lower_bound(static_cast<double>(*n))));
      r.entries.emplace_back("G_upper", fmt(monotone_count_upper_bound(static_cast<double>(*n))));
      for (Value a = 2; a <= 5 && a <= (*n + 1) / 2; ++a) {
        r.entries.emplace_back("two_run_bound_a" + std::to_string(a),
                               fmt(two_run_count_bound(static_cast<double>(*n),
                                                       static_cast<double>(a))));
      }
    }
  }
  return r;
}

}  // namespace permarith
