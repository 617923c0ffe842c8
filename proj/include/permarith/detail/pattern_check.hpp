#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

#include "permarith/core.hpp"

namespace permarith::detail {

// Shared relation evaluator for both machine-word and big-integer sequences.
// All arithmetic is exact: sums and products go through cpp_int, reciprocal
// sums through cpp_rational, so no width can overflow.
template <typename Int>
std::optional<Anchor> check_pattern(const std::vector<Int>& seq, const PatternSpec& spec) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;

  if (static_cast<int>(seq.size()) != spec.k) {
    throw std::invalid_argument("pattern_holds: sequence length " +
                                std::to_string(seq.size()) + " does not match k=" +
                                std::to_string(spec.k));
  }
  for (const Int& x : seq) {
    if (x < 1) throw std::invalid_argument("pattern_holds: values must be positive");
  }

  if (spec.monotone) {
    bool inc = true, dec = true;
    for (std::size_t i = 1; i < seq.size(); ++i) {
      if (!(seq[i - 1] < seq[i])) inc = false;
      if (!(seq[i - 1] > seq[i])) dec = false;
    }
    if (!inc && !dec) return std::nullopt;
  }

  const cpp_int first(seq.front());
  const cpp_int last(seq.back());

  switch (spec.flavor) {
    case Flavor::additive: {
      cpp_int sum = 0;
      for (const Int& x : seq) sum += cpp_int(x);
      if (sum == first * spec.ell) return Anchor::first;
      if (sum == last * spec.ell) return Anchor::last;
      return std::nullopt;
    }
    case Flavor::multiplicative: {
      cpp_int prod = 1;
      for (const Int& x : seq) prod *= cpp_int(x);
      const auto e = static_cast<unsigned>(spec.ell);
      if (prod == pow(first, e)) return Anchor::first;
      if (prod == pow(last, e)) return Anchor::last;
      return std::nullopt;
    }
    case Flavor::inverse_additive: {
      cpp_rational sum = 0;
      for (const Int& x : seq) sum += cpp_rational(1) / cpp_rational(cpp_int(x));
      if (sum == cpp_rational(cpp_int(spec.ell)) / cpp_rational(first)) return Anchor::first;
      if (sum == cpp_rational(cpp_int(spec.ell)) / cpp_rational(last)) return Anchor::last;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace permarith::detail
