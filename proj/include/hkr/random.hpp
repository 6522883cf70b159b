#pragma once

// Seeded random homogeneous elements for property checks.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>

#include "hkr/slice.hpp"

namespace hkr {

class RandomElements {
 public:
  explicit RandomElements(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  /// Nonzero rational with small numerator and denominator.
  Rational coefficient();

  /// Random combination of up to `max_terms` basis monomials of the slice;
  /// zero when the slice is empty.  `tag` names the filter for caching.
  Element homogeneous(const Gca& algebra, int degree, int weight, const MonomialFilter& filter = {},
                      const std::string& tag = {}, int max_terms = 4);

  /// Nonzero element of a random bidegree with degree in [min_degree, 0] and
  /// weight in [0, max_weight]; zero only if every such slice is empty.
  Element any(const Gca& algebra, int min_degree, int max_weight, const MonomialFilter& filter = {},
              const std::string& tag = {});

 private:
  const BidegreeSlice& slice(const Gca& algebra, int degree, int weight, const MonomialFilter& filter,
                             const std::string& tag);

  std::mt19937_64 engine_;
  std::map<std::tuple<const Gca*, int, int, std::string>, BidegreeSlice> cache_;
};

}  // namespace hkr
