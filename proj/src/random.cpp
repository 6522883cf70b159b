#include "hkr/random.hpp"

#include <vector>

namespace hkr {

Rational RandomElements::coefficient() {
  int num = uniform(-5, 4);
  if (num >= 0) ++num;
  Rational c(num, uniform(1, 3));
  c.canonicalize();
  return c;
}

const BidegreeSlice& RandomElements::slice(const Gca& algebra, int degree, int weight, const MonomialFilter& filter,
                                           const std::string& tag) {
  auto key = std::make_tuple(&algebra, degree, weight, tag);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, BidegreeSlice(algebra, degree, weight, filter)).first;
  return it->second;
}

Element RandomElements::homogeneous(const Gca& algebra, int degree, int weight, const MonomialFilter& filter,
                                    const std::string& tag, int max_terms) {
  const BidegreeSlice& s = slice(algebra, degree, weight, filter, tag);
  Element out;
  if (s.dimension() == 0) return out;
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t)
    out.add_term(s.basis()[static_cast<std::size_t>(uniform(0, static_cast<int>(s.dimension()) - 1))], coefficient());
  return out;
}

Element RandomElements::any(const Gca& algebra, int min_degree, int max_weight, const MonomialFilter& filter,
                            const std::string& tag) {
  std::vector<std::pair<int, int>> nonempty;
  for (int d = min_degree; d <= 0; ++d)
    for (int w = 0; w <= max_weight; ++w)
      if (slice(algebra, d, w, filter, tag).dimension() > 0) nonempty.emplace_back(d, w);
  if (nonempty.empty()) return {};
  for (;;) {
    const auto [d, w] = nonempty[static_cast<std::size_t>(uniform(0, static_cast<int>(nonempty.size()) - 1))];
    Element e = homogeneous(algebra, d, w, filter, tag);
    if (!e.is_zero()) return e;
  }
}

}  // namespace hkr
