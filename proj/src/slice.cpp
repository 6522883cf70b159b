#include "hkr/slice.hpp"

#include <algorithm>

#include "hkr/parallel.hpp"

namespace hkr {

namespace {

struct Enumerator {
  const Gca& algebra;
  int target_degree;
  const MonomialFilter& filter;
  std::vector<Monomial>& out;
  std::vector<Factor> current;

  void run(int start, int remaining_weight, int degree) {
    if (remaining_weight == 0) {
      if (degree != target_degree) return;
      Monomial m(current);
      if (!filter || filter(m)) out.push_back(std::move(m));
      return;
    }
    const int n = static_cast<int>(algebra.size());
    for (int j = start; j < n; ++j) {
      const Variable& v = algebra.variable(j);
      if (v.weight > remaining_weight) continue;
      const int max_exp = v.odd() ? 1 : remaining_weight / v.weight;
      for (int e = max_exp; e >= 1; --e) {
        const int next_degree = degree + e * v.degree;
        if (next_degree < target_degree) continue;
        current.push_back({j, e});
        run(j + 1, remaining_weight - e * v.weight, next_degree);
        current.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<Monomial> enumerate_monomials(const Gca& algebra, int degree, int weight,
                                          const MonomialFilter& filter) {
  for (const auto& v : algebra.variables())
    if (v.weight <= 0) throw Error("slice enumeration needs positive weights, '" + v.name + "' has none");
  std::vector<Monomial> out;
  if (weight < 0 || degree > 0) return out;
  Enumerator e{algebra, degree, filter, out, {}};
  e.run(0, weight, 0);
  return out;
}

BidegreeSlice::BidegreeSlice(const Gca& algebra, int degree, int weight, const MonomialFilter& filter)
    : degree_(degree), weight_(weight), basis_(enumerate_monomials(algebra, degree, weight, filter)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
}

std::optional<int> BidegreeSlice::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector BidegreeSlice::coordinates(const Element& a) const {
  SparseVector out;
  out.reserve(a.size());
  for (const auto& [m, c] : a.terms()) {
    auto i = index_of(m);
    if (!i) throw Error("element has a term outside slice (" + std::to_string(degree_) + ", " +
                        std::to_string(weight_) + ")");
    out.emplace_back(*i, c);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Element BidegreeSlice::element(const SparseVector& coordinates) const {
  Element out;
  for (const auto& [i, c] : coordinates) out.add_term(basis_.at(static_cast<std::size_t>(i)), c);
  return out;
}

std::vector<SparseVector> matrix_of(const std::function<Element(const Monomial&)>& map,
                                    const BidegreeSlice& source, const BidegreeSlice& target) {
  std::vector<SparseVector> columns;
  columns.reserve(source.dimension());
  for (const auto& m : source.basis()) columns.push_back(target.coordinates(map(m)));
  return columns;
}

std::vector<SparseVector> boundary_matrix(const Gca& algebra, const BidegreeSlice& source,
                                          const BidegreeSlice& target) {
  const Derivation d = algebra.differential();
  return matrix_of([&](const Monomial& m) { return d.apply(m); }, source, target);
}

namespace {

std::size_t boundary_rank(const Gca& algebra, const BidegreeSlice& source, int weight,
                          const MonomialFilter& filter) {
  if (source.dimension() == 0 || source.degree() >= 0) return 0;
  BidegreeSlice target(algebra, source.degree() + 1, weight, filter);
  if (target.dimension() == 0) return 0;
  return rank(boundary_matrix(algebra, source, target));
}

}  // namespace

int homology_dim(const Gca& algebra, int degree, int weight, const MonomialFilter& filter) {
  BidegreeSlice here(algebra, degree, weight, filter);
  if (here.dimension() == 0) return 0;
  BidegreeSlice below(algebra, degree - 1, weight, filter);
  const std::size_t out = boundary_rank(algebra, here, weight, filter);
  const std::size_t in = boundary_rank(algebra, below, weight, filter);
  return static_cast<int>(here.dimension() - out - in);
}

HomologyTable homology_dims(const Gca& algebra, const Window& window, int threads,
                            const MonomialFilter& filter) {
  // dimension and outgoing boundary rank of every slice in degrees 0 .. -(N+1)
  const int depth = window.max_degree + 2;
  const int weights = window.max_weight + 1;
  std::vector<std::size_t> dims(static_cast<std::size_t>(depth * weights));
  std::vector<std::size_t> ranks(dims.size());
  parallel_for(dims.size(), threads, [&](std::size_t k) {
    const int n = static_cast<int>(k) / weights;
    const int w = static_cast<int>(k) % weights;
    BidegreeSlice slice(algebra, -n, w, filter);
    dims[k] = slice.dimension();
    ranks[k] = boundary_rank(algebra, slice, w, filter);
  });
  HomologyTable table;
  for (int n = 0; n <= window.max_degree; ++n) {
    for (int w = 0; w < weights; ++w) {
      const auto k = static_cast<std::size_t>(n * weights + w);
      const auto below = static_cast<std::size_t>((n + 1) * weights + w);
      table[{n, w}] = static_cast<int>(dims[k] - ranks[k] - ranks[below]);
    }
  }
  return table;
}

EulerCheck euler_characteristic(const Gca& algebra, int weight) {
  int lowest = 0;
  for (const auto& v : algebra.variables()) lowest = std::min(lowest, v.degree);
  const int min_degree = lowest * weight - 1;
  EulerCheck check;
  for (int d = 0; d >= min_degree; --d) {
    const long sign = (d % 2 == 0) ? 1 : -1;
    check.from_slices += sign * static_cast<long>(BidegreeSlice(algebra, d, weight).dimension());
    check.from_homology += sign * homology_dim(algebra, d, weight);
  }
  return check;
}

}  // namespace hkr
