#include "hkr/homology.hpp"

#include "hkr/parallel.hpp"

namespace hkr {

namespace {

std::vector<std::pair<int, int>> window_grid(const Window& window) {
  std::vector<std::pair<int, int>> grid;
  for (int n = 0; n <= window.max_degree; ++n)
    for (int w = 0; w <= window.max_weight; ++w) grid.emplace_back(n, w);
  return grid;
}

}  // namespace

DecompositionTable decompose(const CotangentModel& cotangent, const Window& window, int threads) {
  DecompositionTable table;
  for (int p = 0; p <= window.max_degree; ++p) {
    auto filter = [&cotangent, p](const Monomial& m) { return cotangent.form_degree(m) == p; };
    for (const auto& [key, dim] : homology_dims(*cotangent.cot, window, threads, filter))
      table[{key.first, key.second, p}] = dim;
  }
  return table;
}

std::vector<std::pair<int, int>> sum_rule_violations(const DecompositionTable& parts, const HomologyTable& total) {
  std::map<std::pair<int, int>, int> sums;
  for (const auto& [key, dim] : parts) sums[{std::get<0>(key), std::get<1>(key)}] += dim;
  std::vector<std::pair<int, int>> bad;
  for (const auto& [key, dim] : total) {
    auto it = sums.find(key);
    if ((it == sums.end() ? 0 : it->second) != dim) bad.push_back(key);
  }
  return bad;
}

IsoReport verify_iso(const AlgebraMap& map, const Window& window, int threads) {
  const Gca& source = *map.source();
  const Gca& target = *map.target();
  const auto grid = window_grid(window);
  IsoReport report;
  report.bidegrees.resize(grid.size());
  std::vector<std::string> notes(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t k) {
    const auto [n, w] = grid[k];
    BidegreeCheck& check = report.bidegrees[k];
    check.n = n;
    check.w = w;
    BidegreeSlice src(source, -n, w);
    BidegreeSlice tgt(target, -n, w);
    check.source_dim = src.dimension();
    check.target_dim = tgt.dimension();
    const Derivation ds = source.differential();
    const Derivation dt = target.differential();
    std::vector<SparseVector> columns;
    try {
      for (const auto& m : src.basis()) {
        const Element image = map.apply(m);
        if (!(map.apply(ds.apply(m)) == dt.apply(image))) check.chain_map = false;
        columns.push_back(tgt.coordinates(image));
      }
      check.rank = rank(columns);
    } catch (const Error& e) {
      check.chain_map = false;
      notes[k] = e.what();
    }
  });
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const BidegreeCheck& c = report.bidegrees[k];
    if (c.passed()) continue;
    std::string msg = "(n=" + std::to_string(c.n) + ", w=" + std::to_string(c.w) + "): ";
    if (!c.chain_map) msg += "chain-map residual is nonzero; ";
    if (c.source_dim != c.target_dim)
      msg += "dimensions " + std::to_string(c.source_dim) + " -> " + std::to_string(c.target_dim) + "; ";
    else if (c.rank != c.source_dim)
      msg += "rank " + std::to_string(c.rank) + " < " + std::to_string(c.source_dim) + "; ";
    msg += notes[k];
    report.failures.push_back(msg);
  }
  return report;
}

bool CompositeReport::identity_on_chains() const {
  for (const auto& b : bidegrees)
    if (!b.identity) return false;
  return true;
}

bool CompositeReport::identity_on_homology() const {
  for (const auto& b : bidegrees)
    if (b.homology_defect != 0) return false;
  return true;
}

CompositeReport composite_deviation(const AlgebraMap& first, const AlgebraMap& second, const Window& window,
                                    int threads) {
  const Gca& alg = *first.source();
  const auto grid = window_grid(window);
  CompositeReport report;
  report.bidegrees.resize(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t k) {
    const auto [n, w] = grid[k];
    CompositeBidegree& out = report.bidegrees[k];
    out.n = n;
    out.w = w;
    BidegreeSlice here(alg, -n, w);
    out.dim = here.dimension();
    if (out.dim == 0) return;
    auto composite = matrix_of([&](const Monomial& m) { return second.apply(first.apply(m)); }, here, here);
    std::vector<SparseVector> deviation(composite.size());
    for (std::size_t j = 0; j < composite.size(); ++j)
      deviation[j] = sparse_add(composite[j], {{static_cast<int>(j), Rational(1)}}, -1);
    out.defect_rank = rank(deviation);
    out.identity = out.defect_rank == 0;
    if (out.identity) return;

    BidegreeSlice above(alg, -n + 1, w);
    BidegreeSlice below(alg, -n - 1, w);
    auto cycles = kernel(boundary_matrix(alg, here, above));
    auto boundaries = boundary_matrix(alg, below, here);
    std::vector<SparseVector> stacked = boundaries;
    for (const auto& z : cycles) stacked.push_back(apply_columns(deviation, z));
    out.homology_defect = rank(stacked) - rank(boundaries);
  });
  return report;
}

}  // namespace hkr
