#include "hkr/bar_oracle.hpp"

#include <functional>

#include "hkr/parallel.hpp"

namespace hkr::oracle {

std::vector<Exponents> monomials_of_weight(const std::vector<int>& weights, int weight) {
  std::vector<Exponents> out;
  Exponents e(weights.size(), 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int rest) {
    if (i == weights.size()) {
      if (rest == 0) out.push_back(e);
      return;
    }
    for (int k = rest / weights[i]; k >= 0; --k) {
      e[i] = k;
      fill(i + 1, rest - k * weights[i]);
    }
    e[i] = 0;
  };
  if (weight >= 0) fill(0, weight);
  return out;
}

std::size_t dense_rank(std::vector<Dense> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

namespace {

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

int weight_of(const Exponents& e, const std::vector<int>& weights) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * weights[i];
  return w;
}

}  // namespace

WeightedQuotient::WeightedQuotient(std::vector<int> weights, std::vector<Polynomial> relations, int max_weight)
    : weights_(std::move(weights)), max_weight_(max_weight) {
  for (int w = 0; w <= max_weight_; ++w) {
    Piece piece;
    piece.monomials = monomials_of_weight(weights_, w);
    for (std::size_t i = 0; i < piece.monomials.size(); ++i) piece.index[piece.monomials[i]] = i;
    const std::size_t dim = piece.monomials.size();

    std::vector<Dense> rows;
    for (const auto& f : relations) {
      if (f.empty()) continue;
      const int fw = weight_of(f.begin()->first, weights_);
      for (const auto& m : monomials_of_weight(weights_, w - fw)) {
        Dense row(dim);
        for (const auto& [e, c] : f) row[piece.index.at(add(e, m))] += c;
        rows.push_back(std::move(row));
      }
    }
    // reduced row echelon form
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
      std::size_t p = r;
      while (p < rows.size() && rows[p][c] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[r]);
      const Rational lead = rows[r][c];
      for (auto& x : rows[r]) x /= lead;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][c] == 0) continue;
        const Rational factor = rows[i][c];
        for (std::size_t k = 0; k < dim; ++k) rows[i][k] -= factor * rows[r][k];
      }
      piece.pivots.push_back(c);
      ++r;
    }
    rows.resize(r);
    piece.rref = std::move(rows);
    std::vector<bool> is_pivot(dim, false);
    for (auto c : piece.pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < dim; ++c) {
      if (is_pivot[c]) continue;
      piece.basis.push_back(piece.monomials[c]);
      piece.basis_columns.push_back(c);
    }
    pieces_.push_back(std::move(piece));
  }
}

namespace {

std::vector<Polynomial> relations_of(const AlgebraPresentation& algebra) {
  const auto k = algebra.ring->size();
  std::vector<Polynomial> out;
  for (const auto& f : algebra.relations) {
    Polynomial p;
    for (const auto& [m, c] : f.terms()) {
      Exponents e(k, 0);
      for (const auto& factor : m.factors()) e[static_cast<std::size_t>(factor.var)] = factor.exp;
      p[e] = c;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<int> weights_of(const AlgebraPresentation& algebra) {
  std::vector<int> w;
  for (const auto& v : algebra.ring->variables()) w.push_back(v.weight);
  return w;
}

}  // namespace

WeightedQuotient::WeightedQuotient(const AlgebraPresentation& algebra, int max_weight)
    : WeightedQuotient(weights_of(algebra), relations_of(algebra), max_weight) {}

Dense WeightedQuotient::reduce(const Polynomial& p, int w) const {
  const Piece& piece = pieces_.at(static_cast<std::size_t>(w));
  Dense v(piece.monomials.size());
  for (const auto& [e, c] : p) v[piece.index.at(e)] += c;
  for (std::size_t r = 0; r < piece.rref.size(); ++r) {
    const Rational c = v[piece.pivots[r]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * piece.rref[r][k];
  }
  Dense out(piece.basis.size());
  for (std::size_t i = 0; i < piece.basis_columns.size(); ++i) out[i] = v[piece.basis_columns[i]];
  return out;
}

Dense WeightedQuotient::multiply(int w1, std::size_t i, int w2, std::size_t j) const {
  const int w = w1 + w2;
  if (w > max_weight_) return {};
  Polynomial p;
  p[add(basis(w1)[i], basis(w2)[j])] = 1;
  return reduce(p, w);
}

// ---------------------------------------------------------------- bar complex

namespace {

// a_0 (x) a_1 (x) ... (x) a_n, each entry (weight, basis index)
using Chain = std::vector<std::pair<int, std::size_t>>;

struct BarDegree {
  std::vector<Chain> basis;
  std::map<Chain, std::size_t> index;
};

BarDegree bar_basis(const WeightedQuotient& A, int n, int w) {
  BarDegree out;
  if (n < 0) return out;
  Chain current;
  std::function<void(int, int)> fill = [&](int slot, int rest) {
    if (slot == n + 1) {
      if (rest == 0) {
        out.index[current] = out.basis.size();
        out.basis.push_back(current);
      }
      return;
    }
    const int lowest = slot == 0 ? 0 : 1;
    for (int wi = lowest; wi <= rest; ++wi) {
      for (std::size_t k = 0; k < A.dimension(wi); ++k) {
        current.emplace_back(wi, k);
        fill(slot + 1, rest - wi);
        current.pop_back();
      }
    }
  };
  fill(0, w);
  return out;
}

// Columns of b: degree n -> degree n - 1 as dense vectors.
std::vector<Dense> bar_differential(const WeightedQuotient& A, const BarDegree& source, const BarDegree& target,
                                    int n) {
  std::vector<Dense> columns;
  for (const Chain& c : source.basis) {
    Dense col(target.basis.size());
    auto emit = [&](const Chain& left, int pw, const Dense& product, const Chain& right, const Rational& sign) {
      for (std::size_t k = 0; k < product.size(); ++k) {
        if (product[k] == 0) continue;
        Chain t = left;
        t.emplace_back(pw, k);
        t.insert(t.end(), right.begin(), right.end());
        col[target.index.at(t)] += sign * product[k];
      }
    };
    for (int i = 0; i < n; ++i) {
      const auto& [wa, ia] = c[static_cast<std::size_t>(i)];
      const auto& [wb, ib] = c[static_cast<std::size_t>(i) + 1];
      Dense product = A.multiply(wa, ia, wb, ib);
      Chain left(c.begin(), c.begin() + i);
      Chain right(c.begin() + i + 2, c.end());
      emit(left, wa + wb, product, right, Rational(i % 2 == 0 ? 1 : -1));
    }
    // (-1)^n a_n a_0 (x) a_1 ... a_{n-1}
    const auto& [wl, il] = c.back();
    const auto& [w0, i0] = c.front();
    Dense product = A.multiply(wl, il, w0, i0);
    Chain middle(c.begin() + 1, c.end() - 1);
    emit({}, wl + w0, product, middle, Rational(n % 2 == 0 ? 1 : -1));
    columns.push_back(std::move(col));
  }
  return columns;
}

std::size_t differential_rank(const WeightedQuotient& A, int n, int w) {
  if (n <= 0) return 0;
  BarDegree source = bar_basis(A, n, w);
  BarDegree target = bar_basis(A, n - 1, w);
  if (source.basis.empty() || target.basis.empty()) return 0;
  return dense_rank(bar_differential(A, source, target, n));
}

}  // namespace

int bar_homology(const WeightedQuotient& A, int n, int w) {
  const std::size_t dim = bar_basis(A, n, w).basis.size();
  return static_cast<int>(dim - differential_rank(A, n, w) - differential_rank(A, n + 1, w));
}

HomologyTable bar_homology_table(const AlgebraPresentation& algebra, const Window& window, int threads) {
  WeightedQuotient A(algebra, window.max_weight);
  std::vector<std::pair<int, int>> grid;
  for (int n = 0; n <= window.max_degree; ++n)
    for (int w = 0; w <= window.max_weight; ++w) grid.emplace_back(n, w);
  std::vector<int> dims(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t k) { dims[k] = bar_homology(A, grid[k].first, grid[k].second); });
  HomologyTable table;
  for (std::size_t k = 0; k < grid.size(); ++k) table[grid[k]] = dims[k];
  return table;
}

bool bar_square_zero(const WeightedQuotient& A, int n, int w) {
  if (n < 1) return true;
  BarDegree top = bar_basis(A, n + 1, w);
  BarDegree mid = bar_basis(A, n, w);
  BarDegree low = bar_basis(A, n - 1, w);
  auto outer = bar_differential(A, mid, low, n);
  for (const Dense& col : bar_differential(A, top, mid, n + 1)) {
    Dense image(low.basis.size());
    for (std::size_t j = 0; j < col.size(); ++j) {
      if (col[j] == 0) continue;
      for (std::size_t i = 0; i < image.size(); ++i) image[i] += col[j] * outer[j][i];
    }
    for (const auto& x : image)
      if (x != 0) return false;
  }
  return true;
}

}  // namespace hkr::oracle
