#include "hkr/linalg.hpp"

#include <algorithm>

#include "hkr/gca.hpp"

namespace hkr {

SparseVector sparse_add(const SparseVector& a, const SparseVector& b, const Rational& scale) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, scale * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + scale * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

bool sparse_is_zero(const SparseVector& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& e) { return e.second == 0; });
}

// ---------------------------------------------------------------- Echelon

SparseVector Echelon::reduce(const SparseVector& v) const {
  std::map<int, Rational> acc;
  for (const auto& [i, x] : v)
    if (x != 0) acc[i] += x;
  auto it = acc.begin();
  while (it != acc.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const int pivot = it->first;
    Rational c = it->second;
    for (const auto& [j, y] : row->second) {
      auto& slot = acc[j];
      slot -= c * y;
    }
    for (auto e = acc.lower_bound(pivot); e != acc.end();) {
      if (e->second == 0)
        e = acc.erase(e);
      else
        ++e;
    }
    it = acc.lower_bound(pivot);
  }
  return SparseVector(acc.begin(), acc.end());
}

bool Echelon::add(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  Rational lead = r.front().second;
  for (auto& [i, x] : r) x /= lead;
  rows_.emplace(r.front().first, std::move(r));
  return true;
}

std::vector<SparseVector> Echelon::rref() const {
  // back-substitute from the largest pivot down
  std::map<int, SparseVector> reduced;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    std::map<int, Rational> acc(it->second.begin(), it->second.end());
    for (auto& [pivot, row] : reduced) {
      auto e = acc.find(pivot);
      if (e == acc.end()) continue;
      Rational c = e->second;
      for (const auto& [j, y] : row) acc[j] -= c * y;
    }
    SparseVector out;
    for (auto& [j, y] : acc)
      if (y != 0) out.emplace_back(j, y);
    reduced.emplace(it->first, std::move(out));
  }
  std::vector<SparseVector> result;
  result.reserve(reduced.size());
  for (auto& [p, row] : reduced) result.push_back(std::move(row));
  return result;
}

// ---------------------------------------------------------------- fraction-free rank

namespace {

using IntVector = std::vector<std::pair<int, Integer>>;

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& [i, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [i, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntVector to_integer(const SparseVector& v) {
  Integer l = 1;
  for (const auto& [i, x] : v)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  for (const auto& [i, x] : v) {
    if (x == 0) continue;
    Integer num = x.get_num() * (l / x.get_den());
    out.emplace_back(i, std::move(num));
  }
  make_primitive(out);
  return out;
}

// a <- p*a - c*b, where p = lead(b), c = a's entry at lead(b)
IntVector eliminate(const IntVector& a, const IntVector& b, const Integer& p, const Integer& c) {
  IntVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, p * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -c * b[j].second);
      ++j;
    } else {
      Integer v = p * a[i].second - c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

}  // namespace

std::size_t rank(const std::vector<SparseVector>& vectors) {
  std::map<int, IntVector> pivots;
  for (const auto& v : vectors) {
    IntVector a = to_integer(v);
    while (!a.empty()) {
      auto it = pivots.find(a.front().first);
      if (it == pivots.end()) break;
      const IntVector& b = it->second;
      Integer c = a.front().second;
      a = eliminate(a, b, b.front().second, c);
    }
    if (!a.empty()) pivots.emplace(a.front().first, std::move(a));
  }
  return pivots.size();
}

std::size_t rank_bareiss(const std::vector<SparseVector>& vectors, int dimension) {
  const std::size_t rows = vectors.size();
  const auto cols = static_cast<std::size_t>(dimension);
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    IntVector iv = to_integer(vectors[r]);
    for (auto& [i, x] : iv) {
      if (i < 0 || static_cast<std::size_t>(i) >= cols) throw Error("rank_bareiss: index out of range");
      m[r][static_cast<std::size_t>(i)] = x;
    }
  }
  Integer prev = 1;
  std::size_t rank_found = 0;
  for (std::size_t step = 0; step < cols && rank_found < rows; ++step) {
    const std::size_t col = cols - 1 - step;
    std::size_t pivot_row = rows;
    for (std::size_t r = rank_found; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row == rows) continue;
    std::swap(m[pivot_row], m[rank_found]);
    const Integer pivot = m[rank_found][col];
    for (std::size_t r = rank_found + 1; r < rows; ++r) {
      const Integer factor = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) {
        Integer v = pivot * m[r][c] - factor * m[rank_found][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[r][c] = std::move(v);
      }
    }
    prev = pivot;
    ++rank_found;
  }
  return rank_found;
}

std::vector<SparseVector> rref(const std::vector<SparseVector>& vectors) {
  Echelon e;
  for (const auto& v : vectors) e.add(v);
  return e.rref();
}

std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns) {
  // Augment column j with the unit vector e_j placed after every image index.
  int offset = 0;
  for (const auto& c : columns)
    for (const auto& [i, x] : c) offset = std::max(offset, i + 1);
  Echelon image;
  std::vector<SparseVector> relations;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseVector aug = columns[j];
    aug.emplace_back(offset + static_cast<int>(j), Rational(1));
    SparseVector r = image.reduce(aug);
    if (!r.empty() && r.front().first >= offset) {
      SparseVector rel;
      for (const auto& [i, x] : r) rel.emplace_back(i - offset, x);
      relations.push_back(std::move(rel));
    } else {
      image.add(aug);
    }
  }
  return rref(relations);
}

std::vector<SparseVector> quotient_representatives(const std::vector<SparseVector>& cycles,
                                                   const std::vector<SparseVector>& boundaries) {
  Echelon b;
  for (const auto& v : boundaries) b.add(v);
  std::vector<SparseVector> normal;
  for (const auto& z : cycles) {
    SparseVector r = b.reduce(z);
    if (!r.empty()) normal.push_back(std::move(r));
  }
  return rref(normal);
}

SparseVector apply_columns(const std::vector<SparseVector>& columns, const SparseVector& coefficients) {
  SparseVector out;
  for (const auto& [j, c] : coefficients) out = sparse_add(out, columns.at(static_cast<std::size_t>(j)), c);
  return out;
}

}  // namespace hkr
