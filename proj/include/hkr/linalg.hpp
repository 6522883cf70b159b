#pragma once

// Exact linear algebra over Q on sparse vectors.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hkr/rational.hpp"

namespace hkr {

/// Sparse vector: (index, nonzero value) pairs sorted by index.
using SparseVector = std::vector<std::pair<int, Rational>>;

SparseVector sparse_add(const SparseVector& a, const SparseVector& b, const Rational& scale = 1);
bool sparse_is_zero(const SparseVector& v);

/// Incremental echelon basis of a subspace of Q^n.  Each stored row has
/// leading coefficient 1 at its pivot; `reduce` returns the normal form of a
/// vector with every pivot coordinate eliminated.
class Echelon {
 public:
  /// Returns true when `v` was independent of the current span.
  bool add(const SparseVector& v);
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  /// Fully reduced row-echelon rows ordered by pivot.
  std::vector<SparseVector> rref() const;

 private:
  std::map<int, SparseVector> rows_;
};

/// Rank of the span of `vectors` by fraction-free elimination on primitive
/// integer rows, pivoting on the smallest column index.
std::size_t rank(const std::vector<SparseVector>& vectors);

/// Rank via dense Bareiss elimination with pivot columns scanned from the
/// largest index down; an independent route used to cross-check `rank`.
std::size_t rank_bareiss(const std::vector<SparseVector>& vectors, int dimension);

/// Canonical reduced row-echelon basis of the span.
std::vector<SparseVector> rref(const std::vector<SparseVector>& vectors);

/// Basis (in reduced row-echelon form) of {c : sum_j c_j columns[j] = 0}.
std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns);

/// Canonical representatives of (span cycles) / (span boundaries): every
/// cycle is reduced modulo the boundaries' echelon form and the normal forms
/// are brought to reduced row-echelon form.  Requires boundaries to lie in the
/// span of the cycles.
std::vector<SparseVector> quotient_representatives(const std::vector<SparseVector>& cycles,
                                                   const std::vector<SparseVector>& boundaries);

/// Applies the matrix given by its columns to a coefficient vector.
SparseVector apply_columns(const std::vector<SparseVector>& columns, const SparseVector& coefficients);

}  // namespace hkr
