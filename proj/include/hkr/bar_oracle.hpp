#pragma once

// Hochschild homology of A = Q[x]/(f) through the normalized bar complex.
// Shares no arithmetic with the resolvent pipeline: polynomials are exponent
// vectors, A is handled by dense reduction matrices per weight, and ranks come
// from plain Gaussian elimination.

#include <map>
#include <vector>

#include "hkr/rational.hpp"
#include "hkr/resolvent.hpp"
#include "hkr/slice.hpp"

namespace hkr::oracle {

using Exponents = std::vector<int>;
using Polynomial = std::map<Exponents, Rational>;
using Dense = std::vector<Rational>;

/// Exponent vectors of the given weight, lexicographically descending.
std::vector<Exponents> monomials_of_weight(const std::vector<int>& weights, int weight);

std::size_t dense_rank(std::vector<Dense> rows);

class WeightedQuotient {
 public:
  WeightedQuotient(std::vector<int> weights, std::vector<Polynomial> relations, int max_weight);
  explicit WeightedQuotient(const AlgebraPresentation& algebra, int max_weight);

  int max_weight() const { return max_weight_; }
  /// Standard monomials spanning A_w.
  const std::vector<Exponents>& basis(int w) const { return pieces_.at(static_cast<std::size_t>(w)).basis; }
  std::size_t dimension(int w) const { return basis(w).size(); }
  /// Coordinates in basis(w) of a homogeneous weight-w polynomial.
  Dense reduce(const Polynomial& p, int w) const;
  /// Product of basis(w1)[i] and basis(w2)[j] in basis(w1 + w2), or empty past the window.
  Dense multiply(int w1, std::size_t i, int w2, std::size_t j) const;

 private:
  struct Piece {
    std::vector<Exponents> monomials;
    std::map<Exponents, std::size_t> index;
    std::vector<Dense> rref;  // rows of the relation span, each with a unit pivot
    std::vector<std::size_t> pivots;
    std::vector<Exponents> basis;
    std::vector<std::size_t> basis_columns;
  };

  std::vector<int> weights_;
  int max_weight_;
  std::vector<Piece> pieces_;
};

/// dim HH_n of weight w.
int bar_homology(const WeightedQuotient& A, int n, int w);

/// HH_n in weight w for 0 <= n <= N, 0 <= w <= W.
HomologyTable bar_homology_table(const AlgebraPresentation& algebra, const Window& window, int threads = 1);

/// True if b o b vanishes from bar degree n + 1 to n - 1 in weight w.
bool bar_square_zero(const WeightedQuotient& A, int n, int w);

}  // namespace hkr::oracle
