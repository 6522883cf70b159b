#pragma once

// Finite (degree, weight) pieces of free graded-commutative algebras and the
// boundary matrices between them.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hkr/gca.hpp"
#include "hkr/linalg.hpp"

namespace hkr {

/// Maximal homological depth N (cohomological degrees 0 .. -N) and maximal weight W.
struct Window {
  int max_degree = 1;
  int max_weight = 1;

  bool covers(int cohomological_degree, int weight) const {
    return cohomological_degree <= 0 && -cohomological_degree <= max_degree && weight >= 0 &&
           weight <= max_weight;
  }
  bool operator==(const Window&) const = default;
};

using MonomialFilter = std::function<bool(const Monomial&)>;

/// All canonical monomials of the given bidegree, ordered lexicographically
/// by exponent vector (larger exponents of lower variable ids first).
std::vector<Monomial> enumerate_monomials(const Gca& algebra, int degree, int weight,
                                          const MonomialFilter& filter = {});

class BidegreeSlice {
 public:
  BidegreeSlice(const Gca& algebra, int degree, int weight, const MonomialFilter& filter = {});

  int degree() const { return degree_; }
  int weight() const { return weight_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::optional<int> index_of(const Monomial& m) const;

  /// Coordinates of `a`; throws if `a` has a term outside this slice.
  SparseVector coordinates(const Element& a) const;
  Element element(const SparseVector& coordinates) const;

 private:
  int degree_;
  int weight_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int> index_;
};

/// Columns of the matrix of `map` from `source` to `target` slices.
std::vector<SparseVector> matrix_of(const std::function<Element(const Monomial&)>& map,
                                    const BidegreeSlice& source, const BidegreeSlice& target);

/// The boundary of `algebra` from slice (n, w) to slice (n+1, w).
std::vector<SparseVector> boundary_matrix(const Gca& algebra, const BidegreeSlice& source,
                                          const BidegreeSlice& target);

/// dim H^n_w of the (optionally filtered) subcomplex; the filter must define a subcomplex.
int homology_dim(const Gca& algebra, int degree, int weight, const MonomialFilter& filter = {});

/// Cohomology table keyed by (homological degree n = -cohomological degree, weight).
using HomologyTable = std::map<std::pair<int, int>, int>;

/// dim H^{-n}_w for 0 <= n <= N and 0 <= w <= W, evaluated in parallel over bidegrees.
HomologyTable homology_dims(const Gca& algebra, const Window& window, int threads = 1,
                            const MonomialFilter& filter = {});

struct EulerCheck {
  long from_slices = 0;
  long from_homology = 0;
};

/// Alternating sums over every degree of one weight, from slice dimensions
/// and from homology dimensions; they agree whenever the ranks are right.
EulerCheck euler_characteristic(const Gca& algebra, int weight);

}  // namespace hkr
