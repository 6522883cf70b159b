#pragma once

// Koszul-Tate resolvent R of a weighted-homogeneous quotient A = Q[x]/(f),
// the enveloping algebra S = R (x) R, the acyclic algebra B over the left copy
// of R, and the embedding S -> B.

#include <string>
#include <vector>

#include "hkr/gca.hpp"
#include "hkr/slice.hpp"

namespace hkr {

/// Q[x_1..x_k]/(f_1..f_m) with positive variable weights and homogeneous relations.
struct AlgebraPresentation {
  GcaPtr ring;  // polynomial ring: every variable in degree 0
  std::vector<Element> relations;

  bool operator==(const AlgebraPresentation& other) const;
};

/// Polynomial ring on named variables of the given weights.
GcaPtr polynomial_ring(const std::vector<std::pair<std::string, int>>& variables);

/// Throws Error naming the first offending variable or relation.
void validate(const AlgebraPresentation& algebra);

struct TateStep {
  int degree = 0;  // cohomological degree of the killed cycles
  int weight = 0;
  std::vector<int> added;  // ids of the adjoined variables, one per killed class
};

struct Resolvent {
  AlgebraPresentation algebra;
  Window window;
  GcaPtr R;
  std::vector<int> relation_variables;
  std::vector<TateStep> log;

  int base_size() const { return static_cast<int>(algebra.ring->size()); }
};

/// Adjoins one variable per relation, then kills H^{-k}_w for every k <= N and
/// w <= W, weight by weight and within a weight by increasing depth.
Resolvent koszul_tate_resolve(const AlgebraPresentation& algebra, const Window& window);

/// S = R (x) R.  Variable v of R appears as left(v) = v and right(v) = n + v.
struct Enveloping {
  GcaPtr R;
  GcaPtr S;  // augmented onto R by multiplication
  int n = 0;

  int left(int v) const { return v; }
  int right(int v) const { return n + v; }
  /// f_v = v'' - v'
  Element f(int v) const;
  /// The left embedding R -> S.
  AlgebraMap left_embedding() const;
};

Enveloping enveloping(const Resolvent& resolvent);

/// R-variable ids ordered by decreasing degree, ties by id.
std::vector<int> descending_degree_order(const Gca& R);

/// B: free over the left copy of R on f~_v (d = 0) and Tf~_v (d Tf~_v = f~_v).
/// Ids: v' = v, f~_v = n + v, Tf~_v = 2n + v.  Augmented onto R by augmentation.
class AcyclicAlgebra {
 public:
  explicit AcyclicAlgebra(const Enveloping& enveloping);

  const Enveloping& enveloping() const { return env_; }
  const GcaPtr& algebra() const { return B_; }
  int n() const { return env_.n; }
  int left(int v) const { return v; }
  int tilde(int v) const { return env_.n + v; }
  int shifted(int v) const { return 2 * env_.n + v; }

  const Derivation& delta() const { return delta_; }
  const Derivation& euler() const { return euler_; }
  AlgebraMap augmentation() const { return B_->augmentation_map(); }

  /// Number of f~ and Tf~ factors.
  int symmetric_degree(const Monomial& m) const;
  /// Divides each term by its symmetric degree; throws on symmetric degree 0.
  Element euler_inverse(const Element& a) const;
  /// h = euler_inverse o delta; requires every term of `a` to have positive symmetric degree.
  Element homotopy(const Element& a) const;

  /// The embedding S -> B.
  const AlgebraMap& embedding() const { return embedding_; }
  /// embedding(f_v)
  const Element& embedded_f(int v) const { return embedded_f_.at(static_cast<std::size_t>(v)); }
  /// h(embedding(d f_v)), so that embedding(f_v) = f~_v + homotopy_term(v).
  const Element& homotopy_term(int v) const { return homotopy_terms_.at(static_cast<std::size_t>(v)); }

  /// Applies the embedding to an element of S.
  Element embed(const Element& s) const { return embedding_.apply(s); }

 private:
  Enveloping env_;
  GcaPtr B_;
  Derivation delta_;
  Derivation euler_;
  AlgebraMap embedding_;
  std::vector<Element> embedded_f_;
  std::vector<Element> homotopy_terms_;
};

}  // namespace hkr
