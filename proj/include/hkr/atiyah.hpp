#pragma once

// Relative differential forms Omega of S over the left copy of R, the
// connection on B, the universal Atiyah class, its exponential, and the maps
// between the Hochschild model B (x)_S R and the cotangent model.

#include "hkr/gca.hpp"
#include "hkr/resolvent.hpp"

namespace hkr {

/// Omega = S[omega_v], omega_v = T d f_v of degree deg v - 1.  Ids: S, then omega_v = 2n + v.
struct OmegaAlgebra {
  GcaPtr omega;
  int n = 0;
  /// S -> Omega, degree -1, killing v' and sending v'' to omega_v.
  Derivation exterior;

  int form(int v) const { return 2 * n + v; }
};

OmegaAlgebra omega_algebra(const Enveloping& enveloping);

/// Connection, Atiyah class and exponential on B (x)_S Omega.
/// Ids of B (x)_S Omega: those of B, then omega_v = 3n + v.
class AtiyahCalculus {
 public:
  AtiyahCalculus(const AcyclicAlgebra& B, const OmegaAlgebra& omega);

  const AcyclicAlgebra& acyclic() const { return B_; }
  const GcaPtr& algebra() const { return BOmega_; }
  int form(int v) const { return 3 * B_.n() + v; }

  /// B -> B (x) Omega of degree -1: zero on v' and Tf~_v, and sending embedding(f_v) to omega_v.
  const Derivation& connection() const { return connection_; }
  /// -[d, connection], an S-linear derivation of degree 0.
  const Derivation& atiyah() const { return atiyah_; }
  /// -omega_v + connection(h embedding d f_v), the closed form on Tf~_v.
  Element atiyah_closed_form(int v) const;
  /// The atiyah class extended to B (x) Omega by zero on the forms.
  const Derivation& extended() const { return extended_; }

  /// exp(sign * At~)(a), summed until the next power vanishes.
  Element exp(const Element& a, int sign = -1) const;
  /// Smallest k with At~^k(a) = 0.
  int nilpotence_order(const Element& a) const;

 private:
  AcyclicAlgebra B_;
  GcaPtr BOmega_;
  Derivation connection_;
  Derivation atiyah_;
  Derivation extended_;
};

/// R[Tf~_v] with d Tf~_v = projection(f~_v).  Ids: R, then Tf~_v = n + v.
struct HochschildModel {
  GcaPtr H;
  int n = 0;
  /// B -> H: v' -> v, Tf~_v -> Tf~_v, f~_v -> -projection(h embedding d f_v); kernel embedding(I) B.
  AlgebraMap projection;

  int shifted(int v) const { return n + v; }
};

HochschildModel hochschild_model(const AcyclicAlgebra& B);

/// R[Td_v] with d Td_v = -Td(d v).  Ids: R, then Td_v = n + v.
struct CotangentModel {
  GcaPtr cot;
  int n = 0;
  /// R -> cotangent model, degree -1, v -> Td_v.
  Derivation exterior;

  int form(int v) const { return n + v; }
  /// Number of Td factors.
  int form_degree(const Monomial& m) const;
};

CotangentModel cotangent_model(const GcaPtr& R);

/// B (x) Omega -> cotangent model: v' -> v, f~ and Tf~ -> 0, omega_v -> Td_v.
AlgebraMap forms_projection(const AtiyahCalculus& calculus, const CotangentModel& cotangent);

/// Tf~_v -> projection of exp(-At~)(Tf~_v).
AlgebraMap decomposition_map(const AtiyahCalculus& calculus, const HochschildModel& hochschild,
                   const CotangentModel& cotangent);

/// Td_v -> projection(delta(embedding(f_v))).
AlgebraMap reverse_map(const AcyclicAlgebra& B, const HochschildModel& hochschild,
                       const CotangentModel& cotangent);

}  // namespace hkr
