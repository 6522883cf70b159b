#include "hkr/models.hpp"

namespace hkr {

Models::Models(const AlgebraPresentation& algebra_, const Window& window_)
    : algebra(algebra_),
      window(window_),
      resolvent(koszul_tate_resolve(algebra, window)),
      env(enveloping(resolvent)),
      acyclic(env),
      omega(omega_algebra(env)),
      atiyah(acyclic, omega),
      hochschild(hochschild_model(acyclic)),
      cotangent(cotangent_model(resolvent.R)),
      decomposition(decomposition_map(atiyah, hochschild, cotangent)),
      reverse(reverse_map(acyclic, hochschild, cotangent)) {}

}  // namespace hkr
