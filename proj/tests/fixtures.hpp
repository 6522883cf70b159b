#pragma once

#include "hkr/resolvent.hpp"

namespace hkr::testing {

inline AlgebraPresentation smooth_line() { return {polynomial_ring({{"x", 1}}), {}}; }

inline AlgebraPresentation dual_numbers() {
  auto P = polynomial_ring({{"x", 1}});
  return {P, {P->pow(Element::generator(0), 2)}};
}

// Q[x,y]/(x^2, xy), not a complete intersection
inline AlgebraPresentation plane_pair() {
  auto P = polynomial_ring({{"x", 1}, {"y", 1}});
  const Element x = Element::generator(0);
  const Element y = Element::generator(1);
  return {P, {P->mul(x, x), P->mul(x, y)}};
}

}  // namespace hkr::testing
