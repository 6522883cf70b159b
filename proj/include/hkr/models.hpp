#pragma once

// Every algebra and map of the pipeline for one presentation and window.

#include "hkr/atiyah.hpp"
#include "hkr/resolvent.hpp"

namespace hkr {

struct Models {
  Models(const AlgebraPresentation& algebra, const Window& window);

  AlgebraPresentation algebra;
  Window window;
  Resolvent resolvent;
  Enveloping env;
  AcyclicAlgebra acyclic;
  OmegaAlgebra omega;
  AtiyahCalculus atiyah;
  HochschildModel hochschild;
  CotangentModel cotangent;
  AlgebraMap decomposition;  // Hochschild model -> cotangent model
  AlgebraMap reverse;  // cotangent model -> Hochschild model
};

}  // namespace hkr
