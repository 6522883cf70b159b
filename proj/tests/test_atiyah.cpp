#include "doctest.h"
#include "fixtures.hpp"
#include "hkr/atiyah.hpp"

using namespace hkr;
using namespace hkr::testing;

namespace {

struct Built {
  Resolvent res;
  Enveloping env;
  AcyclicAlgebra B;
  OmegaAlgebra omega;
  AtiyahCalculus at;
  HochschildModel hh;
  CotangentModel cot;

  explicit Built(const AlgebraPresentation& a, Window w = {3, 5})
      : res(koszul_tate_resolve(a, w)),
        env(enveloping(res)),
        B(env),
        omega(omega_algebra(env)),
        at(B, omega),
        hh(hochschild_model(B)),
        cot(cotangent_model(res.R)) {}
};

}  // namespace

TEST_CASE("smooth line") {
  Built m(smooth_line());
  const Gca& om = *m.omega.omega;
  CHECK(om.variable(m.omega.form(0)).degree == -1);
  CHECK(om.differential_of(m.omega.form(0)).is_zero());
  const Element w = Element::generator(m.omega.form(0));
  CHECK(om.mul(w, w).is_zero());

  const Element Tfx = Element::generator(m.B.shifted(0));
  const Element wx = Element::generator(m.at.form(0));
  CHECK(m.at.connection().on_generator(m.B.tilde(0)) == wx);
  CHECK(m.at.connection().on_generator(m.B.shifted(0)).is_zero());
  CHECK(m.at.atiyah().apply(Tfx) == -wx);
  CHECK(m.at.exp(wx) == wx);
  CHECK(m.at.exp(Tfx) == Tfx + wx);
  CHECK(m.hh.H->differential_of(m.hh.shifted(0)).is_zero());

  AlgebraMap decomposition = decomposition_map(m.at, m.hh, m.cot);
  CHECK(decomposition.apply(Element(1)) == Element(1));
  CHECK(decomposition.image(m.hh.shifted(0)) == Element::generator(m.cot.form(0)));
  AlgebraMap reverse = reverse_map(m.B, m.hh, m.cot);
  CHECK(reverse.image(m.cot.form(0)) == Element::generator(m.hh.shifted(0)));
}

TEST_CASE("dual numbers") {
  Built m(dual_numbers());
  const Element x = Element::generator(0);
  const Element Tfx = Element::generator(m.B.shifted(0)), Tfy = Element::generator(m.B.shifted(1));
  const Element wx = Element::generator(m.at.form(0)), wy = Element::generator(m.at.form(1));
  const Gca& bo = *m.at.algebra();
  CHECK(check_presentation(*m.omega.omega).empty());
  CHECK(check_presentation(bo).empty());

  // d omega_y = -2 x'' omega_x
  const Gca& om = *m.omega.omega;
  CHECK(om.differential_of(m.omega.form(1)) ==
        -2 * om.mul(Element::generator(m.env.right(0)), Element::generator(m.omega.form(0))));

  for (int v = 0; v < 2; ++v) CHECK(m.at.atiyah().on_generator(m.B.shifted(v)) == m.at.atiyah_closed_form(v));
  CHECK(m.at.atiyah().apply(Tfy) == -wy + bo.mul(wx, Tfx));
  for (int v = 0; v < 2; ++v) CHECK(m.at.atiyah().apply(m.B.embedded_f(v)).is_zero());

  CHECK(m.at.exp(Tfy) == Tfy + wy - bo.mul(wx, Tfx));
  CHECK(m.hh.H->differential_of(m.hh.shifted(1)) == -2 * m.hh.H->mul(x, Element::generator(m.hh.shifted(0))));
  CHECK(m.cot.cot->differential_of(m.cot.form(1)) == -2 * m.cot.cot->mul(x, Element::generator(m.cot.form(0))));

  AlgebraMap decomposition = decomposition_map(m.at, m.hh, m.cot);
  AlgebraMap reverse = reverse_map(m.B, m.hh, m.cot);
  CHECK(decomposition.image(m.hh.shifted(1)) == Element::generator(m.cot.form(1)));
  CHECK(reverse.image(m.cot.form(1)) == Element::generator(m.hh.shifted(1)));
  CHECK(m.cot.form_degree(m.cot.cot->mul(Element::generator(m.cot.form(0)), Element::generator(m.cot.form(1)))
                              .terms()
                              .begin()
                              ->first) == 2);
}

TEST_CASE("non complete intersection models are consistent") {
  Built m(plane_pair(), {3, 5});
  CHECK(check_presentation(*m.omega.omega).empty());
  CHECK(check_presentation(*m.at.algebra()).empty());
  CHECK(check_presentation(*m.hh.H).empty());
  CHECK(check_presentation(*m.cot.cot).empty());
  for (int v = 0; v < m.B.n(); ++v) {
    CHECK(m.at.atiyah().on_generator(m.B.shifted(v)) == m.at.atiyah_closed_form(v));
    CHECK(m.at.atiyah().apply(m.B.embedded_f(v)).is_zero());
  }
}
