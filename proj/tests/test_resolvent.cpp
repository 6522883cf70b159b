#include "doctest.h"
#include "fixtures.hpp"
#include "hkr/resolvent.hpp"

using namespace hkr;
using namespace hkr::testing;

namespace {

Element gen(const Gca& a, const char* name) { return Element::generator(a.id(name)); }

}  // namespace

TEST_CASE("smooth line needs no adjoined variables") {
  Resolvent res = koszul_tate_resolve(smooth_line(), {4, 6});
  CHECK(res.R->size() == 1);
  CHECK(res.log.empty());
}

TEST_CASE("dual numbers resolve by a single odd variable") {
  Resolvent res = koszul_tate_resolve(dual_numbers(), {4, 6});
  REQUIRE(res.R->size() == 2);
  const Variable& y = res.R->variable(1);
  CHECK(y.degree == -1);
  CHECK(y.weight == 2);
  CHECK(res.R->differential_of(1) == res.R->pow(Element::generator(0), 2));
  CHECK(res.log.empty());
  CHECK(check_presentation(*res.R).empty());
}

TEST_CASE("x^2, xy adjoins the expected degree -2 weight 3 generator") {
  Resolvent res = koszul_tate_resolve(plane_pair(), {3, 6});
  const Gca& R = *res.R;
  CHECK(check_presentation(R).empty());
  const Element x = gen(R, "x"), y = gen(R, "y");
  const Element y1 = gen(R, "z1_2_0"), y2 = gen(R, "z1_2_1");
  const Element expected = R.mul(x, y2) - R.mul(y, y1);
  bool found = false;
  for (int v = 0; v < static_cast<int>(R.size()); ++v) {
    const Variable& z = R.variable(v);
    if (z.degree == -2 && z.weight == 3 && R.differential_of(v) == expected) found = true;
  }
  CHECK(found);
  for (int k = 1; k <= 3; ++k)
    for (int w = 0; w <= 6; ++w) CHECK(homology_dim(R, -k, w) == 0);
}

TEST_CASE("resolvent rejects bad windows and relations") {
  CHECK_THROWS_AS(koszul_tate_resolve(dual_numbers(), {2, 1}), WindowError);
  CHECK_THROWS_AS(koszul_tate_resolve(dual_numbers(), {0, 4}), WindowError);
  auto P = polynomial_ring({{"x", 1}});
  AlgebraPresentation bad{P, {P->pow(Element::generator(0), 2) + Element::generator(0)}};
  CHECK_THROWS_WITH_AS(koszul_tate_resolve(bad, {2, 4}), doctest::Contains("not weight-homogeneous"), Error);
}

TEST_CASE("enveloping algebra doubles the differential") {
  Resolvent res = koszul_tate_resolve(dual_numbers(), {2, 4});
  Enveloping env = enveloping(res);
  const Gca& S = *env.S;
  CHECK(check_presentation(S).empty());
  CHECK(S.differential_of(env.right(1)) == S.pow(Element::generator(env.right(0)), 2));
  // d f_y = (x'' + x') f_x
  const Element xl = Element::generator(env.left(0)), xr = Element::generator(env.right(0));
  CHECK(S.d(env.f(1)) == S.mul(xr + xl, env.f(0)));
  AlgebraMap mu = S.augmentation_map();
  for (int v = 0; v < env.n; ++v) CHECK(mu.apply(env.f(v)).is_zero());
  CHECK(compose(mu, env.left_embedding()).image(1) == Element::generator(1));
}

TEST_CASE("acyclic algebra, homotopy and embedding on the dual numbers") {
  Resolvent res = koszul_tate_resolve(dual_numbers(), {2, 4});
  Enveloping env = enveloping(res);
  AcyclicAlgebra B(env);
  const Gca& b = *B.algebra();
  CHECK(check_presentation(b).empty());
  const Element fx = Element::generator(B.tilde(0)), Tfx = Element::generator(B.shifted(0));
  const Element fy = Element::generator(B.tilde(1)), Tfy = Element::generator(B.shifted(1));
  const Element x = Element::generator(0);

  CHECK(b.d(Tfy) == fy);
  CHECK(B.delta().apply(fx) == Tfx);
  CHECK(B.delta().apply(Tfx).is_zero());
  CHECK(B.euler().apply(b.mul(fx, Tfx)) == 2 * b.mul(fx, Tfx));

  CHECK(B.homotopy(fx) == Tfx);
  CHECK(B.homotopy(b.mul(fx, fx)) == b.mul(fx, Tfx));
  CHECK_THROWS_AS(B.homotopy(Element(1)), Error);

  CHECK(B.embedded_f(0) == fx);
  CHECK(B.embedded_f(1) == fy + 2 * b.mul(x, Tfx) + b.mul(fx, Tfx));
  for (int v = 0; v < B.n(); ++v) CHECK(B.augmentation().apply(B.embedded_f(v)).is_zero());

  const Element xr = Element::generator(env.right(0));
  CHECK(B.embed(xr) == x + fx);
  CHECK(B.embed(env.S->mul(xr, xr)) == b.mul(x, x) + 2 * b.mul(x, fx) + b.mul(fx, fx));
  CHECK(B.embed(env.S->d(env.f(1))) == 2 * b.mul(x, fx) + b.mul(fx, fx));
}
