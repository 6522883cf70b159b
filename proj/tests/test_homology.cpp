#include "doctest.h"
#include "fixtures.hpp"
#include "hkr/bar_oracle.hpp"
#include "hkr/homology.hpp"

using namespace hkr;
using namespace hkr::testing;

namespace {

struct Models {
  Resolvent res;
  Enveloping env;
  AcyclicAlgebra B;
  AtiyahCalculus at;
  HochschildModel hh;
  CotangentModel cot;

  Models(const AlgebraPresentation& a, Window w)
      : res(koszul_tate_resolve(a, w)),
        env(enveloping(res)),
        B(env),
        at(B, omega_algebra(env)),
        hh(hochschild_model(B)),
        cot(cotangent_model(res.R)) {}
};

AlgebraMap identity_of(const GcaPtr& g) {
  AlgebraMap id(g, g);
  for (int v = 0; v < static_cast<int>(g->size()); ++v) id.set(v, Element::generator(v));
  return id;
}

}  // namespace

TEST_CASE("slices of the Hochschild model of the line") {
  Models m(smooth_line(), {4, 6});
  const Gca& H = *m.hh.H;
  BidegreeSlice s(H, -1, 3);
  REQUIRE(s.dimension() == 1);
  CHECK(H.format(s.basis()[0]) == "x^2*Tf~x");
  BidegreeSlice unit(H, 0, 0);
  REQUIRE(unit.dimension() == 1);
  CHECK(unit.basis()[0].is_one());
  CHECK(boundary_matrix(H, s, BidegreeSlice(H, 0, 3))[0].empty());
}

TEST_CASE("dual numbers slice (-2, 2) and its boundary") {
  Models m(dual_numbers(), {4, 6});
  const Gca& H = *m.hh.H;
  BidegreeSlice s(H, -2, 2);
  // Tf~y and the square of the even generator Tf~x are both in (-2, 2)
  CHECK(s.index_of(Monomial::generator(m.hh.shifted(1))).has_value());
  BidegreeSlice t(H, -1, 2);
  auto cols = boundary_matrix(H, s, t);
  const auto j = static_cast<std::size_t>(*s.index_of(Monomial::generator(m.hh.shifted(1))));
  CHECK(t.element(cols[j]) == -2 * H.mul(Element::generator(0), Element::generator(m.hh.shifted(0))));
}

TEST_CASE("homology of the line and the dual numbers") {
  Models line(smooth_line(), {4, 6});
  auto hh = homology_dims(*line.hh.H, {4, 6});
  for (int w = 0; w <= 6; ++w) {
    CHECK(hh[{0, w}] == 1);
    CHECK(hh[{1, w}] == (w >= 1 ? 1 : 0));
    for (int n = 2; n <= 4; ++n) CHECK(hh[{n, w}] == 0);
  }
  Models dual(dual_numbers(), {4, 6});
  auto dd = homology_dims(*dual.hh.H, {4, 6}, 2);
  std::vector<int> totals(5, 0);
  for (const auto& [key, dim] : dd) totals[static_cast<std::size_t>(key.first)] += dim;
  CHECK(totals == std::vector<int>{2, 1, 1, 1, 1});
  CHECK(homology_dims(*dual.res.R, {4, 6}) == homology_dims(*dual.res.R, {4, 6}, 3));
}

TEST_CASE("decomposition of the line and dual numbers") {
  Models line(smooth_line(), {4, 6});
  auto parts = decompose(line.cot, {4, 6});
  for (int w = 1; w <= 6; ++w) {
    CHECK(parts[{1, w, 1}] == 1);
    CHECK(parts[{0, w, 0}] == 1);
    for (int p = 2; p <= 4; ++p)
      for (int n = 0; n <= 4; ++n) CHECK(parts[{n, w, p}] == 0);
  }
  Models dual(dual_numbers(), {4, 6});
  auto dp = decompose(dual.cot, {4, 6});
  int n2 = 0;
  for (const auto& [key, dim] : dp)
    if (std::get<0>(key) == 2) {
      CHECK((dim == 0 || std::get<2>(key) == 1));
      n2 += dim;
    }
  CHECK(n2 == 1);
  CHECK(sum_rule_violations(dp, homology_dims(*dual.hh.H, {4, 6})).empty());
}

TEST_CASE("iso verification") {
  Models dual(dual_numbers(), {4, 6});
  CHECK(verify_iso(decomposition_map(dual.at, dual.hh, dual.cot), {4, 6}).passed());
  CHECK(verify_iso(reverse_map(dual.B, dual.hh, dual.cot), {4, 6}, 2).passed());
  CHECK(verify_iso(identity_of(dual.hh.H), {4, 6}).passed());

  // Tf~y -> 0 is a chain map that fails to be injective
  AlgebraMap degenerate = identity_of(dual.hh.H);
  degenerate.set(dual.hh.shifted(1), Element());
  IsoReport r = verify_iso(degenerate, {2, 3});
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("composites on the line are identities") {
  Models line(smooth_line(), {3, 4});
  AlgebraMap decomposition = decomposition_map(line.at, line.hh, line.cot);
  AlgebraMap reverse = reverse_map(line.B, line.hh, line.cot);
  CompositeReport r = composite_deviation(decomposition, reverse, {3, 4});
  CHECK(r.identity_on_chains());
  CHECK(r.identity_on_homology());
}

TEST_CASE("euler characteristic agrees with slice dimensions") {
  Models pair(plane_pair(), {3, 4});
  for (int w = 0; w <= 4; ++w) {
    EulerCheck e = euler_characteristic(*pair.hh.H, w);
    CHECK(e.from_slices == e.from_homology);
  }
}

TEST_CASE("bar oracle") {
  oracle::WeightedQuotient dual(dual_numbers(), 6);
  CHECK(dual.dimension(0) == 1);
  CHECK(dual.dimension(1) == 1);
  for (int w = 2; w <= 6; ++w) CHECK(dual.dimension(w) == 0);

  oracle::WeightedQuotient pair(plane_pair(), 6);
  REQUIRE(pair.dimension(2) == 1);
  CHECK(pair.basis(2)[0] == oracle::Exponents{0, 2});
  CHECK(pair.reduce({{{1, 1}, 1}}, 2) == oracle::Dense{0});

  oracle::WeightedQuotient line(smooth_line(), 6);
  for (int w = 0; w <= 6; ++w) CHECK(line.basis(w) == std::vector<oracle::Exponents>{{w}});
  for (int w = 1; w <= 6; ++w) {
    CHECK(oracle::bar_homology(line, 1, w) == 1);
    CHECK(oracle::bar_homology(line, 2, w) == 0);
  }
  CHECK(oracle::bar_homology(line, 0, 0) == 1);

  auto table = oracle::bar_homology_table(dual_numbers(), {4, 6}, 2);
  std::vector<int> totals(5, 0);
  for (const auto& [key, dim] : table) totals[static_cast<std::size_t>(key.first)] += dim;
  CHECK(totals == std::vector<int>{2, 1, 1, 1, 1});
  for (int n = 1; n <= 3; ++n)
    for (int w = 0; w <= 5; ++w) CHECK(oracle::bar_square_zero(pair, n, w));
}
