#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "hkr/properties.hpp"

using namespace hkr;
using namespace hkr::testing;

namespace {

void check_all(const AlgebraPresentation& algebra, Window window, int cases) {
  Models m(algebra, window);
  PropertyOptions options;
  options.cases = cases;
  options.seed = 7;
  options.max_weight = 3;
  auto results = run_properties(m, options);
  REQUIRE(results.size() == property_names().size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    CAPTURE(results[i].name);
    CAPTURE(results[i].first_failure);
    CHECK(results[i].name == property_names()[i]);
    CHECK(results[i].cases > 0);
    CHECK(results[i].failures == 0);
  }
}

}  // namespace

TEST_CASE("property names are unique") {
  auto names = property_names();
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
}

TEST_CASE("structural properties hold on the smooth line") { check_all(smooth_line(), {3, 4}, 20); }

TEST_CASE("structural properties hold on the dual numbers") { check_all(dual_numbers(), {3, 4}, 20); }

TEST_CASE("structural properties hold on the plane pair") { check_all(plane_pair(), {2, 3}, 12); }

TEST_CASE("a broken map is caught") {
  Models m(dual_numbers(), {2, 3});
  m.reverse.set(m.cotangent.form(0), Element());
  PropertyOptions options;
  options.cases = 5;
  auto results = run_properties(m, options);
  bool caught = false;
  for (const auto& r : results)
    if (r.name == "reverse_map_bijective_chain_algebra_map") caught = !r.passed();
  CHECK(caught);
}

TEST_CASE("chern properties hold for the residue field of the dual numbers") {
  Resolvent res = koszul_tate_resolve(dual_numbers(), {2, 4});
  CotangentModel cot = cotangent_model(res.R);
  TwistedComplex F{res.R, {{"e0", 0, 0}, {"e1", -1, 1}, {"u", -2, 2}}, zero_matrix(3)};
  F.differential[0][1] = Element::generator(0);
  F.differential[1][2] = Element::generator(0);
  F.differential[0][2] = -Element::generator(res.R->id("z1_2_0"));
  PropertyOptions options;
  options.cases = 30;
  auto results = run_chern_properties(F, cot, options);
  REQUIRE(results.size() == chern_property_names().size());
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.first_failure);
    CHECK(r.passed());
  }
}

TEST_CASE("chern properties hold for a Koszul complex on the plane") {
  Resolvent res = koszul_tate_resolve(plane_pair(), {2, 4});
  CotangentModel cot = cotangent_model(res.R);
  TwistedComplex K = koszul_complex(res.R, {Element::generator(0), Element::generator(1)});
  PropertyOptions options;
  options.cases = 30;
  for (const auto& r : run_chern_properties(K, cot, options)) {
    CAPTURE(r.name);
    CAPTURE(r.first_failure);
    CHECK(r.passed());
  }
}

TEST_CASE("an invalid complex fails every chern property") {
  Resolvent res = koszul_tate_resolve(smooth_line(), {2, 4});
  CotangentModel cot = cotangent_model(res.R);
  TwistedComplex bad{res.R, {{"a", 0, 0}, {"b", 1, 0}}, zero_matrix(2)};
  bad.differential[1][0] = Element(1);
  bad.differential[0][1] = Element(1);
  for (const auto& r : run_chern_properties(bad, cot)) CHECK_FALSE(r.passed());
}
