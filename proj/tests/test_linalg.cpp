#include <random>

#include "doctest.h"
#include "hkr/linalg.hpp"

using namespace hkr;

namespace {

SparseVector dense(std::initializer_list<int> values) {
  SparseVector v;
  int i = 0;
  for (int x : values) {
    if (x != 0) v.emplace_back(i, Rational(x));
    ++i;
  }
  return v;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  std::vector<SparseVector> m = {dense({1, 2, 3}), dense({2, 4, 6}), dense({0, 1, 1})};
  CHECK(rank(m) == 2);
  CHECK(rank_bareiss(m, 3) == 2);
  CHECK(rank({}) == 0);
  CHECK(rank_bareiss({}, 4) == 0);
  CHECK(rank({dense({0, 0})}) == 0);
}

TEST_CASE("both rank algorithms agree on random rational matrices") {
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> entry(-3, 3), size(1, 7), keep(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = size(gen), cols = size(gen);
    std::vector<SparseVector> m;
    for (int r = 0; r < rows; ++r) {
      SparseVector v;
      for (int c = 0; c < cols; ++c)
        if (keep(gen) == 0) {
          const int x = entry(gen);
          if (x != 0) v.emplace_back(c, Rational(x, 1 + (c % 3)));
        }
      m.push_back(v);
    }
    // a dependent row
    if (rows > 1) m.push_back(sparse_add(m[0], m[1], Rational(-5, 2)));
    CHECK(rank(m) == rank_bareiss(m, cols));
    Echelon e;
    for (const auto& v : m) e.add(v);
    CHECK(e.rank() == rank(m));
  }
}

TEST_CASE("echelon membership and reduction") {
  Echelon e;
  CHECK(e.add(dense({1, 1, 0})));
  CHECK(e.add(dense({0, 1, 1})));
  CHECK_FALSE(e.add(dense({1, 2, 1})));
  CHECK(e.contains(dense({2, 0, -2})));
  CHECK_FALSE(e.contains(dense({0, 0, 1})));
  auto basis = e.rref();
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == dense({1, 0, -1}));
  CHECK(basis[1] == dense({0, 1, 1}));
}

TEST_CASE("kernel of a matrix given by columns") {
  std::vector<SparseVector> columns = {dense({1, 0}), dense({0, 1}), dense({1, 1})};
  auto k = kernel(columns);
  REQUIRE(k.size() == 1);
  CHECK(apply_columns(columns, k[0]).empty());
}

TEST_CASE("quotient representatives are canonical") {
  std::vector<SparseVector> cycles = {dense({1, 0, 0}), dense({0, 1, 0}), dense({0, 0, 1})};
  std::vector<SparseVector> boundaries = {dense({1, 1, 0})};
  auto reps = quotient_representatives(cycles, boundaries);
  CHECK(reps.size() == 2);
  std::vector<SparseVector> shuffled = {dense({0, 0, 3}), dense({2, 0, 0}), dense({1, 1, 1})};
  CHECK(quotient_representatives(shuffled, boundaries) == reps);
}
