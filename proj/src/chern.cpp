#include "hkr/chern.hpp"

#include <algorithm>

namespace hkr {

namespace {

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

std::string entry(std::size_t k, std::size_t i) {
  return "(" + std::to_string(k) + ", " + std::to_string(i) + ")";
}

}  // namespace

Matrix zero_matrix(std::size_t size) { return Matrix(size, std::vector<Element>(size)); }

Matrix identity_matrix(std::size_t size) {
  Matrix m = zero_matrix(size);
  for (std::size_t i = 0; i < size; ++i) m[i][i] = Element(1);
  return m;
}

Matrix multiply(const Gca& algebra, const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out = zero_matrix(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      if (a[k][j].is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (!b[j][i].is_zero()) out[k][i] += algebra.mul(a[k][j], b[j][i]);
    }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b, const Rational& scale) {
  Matrix out = a;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t i = 0; i < a.size(); ++i) out[k][i] += scale * b[k][i];
  return out;
}

std::vector<std::string> check_twisted(const TwistedComplex& F) {
  std::vector<std::string> report;
  const std::size_t n = F.rank();
  const Gca& R = *F.ring;
  if (F.differential.size() != n) return {"differential has " + std::to_string(F.differential.size()) + " rows"};
  for (const auto& row : F.differential)
    if (row.size() != n) return {"differential is not square"};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const Element& d = F.differential[k][i];
      try {
        R.validate(d);
      } catch (const Error& e) {
        report.push_back("entry " + entry(k, i) + ": " + e.what());
        continue;
      }
      const int degree = F.basis[i].degree + 1 - F.basis[k].degree;
      const int weight = F.basis[i].weight - F.basis[k].weight;
      for (const auto& [m, c] : d.terms())
        if (R.degree(m) != degree || R.weight(m) != weight) {
          report.push_back("entry " + entry(k, i) + " has a term " + R.format(m) + " of bidegree (" +
                           std::to_string(R.degree(m)) + ", " + std::to_string(R.weight(m)) + "), expected (" +
                           std::to_string(degree) + ", " + std::to_string(weight) + ")");
          break;
        }
    }
  if (!report.empty()) return report;
  const Matrix square = multiply(R, F.differential, F.differential);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      Element residual = square[l][i] + Rational(sign(F.basis[l].degree)) * R.d(F.differential[l][i]);
      if (!residual.is_zero()) report.push_back("total differential squares to " + R.format(residual) + " at " + entry(l, i));
    }
  return report;
}

TwistedComplex direct_sum(const TwistedComplex& F, const TwistedComplex& G) {
  if (F.ring != G.ring && !(F.ring->extends(*G.ring) && G.ring->extends(*F.ring)))
    throw Error("direct sum of complexes over different rings");
  TwistedComplex out{F.ring, F.basis, {}};
  out.basis.insert(out.basis.end(), G.basis.begin(), G.basis.end());
  const std::size_t n = F.rank();
  out.differential = zero_matrix(out.rank());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) out.differential[k][i] = F.differential[k][i];
  for (std::size_t k = 0; k < G.rank(); ++k)
    for (std::size_t i = 0; i < G.rank(); ++i) out.differential[n + k][n + i] = G.differential[k][i];
  return out;
}

TwistedComplex shift(const TwistedComplex& F) {
  TwistedComplex out = F;
  for (auto& e : out.basis) {
    e.degree -= 1;
    e.name += "[1]";
  }
  for (auto& row : out.differential)
    for (auto& x : row) x = -x;
  return out;
}

TwistedComplex koszul_complex(const GcaPtr& ring, const std::vector<Element>& elements) {
  const std::size_t k = elements.size();
  if (k > 16) throw Error("koszul complex on too many elements");
  std::vector<int> weights;
  int total = 0;
  for (const auto& a : elements) {
    auto bd = ring->bidegree(a);
    if (!bd || bd->first != 0) throw Error("koszul complex needs nonzero homogeneous degree-0 elements");
    weights.push_back(bd->second);
    total += bd->second;
  }
  const std::size_t size = std::size_t{1} << k;
  TwistedComplex F{ring, {}, zero_matrix(size)};
  for (std::size_t s = 0; s < size; ++s) {
    int degree = 0, weight = total;
    std::string name = "e";
    for (std::size_t j = 0; j < k; ++j)
      if (s & (std::size_t{1} << j)) {
        ++degree;
        weight -= weights[j];
        name += std::to_string(j + 1);
      }
    F.basis.push_back({name, degree, weight});
  }
  // d(e_I) = sum_{j not in I} e_{I+j} (-1)^{#{i in I : i < j}} a_j
  for (std::size_t s = 0; s < size; ++s)
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t bit = std::size_t{1} << j;
      if (s & bit) continue;
      int below = 0;
      for (std::size_t i = 0; i < j; ++i)
        if (s & (std::size_t{1} << i)) ++below;
      F.differential[s | bit][s] = Rational(sign(below)) * elements[j];
    }
  return F;
}

Matrix atiyah_of_complex(const TwistedComplex& F, const CotangentModel& cotangent) {
  if (!cotangent.cot->extends(*F.ring)) throw Error("cotangent model is not built over the complex's ring");
  const std::size_t n = F.rank();
  Matrix at = zero_matrix(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      at[k][i] = Rational(-sign(F.basis[k].degree)) * cotangent.exterior.apply(F.differential[k][i]);
  return at;
}

Matrix unshifted(const TwistedComplex& F, const Matrix& at) {
  Matrix out = at;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto& x : out[k]) x *= Rational(sign(F.basis[k].degree));
  return out;
}

std::vector<std::string> check_atiyah_closed(const TwistedComplex& F, const Matrix& at,
                                             const CotangentModel& cotangent) {
  const Gca& C = *cotangent.cot;
  const Matrix left = multiply(C, F.differential, at);
  const Matrix right = multiply(C, at, F.differential);
  std::vector<std::string> report;
  for (std::size_t l = 0; l < F.rank(); ++l)
    for (std::size_t i = 0; i < F.rank(); ++i) {
      Element r = left[l][i] + Rational(sign(F.basis[l].degree)) * C.d(at[l][i]) - right[l][i];
      if (!r.is_zero()) report.push_back("[d, At] = " + C.format(r) + " at " + entry(l, i));
    }
  return report;
}

Element supertrace(const TwistedComplex& F, const Matrix& a, int map_degree) {
  Element out;
  for (std::size_t i = 0; i < F.rank(); ++i) out += Rational(sign(F.basis[i].degree * (1 + map_degree))) * a[i][i];
  return out;
}

Matrix exp_atiyah(const TwistedComplex& F, const Matrix& at, const Gca& algebra) {
  int lo = 0, hi = 0;
  for (std::size_t i = 0; i < F.rank(); ++i) {
    lo = i == 0 ? F.basis[i].weight : std::min(lo, F.basis[i].weight);
    hi = i == 0 ? F.basis[i].weight : std::max(hi, F.basis[i].weight);
  }
  const int cap = hi - lo + 1;
  Matrix result = identity_matrix(F.rank());
  Matrix power = identity_matrix(F.rank());
  for (int k = 1;; ++k) {
    power = multiply(algebra, power, at);
    bool zero = true;
    for (auto& row : power)
      for (auto& x : row) {
        x *= Rational(-1, k);
        if (!x.is_zero()) zero = false;
      }
    if (zero) break;
    if (k > cap) throw Error("Atiyah class of the complex is not nilpotent within its weight span");
    result = add(result, power);
  }
  return result;
}

Element chern_character(const TwistedComplex& F, const CotangentModel& cotangent) {
  const Matrix at = atiyah_of_complex(F, cotangent);
  return supertrace(F, exp_atiyah(F, at, *cotangent.cot), 0);
}

std::vector<std::string> check_chain_endomorphism(const TwistedComplex& F, const Matrix& endomorphism, int degree) {
  const Gca& R = *F.ring;
  const std::size_t n = F.rank();
  if (endomorphism.size() != n) return {"endomorphism has the wrong size"};
  std::vector<std::string> report;
  for (std::size_t k = 0; k < n; ++k) {
    if (endomorphism[k].size() != n) return {"endomorphism is not square"};
    for (std::size_t i = 0; i < n; ++i) {
      const int expected = F.basis[i].degree + degree - F.basis[k].degree;
      for (const auto& [m, c] : endomorphism[k][i].terms())
        if (R.degree(m) != expected) {
          report.push_back("entry " + entry(k, i) + " has degree " + std::to_string(R.degree(m)) + ", expected " +
                           std::to_string(expected));
          break;
        }
    }
  }
  if (!report.empty()) return report;
  const Matrix left = multiply(R, F.differential, endomorphism);
  const Matrix right = multiply(R, endomorphism, F.differential);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      Element r = left[l][i] + Rational(sign(F.basis[l].degree)) * R.d(endomorphism[l][i]) -
                  Rational(sign(degree)) * right[l][i];
      if (!r.is_zero()) report.push_back("not a chain map: residual " + R.format(r) + " at " + entry(l, i));
    }
  return report;
}

Element semiregularity(const TwistedComplex& F, const Matrix& endomorphism, int degree, const CotangentModel& cotangent) {
  auto problems = check_chain_endomorphism(F, endomorphism, degree);
  if (!problems.empty()) throw Error(problems.front());
  const Gca& C = *cotangent.cot;
  const Matrix ac = exp_atiyah(F, atiyah_of_complex(F, cotangent), C);
  return supertrace(F, multiply(C, ac, endomorphism), degree);
}

}  // namespace hkr
