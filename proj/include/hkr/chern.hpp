#pragma once

// Twisted complexes over a resolvent R: free modules sum_i e_i R whose
// differential is d(e_j a) = sum_i e_i D_ij a + (-1)^{deg e_j} e_j d(a).  Their
// Atiyah class, Chern character and semiregularity map take values in the
// cotangent model of R.

#include <string>
#include <vector>

#include "hkr/atiyah.hpp"
#include "hkr/gca.hpp"

namespace hkr {

struct BasisElement {
  std::string name;
  int degree = 0;
  int weight = 0;
  bool operator==(const BasisElement&) const = default;
};

/// Square matrix of elements; entry [k][i] is the coefficient of e_k in the image of e_i.
using Matrix = std::vector<std::vector<Element>>;

struct TwistedComplex {
  GcaPtr ring;
  std::vector<BasisElement> basis;
  Matrix differential;

  std::size_t rank() const { return basis.size(); }
};

Matrix zero_matrix(std::size_t size);
Matrix identity_matrix(std::size_t size);
Matrix multiply(const Gca& algebra, const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b, const Rational& scale = 1);

/// Empty when D has the right bidegrees and d(D) + D^2 = 0 with the module signs.
std::vector<std::string> check_twisted(const TwistedComplex& F);

TwistedComplex direct_sum(const TwistedComplex& F, const TwistedComplex& G);
/// F[1]: every basis degree lowered by one and D negated.
TwistedComplex shift(const TwistedComplex& F);
/// Koszul complex of degree-0 homogeneous elements, with e_I in degree |I|.
TwistedComplex koszul_complex(const GcaPtr& ring, const std::vector<Element>& elements);

/// At_ki = -(-1)^{deg e_k} Td(D_ki): the degree-0 endomorphism -[d, connection]
/// for the connection that kills the basis.
Matrix atiyah_of_complex(const TwistedComplex& F, const CotangentModel& cotangent);
/// Reads At as a map into the unshifted forms: row k scaled by (-1)^{deg e_k}.
Matrix unshifted(const TwistedComplex& F, const Matrix& at);
/// Empty when the commutator of the total differential with At vanishes.
std::vector<std::string> check_atiyah_closed(const TwistedComplex& F, const Matrix& at,
                                             const CotangentModel& cotangent);

/// sum_i (-1)^{deg e_i (1 + map_degree)} A_ii
Element supertrace(const TwistedComplex& F, const Matrix& a, int map_degree);

/// exp(-At) as a matrix; throws if At fails to be nilpotent within the weight span.
Matrix exp_atiyah(const TwistedComplex& F, const Matrix& at, const Gca& algebra);

Element chern_character(const TwistedComplex& F, const CotangentModel& cotangent);

/// Empty when endomorphism (entries in R, total degree `degree`) commutes with the differential.
std::vector<std::string> check_chain_endomorphism(const TwistedComplex& F, const Matrix& endomorphism, int degree);

/// str(exp(-At) endomorphism); throws Error when endomorphism is not a chain endomorphism.
Element semiregularity(const TwistedComplex& F, const Matrix& endomorphism, int degree, const CotangentModel& cotangent);

}  // namespace hkr
