#pragma once

// Free graded-commutative DG algebras over Q.
//
// Generators sit in cohomological degrees <= 0 and carry a weight >= 0; the
// differential has degree +1 and preserves weight.  Elements are kept in a
// canonical form: monomials list their factors by increasing variable id, odd
// variables appear at most once, and every Koszul sign produced by reordering
// is absorbed into the rational coefficient.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hkr/rational.hpp"

namespace hkr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a request leaves the (degree, weight) window a model was built for.
class WindowError : public Error {
 public:
  using Error::Error;
};

struct Variable {
  std::string name;
  int degree = 0;  // cohomological, <= 0
  int weight = 0;

  bool odd() const { return degree % 2 != 0; }
  bool operator==(const Variable&) const = default;
};

struct Factor {
  int var = 0;
  int exp = 0;
  auto operator<=>(const Factor&) const = default;
};

class Monomial {
 public:
  Monomial() = default;
  /// Factors must be sorted by variable id with positive exponents.
  explicit Monomial(std::vector<Factor> factors);

  static Monomial generator(int var, int exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(int var) const;
  /// Largest variable id occurring, or -1 for the unit monomial.
  int max_var() const { return factors_.empty() ? -1 : factors_.back().var; }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  Element() = default;
  Element(const Rational& constant);  // NOLINT: scalars embed implicitly
  Element(int constant) : Element(Rational(constant)) {}  // NOLINT

  static Element monomial(const Monomial& m, const Rational& coefficient = 1);
  static Element generator(int var) { return monomial(Monomial::generator(var)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  int max_var() const;

  void add_term(const Monomial& m, const Rational& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }

  bool operator==(const Element& other) const { return terms_ == other.terms_; }

 private:
  Terms terms_;
};

class Gca;
class Derivation;
class AlgebraMap;
using GcaPtr = std::shared_ptr<const Gca>;

/// A free graded-commutative DG algebra on a table of variables.
///
/// Immutable once built.  An optional augmentation sends each generator to an
/// element of another algebra (e.g. the multiplication map S = R (x) R -> R).
class Gca : public std::enable_shared_from_this<Gca> {
 public:
  struct Augmentation {
    GcaPtr target;
    std::vector<Element> images;
  };

  /// `differential` may be empty (all generators are cycles) or must have one
  /// entry per variable.
  static GcaPtr make(std::vector<Variable> variables, std::vector<Element> differential = {},
                     std::optional<Augmentation> augmentation = std::nullopt);

  std::size_t size() const { return variables_.size(); }
  const Variable& variable(int id) const { return variables_.at(static_cast<std::size_t>(id)); }
  const std::vector<Variable>& variables() const { return variables_; }
  std::optional<int> find(std::string_view name) const;
  int id(std::string_view name) const;

  const Element& differential_of(int id) const { return differential_.at(static_cast<std::size_t>(id)); }
  const std::vector<Element>& differential_values() const { return differential_; }
  Derivation differential() const;
  Element d(const Element& a) const;

  const std::optional<Augmentation>& augmentation() const { return augmentation_; }
  AlgebraMap augmentation_map() const;

  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, int exponent) const;
  /// Multiplies two monomials; returns 0, +1 or -1 and writes the canonical product.
  int mul_monomials(const Monomial& a, const Monomial& b, Monomial& out) const;

  int degree(const Monomial& m) const;
  int weight(const Monomial& m) const;
  bool odd(const Monomial& m) const { return degree(m) % 2 != 0; }
  /// (degree, weight) if every term shares it; nullopt for zero or mixed elements.
  std::optional<std::pair<int, int>> bidegree(const Element& a) const;

  /// True if `other`'s variables form a prefix of this algebra's variables.
  bool extends(const Gca& other) const;
  /// Throws if `a` mentions unknown variables or squares an odd one.
  void validate(const Element& a) const;

  std::string format(const Element& a) const;
  std::string format(const Monomial& m) const;

 private:
  Gca() = default;

  std::vector<Variable> variables_;
  std::vector<Element> differential_;
  std::optional<Augmentation> augmentation_;
};

/// A graded derivation D: source -> target of fixed degree, where target
/// extends source.  D(ab) = D(a) b + (-1)^{|D||a|} a D(b).
class Derivation {
 public:
  Derivation(GcaPtr source, GcaPtr target, int degree);

  const GcaPtr& source() const { return source_; }
  const GcaPtr& target() const { return target_; }
  int degree() const { return degree_; }

  void set(int var, Element value);
  /// Declares that D vanishes on `var` (part of its linearity base).
  void vanish_on(int var);
  bool defined(int var) const { return defined_.at(static_cast<std::size_t>(var)); }
  const Element& on_generator(int var) const;

  Element apply(const Element& a) const;
  Element apply(const Monomial& m) const;

 private:
  GcaPtr source_;
  GcaPtr target_;
  int degree_;
  std::vector<Element> values_;
  std::vector<bool> defined_;
};

/// D1 D2 - (-1)^{|D1||D2|} D2 D1 on the generators of D2's source.  D1 must act
/// on D2's target and map D2's source into itself.
Derivation commutator(const Derivation& d1, const Derivation& d2);

/// Degree-0 algebra homomorphism given by generator images.
class AlgebraMap {
 public:
  AlgebraMap(GcaPtr source, GcaPtr target);

  const GcaPtr& source() const { return source_; }
  const GcaPtr& target() const { return target_; }

  void set(int var, Element image);
  bool defined(int var) const { return defined_.at(static_cast<std::size_t>(var)); }
  const Element& image(int var) const;

  Element apply(const Element& a) const;
  Element apply(const Monomial& m) const;

 private:
  GcaPtr source_;
  GcaPtr target_;
  std::vector<Element> images_;
  std::vector<bool> defined_;
};

/// Composite g o f.
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);

/// Diagnostics for a presentation; an empty list means it is valid.
std::vector<std::string> check_presentation(const Gca& algebra);

}  // namespace hkr
