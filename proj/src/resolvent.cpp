#include "hkr/resolvent.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hkr {

namespace {

Element shift_variables(const Element& a, int offset) {
  Element out;
  for (const auto& [m, c] : a.terms()) {
    std::vector<Factor> fs = m.factors();
    for (auto& f : fs) f.var += offset;
    out.add_term(Monomial(std::move(fs)), c);
  }
  return out;
}

}  // namespace

bool AlgebraPresentation::operator==(const AlgebraPresentation& other) const {
  if (!ring || !other.ring) return ring == other.ring && relations == other.relations;
  return ring->variables() == other.ring->variables() && relations == other.relations;
}

GcaPtr polynomial_ring(const std::vector<std::pair<std::string, int>>& variables) {
  std::vector<Variable> vars;
  vars.reserve(variables.size());
  for (const auto& [name, weight] : variables) vars.push_back(Variable{name, 0, weight});
  return Gca::make(std::move(vars));
}

void validate(const AlgebraPresentation& algebra) {
  if (!algebra.ring) throw Error("presentation has no polynomial ring");
  for (const auto& v : algebra.ring->variables()) {
    if (v.degree != 0) throw Error("variable " + v.name + " is not in degree 0");
    if (v.weight <= 0) throw Error("variable " + v.name + " must have positive weight");
  }
  for (std::size_t j = 0; j < algebra.relations.size(); ++j) {
    const Element& f = algebra.relations[j];
    const std::string label = "relation " + std::to_string(j + 1) + " (" + algebra.ring->format(f) + ")";
    if (f.is_zero()) throw Error(label + " is zero");
    algebra.ring->validate(f);
    auto bd = algebra.ring->bidegree(f);
    if (!bd) throw Error(label + " is not weight-homogeneous");
    if (bd->second <= 0) throw Error(label + " has no positive weight");
  }
}

Resolvent koszul_tate_resolve(const AlgebraPresentation& algebra, const Window& window) {
  validate(algebra);
  if (window.max_degree < 1 || window.max_weight < 1) throw WindowError("window must have N >= 1 and W >= 1");
  Resolvent res;
  res.algebra = algebra;
  res.window = window;

  std::vector<Variable> vars = algebra.ring->variables();
  std::vector<Element> diff(vars.size());
  std::map<std::pair<int, int>, int> counters;
  auto adjoin = [&](int degree, int weight, Element boundary) {
    const int index = counters[{degree, weight}]++;
    vars.push_back(Variable{"z" + std::to_string(-degree) + "_" + std::to_string(weight) + "_" +
                                std::to_string(index),
                            degree, weight});
    diff.push_back(std::move(boundary));
    return static_cast<int>(vars.size()) - 1;
  };

  for (const Element& f : algebra.relations) {
    const int w = algebra.ring->weight(f.terms().begin()->first);
    if (w > window.max_weight)
      throw WindowError("window weight " + std::to_string(window.max_weight) + " is below relation weight " +
                        std::to_string(w));
    res.relation_variables.push_back(adjoin(-1, w, f));
  }

  for (int w = 1; w <= window.max_weight; ++w) {
    for (int k = 1; k <= window.max_degree; ++k) {
      GcaPtr R = Gca::make(vars, diff);
      BidegreeSlice here(*R, -k, w);
      if (here.dimension() == 0) continue;
      BidegreeSlice above(*R, -k + 1, w);
      BidegreeSlice below(*R, -k - 1, w);
      auto cycles = kernel(boundary_matrix(*R, here, above));
      auto boundaries = boundary_matrix(*R, below, here);
      auto classes = quotient_representatives(cycles, boundaries);
      if (classes.empty()) continue;
      TateStep step{-k, w, {}};
      for (const auto& z : classes) step.added.push_back(adjoin(-k - 1, w, here.element(z)));
      res.log.push_back(std::move(step));
    }
  }
  res.R = Gca::make(std::move(vars), std::move(diff));
  return res;
}

// ---------------------------------------------------------------- S = R (x) R

Element Enveloping::f(int v) const { return Element::generator(right(v)) - Element::generator(left(v)); }

AlgebraMap Enveloping::left_embedding() const {
  AlgebraMap j(R, S);
  for (int v = 0; v < n; ++v) j.set(v, Element::generator(left(v)));
  return j;
}

Enveloping enveloping(const Resolvent& resolvent) {
  const Gca& R = *resolvent.R;
  const int n = static_cast<int>(R.size());
  std::vector<Variable> vars = R.variables();
  std::vector<Element> diff = R.differential_values();
  std::vector<Element> mu(static_cast<std::size_t>(2 * n));
  for (int v = 0; v < n; ++v) {
    const Variable& x = R.variable(v);
    vars.push_back(Variable{x.name + "''", x.degree, x.weight});
    diff.push_back(shift_variables(R.differential_of(v), n));
    mu[static_cast<std::size_t>(v)] = Element::generator(v);
    mu[static_cast<std::size_t>(n + v)] = Element::generator(v);
  }
  Enveloping env;
  env.R = resolvent.R;
  env.n = n;
  env.S = Gca::make(std::move(vars), std::move(diff), Gca::Augmentation{resolvent.R, std::move(mu)});
  return env;
}

std::vector<int> descending_degree_order(const Gca& R) {
  std::vector<int> order(R.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return R.variable(a).degree > R.variable(b).degree; });
  return order;
}

// ---------------------------------------------------------------- B

namespace {

GcaPtr build_acyclic(const Enveloping& env) {
  const Gca& R = *env.R;
  const int n = env.n;
  std::vector<Variable> vars = R.variables();
  std::vector<Element> diff = R.differential_values();
  for (int v = 0; v < n; ++v) {
    const Variable& x = R.variable(v);
    vars.push_back(Variable{"f~" + x.name, x.degree, x.weight});
    diff.emplace_back();
  }
  for (int v = 0; v < n; ++v) {
    const Variable& x = R.variable(v);
    vars.push_back(Variable{"Tf~" + x.name, x.degree - 1, x.weight});
    diff.push_back(Element::generator(n + v));
  }
  std::vector<Element> augmentation(static_cast<std::size_t>(3 * n));
  for (int v = 0; v < n; ++v) augmentation[static_cast<std::size_t>(v)] = Element::generator(v);
  return Gca::make(std::move(vars), std::move(diff), Gca::Augmentation{env.R, std::move(augmentation)});
}

Derivation build_delta(const GcaPtr& B, int n) {
  Derivation delta(B, B, -1);
  for (int v = 0; v < n; ++v) {
    delta.vanish_on(v);
    delta.set(n + v, Element::generator(2 * n + v));
    delta.vanish_on(2 * n + v);
  }
  return delta;
}

}  // namespace

AcyclicAlgebra::AcyclicAlgebra(const Enveloping& env)
    : env_(env),
      B_(build_acyclic(env_)),
      delta_(build_delta(B_, env_.n)),
      euler_(commutator(B_->differential(), delta_)),
      embedding_(env_.S, B_) {
  const int n = env_.n;
  embedded_f_.resize(static_cast<std::size_t>(n));
  homotopy_terms_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) embedding_.set(env_.left(v), Element::generator(v));
  for (int v : descending_degree_order(*env_.R)) {
    const Element boundary = embedding_.apply(env_.S->d(env_.f(v)));
    Element correction = homotopy(boundary);
    Element image = Element::generator(tilde(v)) + correction;
    embedded_f_[static_cast<std::size_t>(v)] = image;
    homotopy_terms_[static_cast<std::size_t>(v)] = std::move(correction);
    embedding_.set(env_.right(v), Element::generator(left(v)) + image);
  }
}

int AcyclicAlgebra::symmetric_degree(const Monomial& m) const {
  int d = 0;
  for (const auto& f : m.factors())
    if (f.var >= env_.n) d += f.exp;
  return d;
}

Element AcyclicAlgebra::euler_inverse(const Element& a) const {
  Element out;
  for (const auto& [m, c] : a.terms()) {
    const int d = symmetric_degree(m);
    if (d == 0) throw Error("xi is undefined on " + B_->format(m) + ", which lies outside the augmentation ideal");
    out.add_term(m, c / d);
  }
  return out;
}

Element AcyclicAlgebra::homotopy(const Element& a) const {
  for (const auto& [m, c] : a.terms())
    if (symmetric_degree(m) == 0)
      throw Error("homotopy is undefined on " + B_->format(m) + ", which lies outside the augmentation ideal");
  return euler_inverse(delta_.apply(a));
}

}  // namespace hkr
