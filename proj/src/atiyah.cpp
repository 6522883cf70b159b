#include "hkr/atiyah.hpp"

namespace hkr {

namespace {

Derivation retarget(const Derivation& d, const GcaPtr& target) {
  Derivation out(d.source(), target, d.degree());
  for (int v = 0; v < static_cast<int>(d.source()->size()); ++v)
    if (d.defined(v)) out.set(v, d.on_generator(v));
  return out;
}

AlgebraMap retarget(const AlgebraMap& f, const GcaPtr& target) {
  AlgebraMap out(f.source(), target);
  for (int v = 0; v < static_cast<int>(f.source()->size()); ++v)
    if (f.defined(v)) out.set(v, f.image(v));
  return out;
}

std::vector<Variable> with_forms(std::vector<Variable> vars, const Gca& R, const std::string& prefix) {
  for (const auto& x : R.variables()) vars.push_back(Variable{prefix + x.name, x.degree - 1, x.weight});
  return vars;
}

}  // namespace

OmegaAlgebra omega_algebra(const Enveloping& env) {
  const int n = env.n;
  const Gca& S = *env.S;
  auto vars = with_forms(S.variables(), *env.R, "Tdf_");
  std::vector<Element> diff = S.differential_values();
  diff.resize(vars.size());
  GcaPtr draft = Gca::make(vars, diff);

  Derivation d(env.S, draft, -1);
  for (int v = 0; v < n; ++v) {
    d.vanish_on(env.left(v));
    d.set(env.right(v), Element::generator(2 * n + v));
  }
  for (int v = 0; v < n; ++v) diff[static_cast<std::size_t>(2 * n + v)] = -d.apply(S.differential_of(env.right(v)));

  GcaPtr omega = Gca::make(std::move(vars), std::move(diff));
  return OmegaAlgebra{omega, n, retarget(d, omega)};
}

// ---------------------------------------------------------------- Atiyah class

namespace {

GcaPtr build_b_omega(const AcyclicAlgebra& B, const OmegaAlgebra& omega) {
  const int n = B.n();
  const Gca& b = *B.algebra();
  auto vars = with_forms(b.variables(), *B.enveloping().R, "Tdf_");
  std::vector<Element> diff = b.differential_values();
  diff.resize(vars.size());
  GcaPtr draft = Gca::make(vars, diff);

  // Omega -> B (x) Omega extending the embedding
  AlgebraMap lift(omega.omega, draft);
  for (int v = 0; v < n; ++v) {
    lift.set(v, Element::generator(v));
    lift.set(n + v, B.embedding().image(n + v));
    lift.set(2 * n + v, Element::generator(3 * n + v));
  }
  for (int v = 0; v < n; ++v)
    diff[static_cast<std::size_t>(3 * n + v)] = lift.apply(omega.omega->differential_of(omega.form(v)));
  return Gca::make(std::move(vars), std::move(diff));
}

Derivation build_connection(const AcyclicAlgebra& B, const GcaPtr& target) {
  const int n = B.n();
  Derivation nabla(B.algebra(), target, -1);
  for (int v = 0; v < n; ++v) {
    nabla.vanish_on(B.left(v));
    nabla.vanish_on(B.shifted(v));
  }
  for (int v : descending_degree_order(*B.enveloping().R))
    nabla.set(B.tilde(v), Element::generator(3 * n + v) - nabla.apply(B.homotopy_term(v)));
  return nabla;
}

Derivation negate(const Derivation& d) {
  Derivation out(d.source(), d.target(), d.degree());
  for (int v = 0; v < static_cast<int>(d.source()->size()); ++v)
    if (d.defined(v)) out.set(v, -d.on_generator(v));
  return out;
}

Derivation extend_by_zero(const Derivation& d, const GcaPtr& algebra) {
  Derivation out(algebra, algebra, d.degree());
  const auto base = static_cast<int>(d.source()->size());
  for (int v = 0; v < static_cast<int>(algebra->size()); ++v) {
    if (v < base)
      out.set(v, d.on_generator(v));
    else
      out.vanish_on(v);
  }
  return out;
}

}  // namespace

AtiyahCalculus::AtiyahCalculus(const AcyclicAlgebra& B, const OmegaAlgebra& omega)
    : B_(B),
      BOmega_(build_b_omega(B_, omega)),
      connection_(build_connection(B_, BOmega_)),
      atiyah_(negate(commutator(BOmega_->differential(), connection_))),
      extended_(extend_by_zero(atiyah_, BOmega_)) {}

Element AtiyahCalculus::atiyah_closed_form(int v) const {
  return connection_.apply(B_.homotopy_term(v)) - Element::generator(form(v));
}

int AtiyahCalculus::nilpotence_order(const Element& a) const {
  Element power = a;
  int k = 0;
  while (!power.is_zero()) {
    power = extended_.apply(power);
    ++k;
  }
  return k;
}

Element AtiyahCalculus::exp(const Element& a, int sign) const {
  int cap = 2;
  for (const auto& [m, c] : a.terms()) cap = std::max(cap, BOmega_->weight(m) + 2);
  Element result = a;
  Element power = a;
  for (int k = 1; !power.is_zero(); ++k) {
    if (k > cap) throw Error("exponential of the Atiyah class did not terminate within its nilpotence bound");
    power = extended_.apply(power);
    power *= Rational(sign, k);
    result += power;
  }
  return result;
}

// ---------------------------------------------------------------- models over R

HochschildModel hochschild_model(const AcyclicAlgebra& B) {
  const int n = B.n();
  const GcaPtr& R = B.enveloping().R;
  auto vars = with_forms(R->variables(), *R, "Tf~");
  std::vector<Element> diff = R->differential_values();
  diff.resize(vars.size());
  GcaPtr draft = Gca::make(vars, diff);

  AlgebraMap projection(B.algebra(), draft);
  for (int v = 0; v < n; ++v) {
    projection.set(B.left(v), Element::generator(v));
    projection.set(B.shifted(v), Element::generator(n + v));
  }
  for (int v : descending_degree_order(*R)) projection.set(B.tilde(v), -projection.apply(B.homotopy_term(v)));
  for (int v = 0; v < n; ++v) diff[static_cast<std::size_t>(n + v)] = projection.image(B.tilde(v));

  GcaPtr H = Gca::make(std::move(vars), std::move(diff));
  return HochschildModel{H, n, retarget(projection, H)};
}

int CotangentModel::form_degree(const Monomial& m) const {
  int p = 0;
  for (const auto& f : m.factors())
    if (f.var >= n) p += f.exp;
  return p;
}

CotangentModel cotangent_model(const GcaPtr& R) {
  const auto n = static_cast<int>(R->size());
  auto vars = with_forms(R->variables(), *R, "Td");
  std::vector<Element> diff = R->differential_values();
  diff.resize(vars.size());
  GcaPtr draft = Gca::make(vars, diff);

  Derivation d(R, draft, -1);
  for (int v = 0; v < n; ++v) d.set(v, Element::generator(n + v));
  for (int v = 0; v < n; ++v) diff[static_cast<std::size_t>(n + v)] = -d.apply(R->differential_of(v));

  GcaPtr cot = Gca::make(std::move(vars), std::move(diff));
  return CotangentModel{cot, n, retarget(d, cot)};
}

AlgebraMap forms_projection(const AtiyahCalculus& calculus, const CotangentModel& cotangent) {
  const AcyclicAlgebra& B = calculus.acyclic();
  const int n = B.n();
  AlgebraMap to_forms(calculus.algebra(), cotangent.cot);
  for (int v = 0; v < n; ++v) {
    to_forms.set(B.left(v), Element::generator(v));
    to_forms.set(B.tilde(v), Element());
    to_forms.set(B.shifted(v), Element());
    to_forms.set(calculus.form(v), Element::generator(cotangent.form(v)));
  }
  return to_forms;
}

AlgebraMap decomposition_map(const AtiyahCalculus& calculus, const HochschildModel& hochschild,
                   const CotangentModel& cotangent) {
  const AcyclicAlgebra& B = calculus.acyclic();
  const AlgebraMap to_forms = forms_projection(calculus, cotangent);
  AlgebraMap decomposition(hochschild.H, cotangent.cot);
  for (int v = 0; v < B.n(); ++v) {
    decomposition.set(v, Element::generator(v));
    decomposition.set(hochschild.shifted(v), to_forms.apply(calculus.exp(Element::generator(B.shifted(v)), -1)));
  }
  return decomposition;
}

AlgebraMap reverse_map(const AcyclicAlgebra& B, const HochschildModel& hochschild,
                       const CotangentModel& cotangent) {
  AlgebraMap reverse(cotangent.cot, hochschild.H);
  for (int v = 0; v < B.n(); ++v) {
    reverse.set(v, Element::generator(v));
    reverse.set(cotangent.form(v), hochschild.projection.apply(B.delta().apply(B.embedded_f(v))));
  }
  return reverse;
}

}  // namespace hkr
