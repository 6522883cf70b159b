#include "hkr/gca.hpp"

#include <algorithm>
#include <sstream>

namespace hkr {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exp <= 0) throw Error("monomial factor with non-positive exponent");
    if (i > 0 && factors_[i - 1].var >= factors_[i].var) throw Error("monomial factors not sorted");
  }
}

Monomial Monomial::generator(int var, int exp) {
  if (exp == 0) return Monomial();
  return Monomial({Factor{var, exp}});
}

int Monomial::exponent(int var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                             [](const Factor& f, int v) { return f.var < v; });
  return (it != factors_.end() && it->var == var) ? it->exp : 0;
}

// ---------------------------------------------------------------- Element

Element::Element(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

Element Element::monomial(const Monomial& m, const Rational& coefficient) {
  Element e;
  e.add_term(m, coefficient);
  return e;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Element::max_var() const {
  int result = -1;
  for (const auto& [m, c] : terms_) result = std::max(result, m.max_var());
  return result;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

// ---------------------------------------------------------------- Gca

GcaPtr Gca::make(std::vector<Variable> variables, std::vector<Element> differential,
                 std::optional<Augmentation> augmentation) {
  std::shared_ptr<Gca> g(new Gca());
  g->variables_ = std::move(variables);
  for (std::size_t i = 0; i < g->variables_.size(); ++i) {
    const auto& v = g->variables_[i];
    if (v.degree > 0) throw Error("variable " + v.name + " has positive degree");
    if (v.weight < 0) throw Error("variable " + v.name + " has negative weight");
    for (std::size_t j = 0; j < i; ++j)
      if (g->variables_[j].name == v.name) throw Error("duplicate variable name " + v.name);
  }
  if (differential.empty()) differential.resize(g->variables_.size());
  if (differential.size() != g->variables_.size())
    throw Error("differential must have one image per variable");
  g->differential_ = std::move(differential);
  for (const auto& e : g->differential_) g->validate(e);
  if (augmentation) {
    if (!augmentation->target) throw Error("augmentation without target algebra");
    if (augmentation->images.size() != g->variables_.size())
      throw Error("augmentation must have one image per variable");
    for (const auto& e : augmentation->images) augmentation->target->validate(e);
  }
  g->augmentation_ = std::move(augmentation);
  return g;
}

std::optional<int> Gca::find(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

int Gca::id(std::string_view name) const {
  auto i = find(name);
  if (!i) throw Error("unknown variable '" + std::string(name) + "'");
  return *i;
}

Derivation Gca::differential() const {
  auto self = shared_from_this();
  Derivation d(self, self, 1);
  for (std::size_t i = 0; i < variables_.size(); ++i) d.set(static_cast<int>(i), differential_[i]);
  return d;
}

Element Gca::d(const Element& a) const { return differential().apply(a); }

AlgebraMap Gca::augmentation_map() const {
  if (!augmentation_) throw Error("algebra has no augmentation");
  AlgebraMap m(shared_from_this(), augmentation_->target);
  for (std::size_t i = 0; i < variables_.size(); ++i)
    m.set(static_cast<int>(i), augmentation_->images[i]);
  return m;
}

int Gca::mul_monomials(const Monomial& a, const Monomial& b, Monomial& out) const {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  int odd_a_remaining = 0;
  for (const auto& f : fa)
    if (variables_[static_cast<std::size_t>(f.var)].odd()) ++odd_a_remaining;

  std::vector<Factor> result;
  result.reserve(fa.size() + fb.size());
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].var < fb[j].var)) {
      if (variables_[static_cast<std::size_t>(fa[i].var)].odd()) --odd_a_remaining;
      result.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].var < fa[i].var) {
      // b's factor moves left past every odd factor of a that is still ahead of it
      if (variables_[static_cast<std::size_t>(fb[j].var)].odd() && (odd_a_remaining % 2 != 0)) sign = -sign;
      result.push_back(fb[j++]);
    } else {
      if (variables_[static_cast<std::size_t>(fa[i].var)].odd()) return 0;
      result.push_back(Factor{fa[i].var, fa[i].exp + fb[j].exp});
      ++i;
      ++j;
    }
  }
  out = Monomial(std::move(result));
  return sign;
}

Element Gca::mul(const Element& a, const Element& b) const {
  Element result;
  Monomial m;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int s = mul_monomials(ma, mb, m);
      if (s == 0) continue;
      Rational c = ca * cb;
      if (s < 0) c = -c;
      result.add_term(m, c);
    }
  }
  return result;
}

Element Gca::pow(const Element& a, int exponent) const {
  if (exponent < 0) throw Error("negative exponent");
  Element result(1);
  Element base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

int Gca::degree(const Monomial& m) const {
  int d = 0;
  for (const auto& f : m.factors()) d += f.exp * variables_.at(static_cast<std::size_t>(f.var)).degree;
  return d;
}

int Gca::weight(const Monomial& m) const {
  int w = 0;
  for (const auto& f : m.factors()) w += f.exp * variables_.at(static_cast<std::size_t>(f.var)).weight;
  return w;
}

std::optional<std::pair<int, int>> Gca::bidegree(const Element& a) const {
  std::optional<std::pair<int, int>> result;
  for (const auto& [m, c] : a.terms()) {
    std::pair<int, int> bd{degree(m), weight(m)};
    if (result && *result != bd) return std::nullopt;
    result = bd;
  }
  return result;
}

bool Gca::extends(const Gca& other) const {
  if (other.size() > size()) return false;
  for (std::size_t i = 0; i < other.size(); ++i)
    if (!(variables_[i] == other.variables_[i])) return false;
  return true;
}

void Gca::validate(const Element& a) const {
  for (const auto& [m, c] : a.terms()) {
    for (const auto& f : m.factors()) {
      if (f.var < 0 || static_cast<std::size_t>(f.var) >= variables_.size())
        throw Error("element refers to a variable outside this algebra");
      if (variables_[static_cast<std::size_t>(f.var)].odd() && f.exp > 1)
        throw Error("odd variable " + variables_[static_cast<std::size_t>(f.var)].name + " squared");
    }
  }
}

std::string Gca::format(const Monomial& m) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& f : m.factors()) {
    if (!first) out << '*';
    first = false;
    out << variables_.at(static_cast<std::size_t>(f.var)).name;
    if (f.exp > 1) out << '^' << f.exp;
  }
  return out.str();
}

std::string Gca::format(const Element& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << format(m);
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- Derivation

Derivation::Derivation(GcaPtr source, GcaPtr target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
  if (!source_ || !target_) throw Error("derivation needs source and target algebras");
  if (!target_->extends(*source_)) throw Error("derivation target must extend its source");
  values_.resize(source_->size());
  defined_.assign(source_->size(), false);
}

void Derivation::set(int var, Element value) {
  target_->validate(value);
  values_.at(static_cast<std::size_t>(var)) = std::move(value);
  defined_.at(static_cast<std::size_t>(var)) = true;
}

void Derivation::vanish_on(int var) { set(var, Element()); }

const Element& Derivation::on_generator(int var) const {
  if (var < 0 || static_cast<std::size_t>(var) >= values_.size())
    throw Error("derivation applied to a variable outside its source");
  if (!defined_[static_cast<std::size_t>(var)])
    throw Error("derivation has no value on generator " + source_->variable(var).name);
  return values_[static_cast<std::size_t>(var)];
}

Element Derivation::apply(const Monomial& m) const {
  Element result;
  const auto& fs = m.factors();
  const Gca& tgt = *target_;
  int left_degree = 0;
  Monomial prod;
  Monomial full;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const Factor& f = fs[i];
    const Element& value = on_generator(f.var);
    if (!value.is_zero()) {
      std::vector<Factor> left(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(i));
      std::vector<Factor> right;
      if (f.exp > 1) right.push_back(Factor{f.var, f.exp - 1});
      right.insert(right.end(), fs.begin() + static_cast<std::ptrdiff_t>(i) + 1, fs.end());
      Monomial lm(std::move(left));
      Monomial rm(std::move(right));
      Rational scale(f.exp);
      if ((static_cast<long>(degree_) * left_degree) % 2 != 0) scale = -scale;
      for (const auto& [vm, vc] : value.terms()) {
        int s1 = tgt.mul_monomials(lm, vm, prod);
        if (s1 == 0) continue;
        int s2 = tgt.mul_monomials(prod, rm, full);
        if (s2 == 0) continue;
        Rational c = scale * vc;
        if (s1 * s2 < 0) c = -c;
        result.add_term(full, c);
      }
    }
    left_degree += f.exp * source_->variable(f.var).degree;
  }
  return result;
}

Element Derivation::apply(const Element& a) const {
  Element result;
  for (const auto& [m, c] : a.terms()) {
    Element t = apply(m);
    t *= c;
    result += t;
  }
  return result;
}

Derivation commutator(const Derivation& d1, const Derivation& d2) {
  if (!d1.source()->extends(*d2.target()))
    throw Error("commutator: first derivation must act on the target of the second");
  Derivation result(d2.source(), d2.target(), d1.degree() + d2.degree());
  const bool even = (static_cast<long>(d1.degree()) * d2.degree()) % 2 == 0;
  const auto n = static_cast<int>(d2.source()->size());
  for (int v = 0; v < n; ++v) {
    Element first = d1.apply(d2.on_generator(v));
    Element inner = d1.on_generator(v);
    if (inner.max_var() >= n)
      throw Error("commutator: first derivation leaves the source of the second");
    Element second = d2.apply(inner);
    result.set(v, even ? first - second : first + second);
  }
  return result;
}

// ---------------------------------------------------------------- AlgebraMap

AlgebraMap::AlgebraMap(GcaPtr source, GcaPtr target) : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_) throw Error("algebra map needs source and target");
  images_.resize(source_->size());
  defined_.assign(source_->size(), false);
}

void AlgebraMap::set(int var, Element image) {
  target_->validate(image);
  images_.at(static_cast<std::size_t>(var)) = std::move(image);
  defined_.at(static_cast<std::size_t>(var)) = true;
}

const Element& AlgebraMap::image(int var) const {
  if (var < 0 || static_cast<std::size_t>(var) >= images_.size())
    throw Error("algebra map applied to a variable outside its source");
  if (!defined_[static_cast<std::size_t>(var)])
    throw Error("algebra map has no image for generator " + source_->variable(var).name);
  return images_[static_cast<std::size_t>(var)];
}

Element AlgebraMap::apply(const Monomial& m) const {
  Element result(1);
  for (const auto& f : m.factors()) {
    result = target_->mul(result, target_->pow(image(f.var), f.exp));
    if (result.is_zero()) break;
  }
  return result;
}

Element AlgebraMap::apply(const Element& a) const {
  Element result;
  for (const auto& [m, c] : a.terms()) {
    Element t = apply(m);
    t *= c;
    result += t;
  }
  return result;
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
  if (g.source().get() != f.target().get() && !(g.source()->extends(*f.target()) && f.target()->extends(*g.source())))
    throw Error("compose: maps are not composable");
  AlgebraMap result(f.source(), g.target());
  for (int v = 0; v < static_cast<int>(f.source()->size()); ++v)
    if (f.defined(v)) result.set(v, g.apply(f.image(v)));
  return result;
}

// ---------------------------------------------------------------- diagnostics

std::vector<std::string> check_presentation(const Gca& algebra) {
  std::vector<std::string> report;
  const auto n = static_cast<int>(algebra.size());
  Derivation d = algebra.differential();
  for (int v = 0; v < n; ++v) {
    const Variable& var = algebra.variable(v);
    if (var.degree > 0) report.push_back(var.name + ": positive degree " + std::to_string(var.degree));
    if (var.weight < 0) report.push_back(var.name + ": negative weight " + std::to_string(var.weight));
    const Element& dv = algebra.differential_of(v);
    for (const auto& [m, c] : dv.terms()) {
      if (algebra.degree(m) != var.degree + 1) {
        report.push_back(var.name + ": differential term " + algebra.format(m) + " has degree " +
                         std::to_string(algebra.degree(m)) + ", expected " + std::to_string(var.degree + 1));
      }
      if (algebra.weight(m) != var.weight) {
        report.push_back(var.name + ": differential term " + algebra.format(m) + " has weight " +
                         std::to_string(algebra.weight(m)) + ", expected " + std::to_string(var.weight));
      }
    }
    Element dd = d.apply(dv);
    if (!dd.is_zero()) report.push_back(var.name + ": d^2 = " + algebra.format(dd) + " != 0");
  }
  if (const auto& aug = algebra.augmentation()) {
    AlgebraMap eps = algebra.augmentation_map();
    const Gca& base = *aug->target;
    for (int v = 0; v < n; ++v) {
      const Variable& var = algebra.variable(v);
      const Element& img = aug->images[static_cast<std::size_t>(v)];
      for (const auto& [m, c] : img.terms()) {
        if (base.degree(m) != var.degree || base.weight(m) != var.weight)
          report.push_back(var.name + ": augmentation image " + base.format(img) + " changes bidegree");
      }
      Element lhs = eps.apply(algebra.differential_of(v));
      Element rhs = base.d(img);
      if (!(lhs == rhs)) report.push_back(var.name + ": augmentation does not commute with d");
    }
  }
  return report;
}

}  // namespace hkr
