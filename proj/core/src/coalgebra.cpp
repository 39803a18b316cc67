#include "cotq/coalgebra.hpp"

#include <algorithm>

namespace cotq {

std::string_view to_string(CoalgebraKind kind) noexcept {
  switch (kind) {
    case CoalgebraKind::Manin: return "manin";
    case CoalgebraKind::DividedPower: return "divpow";
    case CoalgebraKind::NegativeDegree: return "negdeg";
    case CoalgebraKind::Matrix: return "matrix";
  }
  return "unknown";
}

std::optional<std::int64_t> Coalgebra::degree(const BasisKey& key) const {
  check_key(key);
  return key.degree();
}

std::optional<BasisKey> Coalgebra::star(const BasisKey& key) const {
  check_key(key);
  return std::nullopt;
}

std::vector<BasisKey> Coalgebra::full_basis() const {
  throw Error(ErrorKind::InvalidParameter,
              "coalgebra '" + spec() + "' is infinite dimensional; use a degree window");
}

Element Coalgebra::unit(const BasisKey& key) const { return monomial(key, GaussianRational(1)); }

Element Coalgebra::monomial(const BasisKey& key, const GaussianRational& c) const {
  check_key(key);
  Element e(spec());
  e.add_term(key, c);
  return e;
}

void Coalgebra::require_context(const Element& e) const {
  if (e.context() != spec()) {
    throw Error(ErrorKind::ContextMismatch,
                "element of '" + e.context() + "' used with coalgebra '" + spec() + "'");
  }
}

// ---------------------------------------------------------------------------

ProjectionPair ProjectionPair::identity() { return ProjectionPair{}; }

ProjectionPair ProjectionPair::of(std::set<BasisKey> subset) {
  std::string description = "{";
  for (const auto& k : subset) {
    if (description.size() > 1) description += ", ";
    description += to_string(k);
  }
  description += "}";
  auto shared = std::make_shared<const std::set<BasisKey>>(std::move(subset));
  return where([shared](const BasisKey& k) { return shared->count(k) != 0; },
               std::move(description));
}

ProjectionPair ProjectionPair::where(Predicate predicate, std::string description) {
  ProjectionPair p;
  p.identity_ = false;
  p.predicate_ = std::move(predicate);
  p.description_ = std::move(description);
  return p;
}

bool ProjectionPair::contains(const BasisKey& key) const { return identity_ || predicate_(key); }

Element ProjectionPair::include(const Element& e) const {
  std::string outside;
  for (const auto& [k, c] : e.terms()) {
    if (!contains(k)) {
      if (!outside.empty()) outside += ", ";
      outside += to_string(k);
    }
  }
  if (!outside.empty()) {
    throw Error(ErrorKind::NotInSubcoalgebra, "keys outside the subspace " + description_ + ": " + outside);
  }
  return e;
}

Element ProjectionPair::project(const Element& e) const {
  if (identity_) return e;
  Element out(e.context());
  for (const auto& [k, c] : e.terms()) {
    if (predicate_(k)) out.add_term(k, c);
  }
  return out;
}

TensorElement ProjectionPair::project_first(const TensorElement& t) const {
  if (identity_) return t;
  TensorElement out(t.context());
  for (const auto& [k, c] : t.terms()) {
    if (predicate_(k[0])) out.add_term(k, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

TensorElement comul_extend(const Coalgebra& coalgebra, const Element& e) {
  coalgebra.require_context(e);
  TensorElement out(coalgebra.spec());
  for (const auto& [key, c] : e.terms()) {
    const TensorElement split = coalgebra.comul(key);
    for (const auto& [pair, d] : split.terms()) out.add_term(pair, c * d);
  }
  return out;
}

GaussianRational pair_extend(const SesquilinearForm& form, const Element& g, const Element& f) {
  g.require_same_context(f);
  GaussianRational total;
  for (const auto& [bg, cg] : g.terms()) {
    const GaussianRational left = cg.conj();
    for (const auto& [bf, cf] : f.terms()) {
      const GaussianRational p = form.pair_basis(bg, bf);
      if (!p.is_zero()) total += left * cf * p;
    }
  }
  return total;
}

Element pi_action(const SesquilinearForm& form, const Element& g, const TensorElement& t) {
  if (g.context() != t.context()) {
    throw Error(ErrorKind::ContextMismatch,
                "symbol of '" + g.context() + "' applied to tensor of '" + t.context() + "'");
  }
  Element out(t.context());
  for (const auto& [pair, c] : t.terms()) {
    GaussianRational weight;
    for (const auto& [bg, cg] : g.terms()) {
      const GaussianRational p = form.pair_basis(bg, pair[1]);
      if (!p.is_zero()) weight += cg.conj() * p;
    }
    if (!weight.is_zero()) out.add_term(pair[0], c * weight);
  }
  return out;
}

Element star_extend(const Coalgebra& coalgebra, const Element& e) {
  coalgebra.require_context(e);
  Element out(coalgebra.spec());
  for (const auto& [key, c] : e.terms()) {
    const std::optional<BasisKey> image = coalgebra.star(key);
    if (!image) {
      throw Error(ErrorKind::StarUndefined, "coalgebra '" + coalgebra.spec() + "' has no star operation");
    }
    out.add_term(*image, c.conj());
  }
  return out;
}

TripleTensorElement comul_left_twice(const Coalgebra& coalgebra, const Element& e) {
  TripleTensorElement out(coalgebra.spec());
  const TensorElement first = comul_extend(coalgebra, e);
  for (const auto& [outer, c] : first.terms()) {
    const TensorElement second = coalgebra.comul(outer[0]);
    for (const auto& [inner, d] : second.terms()) {
      out.add_term({inner[0], inner[1], outer[1]}, c * d);
    }
  }
  return out;
}

TripleTensorElement comul_right_twice(const Coalgebra& coalgebra, const Element& e) {
  TripleTensorElement out(coalgebra.spec());
  const TensorElement first = comul_extend(coalgebra, e);
  for (const auto& [outer, c] : first.terms()) {
    const TensorElement second = coalgebra.comul(outer[1]);
    for (const auto& [inner, d] : second.terms()) {
      out.add_term({outer[0], inner[0], inner[1]}, c * d);
    }
  }
  return out;
}

}  // namespace cotq
