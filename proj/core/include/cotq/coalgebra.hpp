#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cotq/element.hpp"

namespace cotq {

enum class CoalgebraKind { Manin, DividedPower, NegativeDegree, Matrix };

std::string_view to_string(CoalgebraKind kind) noexcept;

/// A coalgebra with a distinguished basis: comultiplication on basis keys,
/// plus optional grading and star operation. Instances are immutable.
class Coalgebra {
 public:
  virtual ~Coalgebra() = default;

  virtual CoalgebraKind kind() const = 0;
  /// Short family name used in spec strings: "manin", "divpow", ...
  virtual std::string_view name() const = 0;
  /// Canonical spec string; doubles as the context tag of every element.
  virtual std::string spec() const = 0;

  /// Throws WrongCoalgebra for a key of another family, KeyOutOfRange for an
  /// index outside the basis.
  virtual void check_key(const BasisKey& key) const = 0;

  /// Delta on a basis key. Always finitely supported.
  virtual TensorElement comul(const BasisKey& key) const = 0;

  virtual std::optional<std::int64_t> degree(const BasisKey& key) const;
  /// nullopt when this coalgebra has no star operation.
  virtual std::optional<BasisKey> star(const BasisKey& key) const;
  virtual bool has_star() const { return false; }
  virtual bool has_degree() const { return true; }

  virtual bool is_finite() const = 0;
  /// All basis keys of degree <= max_degree, in basis order.
  virtual std::vector<BasisKey> keys_up_to_degree(std::int64_t max_degree) const = 0;
  /// Whole basis in basis order. Throws InvalidParameter if infinite.
  virtual std::vector<BasisKey> full_basis() const;

  Element zero() const { return Element(spec()); }
  /// Validated unit vector.
  Element unit(const BasisKey& key) const;
  Element monomial(const BasisKey& key, const GaussianRational& c) const;

  /// Throws ContextMismatch unless `e` belongs to this coalgebra.
  void require_context(const Element& e) const;
};

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

/// A pairing on basis keys, extended conjugate-linearly in the first slot and
/// linearly in the second.
class SesquilinearForm {
 public:
  using PairFn = std::function<GaussianRational(const BasisKey&, const BasisKey&)>;

  SesquilinearForm(std::string spec, CoalgebraKind binds_to, PairFn pair)
      : spec_(std::move(spec)), binds_to_(binds_to), pair_(std::move(pair)) {}

  const std::string& spec() const { return spec_; }
  CoalgebraKind binds_to() const { return binds_to_; }

  GaussianRational pair_basis(const BasisKey& a, const BasisKey& b) const { return pair_(a, b); }

  /// False when a bounded exhaustive sample found a pair with
  /// <a,b> != conj(<b,a>). Only ever cleared for forms not guaranteed Hermitian.
  bool sampled_hermitian() const { return sampled_hermitian_; }
  void set_sampled_hermitian(bool value) { sampled_hermitian_ = value; }

 private:
  std::string spec_;
  CoalgebraKind binds_to_;
  PairFn pair_;
  bool sampled_hermitian_ = true;
};

using FormPtr = std::shared_ptr<const SesquilinearForm>;

/// Coordinate subspace P = span(S) of a coalgebra, with inclusion j and
/// coordinate projection Q. Q∘j = id on P by construction.
class ProjectionPair {
 public:
  using Predicate = std::function<bool(const BasisKey&)>;

  /// S = the whole basis; j = Q = id.
  static ProjectionPair identity();
  static ProjectionPair of(std::set<BasisKey> subset);
  static ProjectionPair where(Predicate predicate, std::string description);

  bool is_identity() const { return identity_; }
  bool contains(const BasisKey& key) const;
  const std::string& description() const { return description_; }

  /// j: P -> C. Throws NotInSubcoalgebra listing the keys outside S.
  Element include(const Element& e) const;
  /// Q: C -> P, drops coefficients on keys outside S.
  Element project(const Element& e) const;
  /// Q ⊗ id: drops tensor terms whose first key lies outside S.
  TensorElement project_first(const TensorElement& t) const;

 private:
  bool identity_ = true;
  Predicate predicate_;
  std::string description_ = "full";
};

// --- extensions of basis-level structure to elements ------------------------

/// Linear extension of Delta.
TensorElement comul_extend(const Coalgebra& coalgebra, const Element& e);

/// Sum over b, b' of conj(g_b) f_b' <b, b'>.
GaussianRational pair_extend(const SesquilinearForm& form, const Element& g, const Element& f);

/// pi_g(phi ⊗ f) = <g, f> phi, extended linearly over the tensor.
Element pi_action(const SesquilinearForm& form, const Element& g, const TensorElement& t);

/// Antilinear extension of the star operation. Throws StarUndefined.
Element star_extend(const Coalgebra& coalgebra, const Element& e);

/// (Delta ⊗ id) Delta and (id ⊗ Delta) Delta on an element.
TripleTensorElement comul_left_twice(const Coalgebra& coalgebra, const Element& e);
TripleTensorElement comul_right_twice(const Coalgebra& coalgebra, const Element& e);

}  // namespace cotq
