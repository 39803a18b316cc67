#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cotq/coalgebra.hpp"

namespace cotq {

/// A symbol g bound to a coalgebra, a form and a projection pair: the
/// co-Toeplitz operator C_g = pi_g ∘ (Q ⊗ id) ∘ Delta ∘ j.
class OperatorHandle {
 public:
  /// Throws ContextMismatch if the symbol lives elsewhere, WrongCoalgebra if
  /// the form is bound to another family.
  OperatorHandle(CoalgebraPtr coalgebra, FormPtr form, Element symbol,
                 ProjectionPair projection = ProjectionPair::identity());

  const Coalgebra& coalgebra() const { return *coalgebra_; }
  const CoalgebraPtr& coalgebra_ptr() const { return coalgebra_; }
  const SesquilinearForm& form() const { return *form_; }
  const FormPtr& form_ptr() const { return form_; }
  const Element& symbol() const { return symbol_; }
  const ProjectionPair& projection() const { return projection_; }

  OperatorHandle with_symbol(Element symbol) const;

 private:
  CoalgebraPtr coalgebra_;
  FormPtr form_;
  Element symbol_;
  ProjectionPair projection_;
};

/// C_g(phi). Throws NotInSubcoalgebra if phi is not supported in S.
Element co_toeplitz_apply(const OperatorHandle& op, const Element& phi);

/// The simple case C_g = pi_g ∘ Delta, computed without any projection
/// machinery.
Element co_toeplitz_apply_simple(const Coalgebra& coalgebra, const SesquilinearForm& form,
                                 const Element& symbol, const Element& phi);

/// Applies right to left: compose_apply({A, B}, phi) = A(B(phi)).
Element compose_apply(const std::vector<OperatorHandle>& ops, const Element& phi);

/// Finite ordered slice of a basis, in basis order, without duplicates.
class BasisWindow {
 public:
  /// All keys of degree <= max_degree.
  static BasisWindow up_to_degree(const Coalgebra& coalgebra, std::int64_t max_degree);
  /// Whole basis of a finite coalgebra. Throws InvalidParameter otherwise.
  static BasisWindow full(const Coalgebra& coalgebra);
  /// Explicit keys; sorted into basis order. Throws InvalidParameter on
  /// duplicates, KeyOutOfRange/WrongCoalgebra on invalid keys.
  static BasisWindow of(const Coalgebra& coalgebra, std::vector<BasisKey> keys);

  const std::vector<BasisKey>& keys() const { return keys_; }
  std::size_t size() const { return keys_.size(); }
  /// "deg<=D", "full" or "explicit".
  const std::string& description() const { return description_; }
  std::optional<std::size_t> index_of(const BasisKey& key) const;

 private:
  BasisWindow(std::vector<BasisKey> keys, std::string description);

  std::vector<BasisKey> keys_;
  std::string description_;
};

using ScalarGrid = std::vector<std::vector<GaussianRational>>;

struct Leak {
  BasisKey from;
  Element escaped;
};

/// entries[r][c] = coefficient of window[r] in C_g(window[c]). Image
/// components outside the window are reported in `leakage`, never dropped.
struct MatrixResult {
  BasisWindow window;
  ScalarGrid entries;
  std::vector<Leak> leakage;

  bool column_leaks(std::size_t column) const;
};

MatrixResult operator_matrix(const OperatorHandle& op, const BasisWindow& window);

struct Classification {
  enum class Kind { Zero, Preservation, Creation, Annihilation, Inhomogeneous };

  Kind kind = Kind::Zero;
  /// Observed degree shifts deg(out) - deg(in) over nonzero transitions.
  std::set<std::int64_t> shifts;

  /// |shift| for Creation/Annihilation, 0 otherwise.
  std::int64_t degree() const;
  /// "zero", "preservation", "creation (degree +2)",
  /// "annihilation (degree -3)", "inhomogeneous (shifts -1, +2)".
  std::string describe() const;

  friend bool operator==(const Classification&, const Classification&) = default;
};

std::string_view to_string(Classification::Kind kind) noexcept;

/// Classification relative to `window`; leakage terms count as transitions.
/// Throws NoDegree for ungraded coalgebras.
Classification classify_shift(const OperatorHandle& op, const BasisWindow& window);

struct GramResult {
  ScalarGrid entries;
  bool hermitian = false;
};

GramResult gram_matrix(const SesquilinearForm& form, const BasisWindow& window);

bool is_hermitian(const ScalarGrid& grid);

/// Sylvester's criterion with exact fraction-free (Bareiss) elimination:
/// true iff every leading principal minor is a positive real.
/// Throws NotHermitian (also for non-square input).
bool is_positive_definite(const ScalarGrid& grid);

/// Leading principal minors det(G[0..k, 0..k]) for k = 1..size, computed by
/// Bareiss elimination. Stops early (shorter result) after the first zero
/// minor, since elimination cannot proceed without pivoting.
std::vector<GaussianRational> leading_minors(const ScalarGrid& grid);

struct Eigenvalue {
  GaussianRational value;
  std::size_t multiplicity = 0;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Diagonal entries with multiplicities, sorted by (re, im).
/// Throws NotDiagonal when an off-diagonal entry is nonzero or any column leaks.
std::vector<Eigenvalue> diagonal_eigenvalues(const MatrixResult& matrix);

struct CoassociativityWitness {
  BasisKey key;
  /// (Delta ⊗ id)Delta(key) - (id ⊗ Delta)Delta(key); never zero.
  TripleTensorElement difference;
};

/// Every window key where the coassociativity axiom fails, in window order.
/// Empty means the axiom holds on the window.
std::vector<CoassociativityWitness> check_coassociativity(const Coalgebra& coalgebra,
                                                          const BasisWindow& window);

struct AntilinearityCounterexample {
  Element probe;
  Element lhs;  // C_{alpha g + h}(probe)
  Element rhs;  // conj(alpha) C_g(probe) + C_h(probe)
};

/// Checks C_{alpha g + h}(phi) = conj(alpha) C_g(phi) + C_h(phi) on every probe.
std::optional<AntilinearityCounterexample> verify_antilinearity(
    const CoalgebraPtr& coalgebra, const FormPtr& form, const Element& g, const Element& h,
    const GaussianRational& alpha, const std::vector<Element>& probes);

}  // namespace cotq
