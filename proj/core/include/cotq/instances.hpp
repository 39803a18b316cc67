#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "cotq/coalgebra.hpp"
#include "cotq/weights.hpp"

namespace cotq {

/// Manin quantum plane: generators a, c with ac = q ca, Delta(a) = a⊗a and
/// Delta(c) = c⊗a, so Delta(a^k c^l) = a^k c^l ⊗ a^(k+l). Basis a^i c^j,
/// i, j >= 0, degree i + j. No star operation.
class ManinPlane final : public Coalgebra {
 public:
  /// Throws InvalidParameter for q = 0.
  explicit ManinPlane(GaussianRational q);

  const GaussianRational& q() const { return q_; }

  CoalgebraKind kind() const override { return CoalgebraKind::Manin; }
  std::string_view name() const override { return "manin"; }
  std::string spec() const override;
  void check_key(const BasisKey& key) const override;
  TensorElement comul(const BasisKey& key) const override;
  bool is_finite() const override { return false; }
  std::vector<BasisKey> keys_up_to_degree(std::int64_t max_degree) const override;

  /// Normal-ordered product of two elements, extended bilinearly from
  /// manin_product on monomials.
  Element multiply(const Element& u, const Element& v) const;
  /// Componentwise product on C⊗C: (x⊗y)(x'⊗y') = xx' ⊗ yy'.
  TensorElement multiply(const TensorElement& u, const TensorElement& v) const;

 private:
  GaussianRational q_;
};

/// Divided power coalgebra: basis x_n, n >= 0, Delta(x_n) = sum_{i+j=n} x_i ⊗ x_j.
class DividedPowerCoalgebra final : public Coalgebra {
 public:
  CoalgebraKind kind() const override { return CoalgebraKind::DividedPower; }
  std::string_view name() const override { return "divpow"; }
  std::string spec() const override { return "divpow"; }
  void check_key(const BasisKey& key) const override;
  TensorElement comul(const BasisKey& key) const override;
  bool is_finite() const override { return false; }
  std::vector<BasisKey> keys_up_to_degree(std::int64_t max_degree) const override;
};

/// Basis x_i for |i| <= M with the divided power formula, terms with an index
/// outside [-M, M] dropped. Star x_i -> x_{-i}.
///
/// The truncation breaks coassociativity; see check_coassociativity.
class NegativeDegreeCoalgebra final : public Coalgebra {
 public:
  /// Throws InvalidParameter for M < 1.
  explicit NegativeDegreeCoalgebra(std::int64_t max_index);

  std::int64_t max_index() const { return max_index_; }

  CoalgebraKind kind() const override { return CoalgebraKind::NegativeDegree; }
  std::string_view name() const override { return "negdeg"; }
  std::string spec() const override;
  void check_key(const BasisKey& key) const override;
  TensorElement comul(const BasisKey& key) const override;
  std::optional<BasisKey> star(const BasisKey& key) const override;
  bool has_star() const override { return true; }
  bool is_finite() const override { return true; }
  std::vector<BasisKey> keys_up_to_degree(std::int64_t max_degree) const override;
  std::vector<BasisKey> full_basis() const override;

 private:
  std::int64_t max_index_;
};

/// Matrix coalgebra: basis E_{i,j}, 1 <= i, j <= n, Delta(E_{i,j}) =
/// sum_k E_{i,k} ⊗ E_{k,j}. Degree i + j, star E_{i,j} -> E_{j,i}.
class MatrixCoalgebra final : public Coalgebra {
 public:
  /// Throws InvalidParameter for n < 1.
  explicit MatrixCoalgebra(std::int64_t size);

  std::int64_t size() const { return size_; }

  CoalgebraKind kind() const override { return CoalgebraKind::Matrix; }
  std::string_view name() const override { return "matrix"; }
  std::string spec() const override;
  void check_key(const BasisKey& key) const override;
  TensorElement comul(const BasisKey& key) const override;
  std::optional<BasisKey> star(const BasisKey& key) const override;
  bool has_star() const override { return true; }
  bool is_finite() const override { return true; }
  std::vector<BasisKey> keys_up_to_degree(std::int64_t max_degree) const override;
  std::vector<BasisKey> full_basis() const override;

 private:
  std::int64_t size_;
};

std::shared_ptr<const ManinPlane> make_manin(GaussianRational q);
std::shared_ptr<const DividedPowerCoalgebra> make_divided_power();
std::shared_ptr<const NegativeDegreeCoalgebra> make_negative_degree(std::int64_t max_index);
std::shared_ptr<const MatrixCoalgebra> make_matrix(std::int64_t size);

// --- basis-level comultiplication tables ------------------------------------

TensorElement manin_comul(const ManinKey& key, const GaussianRational& q);
TensorElement divided_comul(const DividedKey& key);
TensorElement negdeg_comul(const NegDegKey& key, std::int64_t max_index);
TensorElement matrix_comul(const MatrixKey& key, std::int64_t size);

/// a^i c^j · a^k c^l = q^(-jk) a^(i+k) c^(j+l): each of the k a's moves left
/// past j c's using ca = q^(-1) ac. Throws DivisionByZero for q = 0.
std::pair<GaussianRational, ManinKey> manin_product(const ManinKey& u, const ManinKey& v,
                                                    const GaussianRational& q);

// --- sesquilinear forms -----------------------------------------------------

struct FormSpec {
  enum class Kind { ManinOrthogonal, ManinSkew, Diagonal, MatrixOrthonormal, MatrixWeighted };

  Kind kind = Kind::Diagonal;
  WeightFamily weight = WeightFamily::one();

  /// "manin-orth?w=one", "manin-skew?mu=geom:2", "diag?w=factorial",
  /// "matrix-orth", "matrix-weighted?w=one".
  std::string spec() const;
  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

/// Builds the form on `coalgebra`:
///   ManinOrthogonal  <a^i c^j, a^k c^l> = δ_{i,k} δ_{j,l} w(i)w(j)
///   ManinSkew        <a^i c^j, a^k c^l> = δ_{i-j,k-l} μ(i)μ(j)μ(k)μ(l)
///   Diagonal         <x_i, x_j>         = w(i) δ_{i,j}
///   MatrixOrthonormal <E_{i,j}, E_{r,s}> = δ_{i,r} δ_{j,s}
///   MatrixWeighted   <E_{i,j}, E_{r,s}> = w(i+s) δ_{i-j,r-s}
/// Throws WrongCoalgebra on a family mismatch and InvalidWeightDomain when
/// the weight is undefined on the coalgebra's index range.
FormPtr make_form(const FormSpec& spec, const Coalgebra& coalgebra);

// --- grading and star classification ---------------------------------------

/// Throws NoDegree when the coalgebra carries no grading.
std::int64_t degree_of_key(const Coalgebra& coalgebra, const BasisKey& key);

enum class Holomorphy { Holomorphic, AntiHolomorphic, Real, None };

std::string_view to_string(Holomorphy h) noexcept;

/// negdeg: x_i holomorphic for i > 0, anti-holomorphic for i < 0, x_0
/// deliberately unclassified (None). matrix: holomorphic if i < j,
/// anti-holomorphic if i > j, real on the diagonal. Throws Unclassified for
/// the other families.
Holomorphy holomorphic_class(const Coalgebra& coalgebra, const BasisKey& key);

}  // namespace cotq
