#include "cotq/instances.hpp"

#include <algorithm>

namespace cotq {

namespace {

std::string manin_spec(const GaussianRational& q) { return "manin?q=" + to_string(q); }
std::string negdeg_spec(std::int64_t m) { return "negdeg?M=" + std::to_string(m); }
std::string matrix_spec(std::int64_t n) { return "matrix?n=" + std::to_string(n); }

[[noreturn]] void wrong_family(const BasisKey& key, std::string_view family) {
  throw Error(ErrorKind::WrongCoalgebra,
              "key '" + to_string(key) + "' does not belong to a " + std::string(family) + " coalgebra");
}

}  // namespace

// ---------------------------------------------------------------------------
// Manin quantum plane

ManinPlane::ManinPlane(GaussianRational q) : q_(std::move(q)) {
  if (q_.is_zero()) throw Error(ErrorKind::InvalidParameter, "Manin plane requires q != 0");
}

std::string ManinPlane::spec() const { return manin_spec(q_); }

void ManinPlane::check_key(const BasisKey& key) const {
  if (!key.is<ManinKey>()) wrong_family(key, "manin");
  const auto& k = key.as<ManinKey>();
  if (k.i < 0 || k.j < 0) {
    throw Error(ErrorKind::KeyOutOfRange, "Manin exponents must be non-negative: " + to_string(key));
  }
}

TensorElement manin_comul(const ManinKey& key, const GaussianRational& q) {
  TensorElement out(manin_spec(q));
  out.add_term({BasisKey(key), BasisKey(ManinKey{key.i + key.j, 0})}, GaussianRational(1));
  return out;
}

TensorElement ManinPlane::comul(const BasisKey& key) const {
  check_key(key);
  return manin_comul(key.as<ManinKey>(), q_);
}

std::vector<BasisKey> ManinPlane::keys_up_to_degree(std::int64_t max_degree) const {
  std::vector<BasisKey> out;
  for (std::int64_t d = 0; d <= max_degree; ++d) {
    for (std::int64_t i = d; i >= 0; --i) out.emplace_back(ManinKey{i, d - i});
  }
  return out;
}

std::pair<GaussianRational, ManinKey> manin_product(const ManinKey& u, const ManinKey& v,
                                                    const GaussianRational& q) {
  if (q.is_zero()) throw Error(ErrorKind::DivisionByZero, "normal ordering requires q != 0");
  return {pow(q, -(u.j * v.i)), ManinKey{u.i + v.i, u.j + v.j}};
}

Element ManinPlane::multiply(const Element& u, const Element& v) const {
  require_context(u);
  require_context(v);
  Element out(spec());
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      auto [factor, key] = manin_product(ku.as<ManinKey>(), kv.as<ManinKey>(), q_);
      out.add_term(key, cu * cv * factor);
    }
  }
  return out;
}

TensorElement ManinPlane::multiply(const TensorElement& u, const TensorElement& v) const {
  u.require_same_context(v);
  TensorElement out(spec());
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      auto [f1, left] = manin_product(ku[0].as<ManinKey>(), kv[0].as<ManinKey>(), q_);
      auto [f2, right] = manin_product(ku[1].as<ManinKey>(), kv[1].as<ManinKey>(), q_);
      out.add_term({BasisKey(left), BasisKey(right)}, cu * cv * f1 * f2);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Divided power coalgebra

void DividedPowerCoalgebra::check_key(const BasisKey& key) const {
  if (!key.is<DividedKey>()) wrong_family(key, "divpow");
  if (key.as<DividedKey>().n < 0) {
    throw Error(ErrorKind::KeyOutOfRange, "divided power index must be non-negative: " + to_string(key));
  }
}

TensorElement divided_comul(const DividedKey& key) {
  TensorElement out("divpow");
  for (std::int64_t i = 0; i <= key.n; ++i) {
    out.add_term({BasisKey(DividedKey{i}), BasisKey(DividedKey{key.n - i})}, GaussianRational(1));
  }
  return out;
}

TensorElement DividedPowerCoalgebra::comul(const BasisKey& key) const {
  check_key(key);
  return divided_comul(key.as<DividedKey>());
}

std::vector<BasisKey> DividedPowerCoalgebra::keys_up_to_degree(std::int64_t max_degree) const {
  std::vector<BasisKey> out;
  for (std::int64_t n = 0; n <= max_degree; ++n) out.emplace_back(DividedKey{n});
  return out;
}

// ---------------------------------------------------------------------------
// Negative degrees

NegativeDegreeCoalgebra::NegativeDegreeCoalgebra(std::int64_t max_index) : max_index_(max_index) {
  if (max_index_ < 1) throw Error(ErrorKind::InvalidParameter, "negdeg requires M >= 1");
}

std::string NegativeDegreeCoalgebra::spec() const { return negdeg_spec(max_index_); }

void NegativeDegreeCoalgebra::check_key(const BasisKey& key) const {
  if (!key.is<NegDegKey>()) wrong_family(key, "negdeg");
  const std::int64_t n = key.as<NegDegKey>().n;
  if (n < -max_index_ || n > max_index_) {
    throw Error(ErrorKind::KeyOutOfRange,
                to_string(key) + " is outside [-" + std::to_string(max_index_) + ", " +
                    std::to_string(max_index_) + "]");
  }
}

TensorElement negdeg_comul(const NegDegKey& key, std::int64_t max_index) {
  if (key.n < -max_index || key.n > max_index) {
    throw Error(ErrorKind::KeyOutOfRange, "x_" + std::to_string(key.n) + " is outside [-M, M]");
  }
  TensorElement out(negdeg_spec(max_index));
  const std::int64_t lo = std::max(-max_index, key.n - max_index);
  const std::int64_t hi = std::min(max_index, key.n + max_index);
  for (std::int64_t i = lo; i <= hi; ++i) {
    out.add_term({BasisKey(NegDegKey{i}), BasisKey(NegDegKey{key.n - i})}, GaussianRational(1));
  }
  return out;
}

TensorElement NegativeDegreeCoalgebra::comul(const BasisKey& key) const {
  check_key(key);
  return negdeg_comul(key.as<NegDegKey>(), max_index_);
}

std::optional<BasisKey> NegativeDegreeCoalgebra::star(const BasisKey& key) const {
  check_key(key);
  return BasisKey(NegDegKey{-key.as<NegDegKey>().n});
}

std::vector<BasisKey> NegativeDegreeCoalgebra::keys_up_to_degree(std::int64_t max_degree) const {
  std::vector<BasisKey> out;
  for (std::int64_t n = -max_index_; n <= std::min(max_degree, max_index_); ++n) {
    out.emplace_back(NegDegKey{n});
  }
  return out;
}

std::vector<BasisKey> NegativeDegreeCoalgebra::full_basis() const {
  return keys_up_to_degree(max_index_);
}

// ---------------------------------------------------------------------------
// Matrix coalgebra

MatrixCoalgebra::MatrixCoalgebra(std::int64_t size) : size_(size) {
  if (size_ < 1) throw Error(ErrorKind::InvalidParameter, "matrix coalgebra requires n >= 1");
}

std::string MatrixCoalgebra::spec() const { return matrix_spec(size_); }

void MatrixCoalgebra::check_key(const BasisKey& key) const {
  if (!key.is<MatrixKey>()) wrong_family(key, "matrix");
  const auto& k = key.as<MatrixKey>();
  if (k.i < 1 || k.i > size_ || k.j < 1 || k.j > size_) {
    throw Error(ErrorKind::KeyOutOfRange,
                to_string(key) + " is outside 1..n for n = " + std::to_string(size_));
  }
}

TensorElement matrix_comul(const MatrixKey& key, std::int64_t size) {
  if (key.i < 1 || key.i > size || key.j < 1 || key.j > size) {
    throw Error(ErrorKind::KeyOutOfRange, "matrix unit index outside 1..n");
  }
  TensorElement out(matrix_spec(size));
  for (std::int64_t k = 1; k <= size; ++k) {
    out.add_term({BasisKey(MatrixKey{key.i, k}), BasisKey(MatrixKey{k, key.j})}, GaussianRational(1));
  }
  return out;
}

TensorElement MatrixCoalgebra::comul(const BasisKey& key) const {
  check_key(key);
  return matrix_comul(key.as<MatrixKey>(), size_);
}

std::optional<BasisKey> MatrixCoalgebra::star(const BasisKey& key) const {
  check_key(key);
  const auto& k = key.as<MatrixKey>();
  return BasisKey(MatrixKey{k.j, k.i});
}

std::vector<BasisKey> MatrixCoalgebra::keys_up_to_degree(std::int64_t max_degree) const {
  std::vector<BasisKey> out;
  for (std::int64_t i = 1; i <= size_; ++i) {
    for (std::int64_t j = 1; j <= size_; ++j) {
      if (i + j <= max_degree) out.emplace_back(MatrixKey{i, j});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BasisKey> MatrixCoalgebra::full_basis() const { return keys_up_to_degree(2 * size_); }

// ---------------------------------------------------------------------------

std::shared_ptr<const ManinPlane> make_manin(GaussianRational q) {
  return std::make_shared<const ManinPlane>(std::move(q));
}
std::shared_ptr<const DividedPowerCoalgebra> make_divided_power() {
  return std::make_shared<const DividedPowerCoalgebra>();
}
std::shared_ptr<const NegativeDegreeCoalgebra> make_negative_degree(std::int64_t max_index) {
  return std::make_shared<const NegativeDegreeCoalgebra>(max_index);
}
std::shared_ptr<const MatrixCoalgebra> make_matrix(std::int64_t size) {
  return std::make_shared<const MatrixCoalgebra>(size);
}

// ---------------------------------------------------------------------------
// Forms

std::string FormSpec::spec() const {
  switch (kind) {
    case Kind::ManinOrthogonal: return "manin-orth?w=" + weight.spec();
    case Kind::ManinSkew: return "manin-skew?mu=" + weight.spec();
    case Kind::Diagonal: return "diag?w=" + weight.spec();
    case Kind::MatrixOrthonormal: return "matrix-orth";
    case Kind::MatrixWeighted: return "matrix-weighted?w=" + weight.spec();
  }
  return "";
}

namespace {

// Largest degree scanned when sampling a Manin skew form for Hermiticity.
constexpr std::int64_t kHermitianSampleDegree = 6;

void require_kind(const FormSpec& spec, const Coalgebra& c, std::initializer_list<CoalgebraKind> ok) {
  if (std::find(ok.begin(), ok.end(), c.kind()) == ok.end()) {
    throw Error(ErrorKind::WrongCoalgebra,
                "form '" + spec.spec() + "' does not apply to coalgebra '" + c.spec() + "'");
  }
}

GaussianRational real(Rational r) { return GaussianRational(std::move(r)); }

}  // namespace

FormPtr make_form(const FormSpec& spec, const Coalgebra& coalgebra) {
  const WeightFamily w = spec.weight;
  switch (spec.kind) {
    case FormSpec::Kind::ManinOrthogonal: {
      require_kind(spec, coalgebra, {CoalgebraKind::Manin});
      return std::make_shared<const SesquilinearForm>(
          spec.spec(), CoalgebraKind::Manin, [w](const BasisKey& a, const BasisKey& b) {
            const auto& x = a.as<ManinKey>();
            const auto& y = b.as<ManinKey>();
            if (x.i != y.i || x.j != y.j) return GaussianRational{};
            return real(w({x.i, x.j}));
          });
    }
    case FormSpec::Kind::ManinSkew: {
      require_kind(spec, coalgebra, {CoalgebraKind::Manin});
      auto form = std::make_shared<SesquilinearForm>(
          spec.spec(), CoalgebraKind::Manin, [w](const BasisKey& a, const BasisKey& b) {
            const auto& x = a.as<ManinKey>();
            const auto& y = b.as<ManinKey>();
            if (x.i - x.j != y.i - y.j) return GaussianRational{};
            return real(w({x.i, x.j, y.i, y.j}));
          });
      const std::vector<BasisKey> sample = coalgebra.keys_up_to_degree(kHermitianSampleDegree);
      bool hermitian = true;
      for (const auto& a : sample) {
        for (const auto& b : sample) {
          if (form->pair_basis(a, b) != form->pair_basis(b, a).conj()) hermitian = false;
        }
      }
      form->set_sampled_hermitian(hermitian);
      return form;
    }
    case FormSpec::Kind::Diagonal: {
      require_kind(spec, coalgebra, {CoalgebraKind::DividedPower, CoalgebraKind::NegativeDegree});
      if (coalgebra.kind() == CoalgebraKind::NegativeDegree) {
        if (!w.defined_on_negatives()) {
          throw Error(ErrorKind::InvalidWeightDomain,
                      "weight '" + w.spec() + "' is undefined on negative indices; use absfactorial");
        }
        return std::make_shared<const SesquilinearForm>(
            spec.spec(), CoalgebraKind::NegativeDegree, [w](const BasisKey& a, const BasisKey& b) {
              const std::int64_t i = a.as<NegDegKey>().n;
              return i == b.as<NegDegKey>().n ? real(w(i)) : GaussianRational{};
            });
      }
      return std::make_shared<const SesquilinearForm>(
          spec.spec(), CoalgebraKind::DividedPower, [w](const BasisKey& a, const BasisKey& b) {
            const std::int64_t i = a.as<DividedKey>().n;
            return i == b.as<DividedKey>().n ? real(w(i)) : GaussianRational{};
          });
    }
    case FormSpec::Kind::MatrixOrthonormal: {
      require_kind(spec, coalgebra, {CoalgebraKind::Matrix});
      return std::make_shared<const SesquilinearForm>(
          spec.spec(), CoalgebraKind::Matrix, [](const BasisKey& a, const BasisKey& b) {
            return a == b ? GaussianRational(1) : GaussianRational{};
          });
    }
    case FormSpec::Kind::MatrixWeighted: {
      require_kind(spec, coalgebra, {CoalgebraKind::Matrix});
      return std::make_shared<const SesquilinearForm>(
          spec.spec(), CoalgebraKind::Matrix, [w](const BasisKey& a, const BasisKey& b) {
            const auto& x = a.as<MatrixKey>();
            const auto& y = b.as<MatrixKey>();
            if (x.i - x.j != y.i - y.j) return GaussianRational{};
            return real(w(x.i + y.j));
          });
    }
  }
  throw Error(ErrorKind::UnknownSpec, "unknown form kind");
}

// ---------------------------------------------------------------------------

std::int64_t degree_of_key(const Coalgebra& coalgebra, const BasisKey& key) {
  if (!coalgebra.has_degree()) {
    throw Error(ErrorKind::NoDegree, "coalgebra '" + coalgebra.spec() + "' has no grading");
  }
  const std::optional<std::int64_t> d = coalgebra.degree(key);
  if (!d) throw Error(ErrorKind::NoDegree, "no degree for " + to_string(key));
  return *d;
}

std::string_view to_string(Holomorphy h) noexcept {
  switch (h) {
    case Holomorphy::Holomorphic: return "holomorphic";
    case Holomorphy::AntiHolomorphic: return "anti-holomorphic";
    case Holomorphy::Real: return "real";
    case Holomorphy::None: return "none";
  }
  return "none";
}

Holomorphy holomorphic_class(const Coalgebra& coalgebra, const BasisKey& key) {
  coalgebra.check_key(key);
  switch (coalgebra.kind()) {
    case CoalgebraKind::NegativeDegree: {
      const std::int64_t n = key.as<NegDegKey>().n;
      if (n > 0) return Holomorphy::Holomorphic;
      if (n < 0) return Holomorphy::AntiHolomorphic;
      return Holomorphy::None;
    }
    case CoalgebraKind::Matrix: {
      const auto& k = key.as<MatrixKey>();
      if (k.i < k.j) return Holomorphy::Holomorphic;
      if (k.i > k.j) return Holomorphy::AntiHolomorphic;
      return Holomorphy::Real;
    }
    default:
      throw Error(ErrorKind::Unclassified,
                  "holomorphic classes are defined only for negdeg and matrix coalgebras");
  }
}

}  // namespace cotq
