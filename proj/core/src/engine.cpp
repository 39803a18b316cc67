#include "cotq/engine.hpp"

#include <algorithm>
#include <map>

#include "cotq/instances.hpp"

namespace cotq {

OperatorHandle::OperatorHandle(CoalgebraPtr coalgebra, FormPtr form, Element symbol,
                               ProjectionPair projection)
    : coalgebra_(std::move(coalgebra)),
      form_(std::move(form)),
      symbol_(std::move(symbol)),
      projection_(std::move(projection)) {
  coalgebra_->require_context(symbol_);
  if (form_->binds_to() != coalgebra_->kind()) {
    throw Error(ErrorKind::WrongCoalgebra,
                "form '" + form_->spec() + "' is not defined on '" + coalgebra_->spec() + "'");
  }
}

OperatorHandle OperatorHandle::with_symbol(Element symbol) const {
  return OperatorHandle(coalgebra_, form_, std::move(symbol), projection_);
}

Element co_toeplitz_apply(const OperatorHandle& op, const Element& phi) {
  op.coalgebra().require_context(phi);
  const Element included = op.projection().include(phi);
  const TensorElement split = comul_extend(op.coalgebra(), included);
  return pi_action(op.form(), op.symbol(), op.projection().project_first(split));
}

Element co_toeplitz_apply_simple(const Coalgebra& coalgebra, const SesquilinearForm& form,
                                 const Element& symbol, const Element& phi) {
  return pi_action(form, symbol, comul_extend(coalgebra, phi));
}

Element compose_apply(const std::vector<OperatorHandle>& ops, const Element& phi) {
  for (const auto& op : ops) {
    if (op.coalgebra().spec() != ops.front().coalgebra().spec()) {
      throw Error(ErrorKind::ContextMismatch, "composed operators act on different coalgebras");
    }
  }
  Element out = phi;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) out = co_toeplitz_apply(*it, out);
  return out;
}

// ---------------------------------------------------------------------------

BasisWindow::BasisWindow(std::vector<BasisKey> keys, std::string description)
    : keys_(std::move(keys)), description_(std::move(description)) {
  std::sort(keys_.begin(), keys_.end());
  if (std::adjacent_find(keys_.begin(), keys_.end()) != keys_.end()) {
    throw Error(ErrorKind::InvalidParameter, "basis window contains duplicate keys");
  }
}

BasisWindow BasisWindow::up_to_degree(const Coalgebra& coalgebra, std::int64_t max_degree) {
  return BasisWindow(coalgebra.keys_up_to_degree(max_degree), "deg<=" + std::to_string(max_degree));
}

BasisWindow BasisWindow::full(const Coalgebra& coalgebra) {
  return BasisWindow(coalgebra.full_basis(), "full");
}

BasisWindow BasisWindow::of(const Coalgebra& coalgebra, std::vector<BasisKey> keys) {
  for (const auto& k : keys) coalgebra.check_key(k);
  return BasisWindow(std::move(keys), "explicit");
}

std::optional<std::size_t> BasisWindow::index_of(const BasisKey& key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

bool MatrixResult::column_leaks(std::size_t column) const {
  const BasisKey& key = window.keys().at(column);
  return std::any_of(leakage.begin(), leakage.end(), [&](const Leak& l) { return l.from == key; });
}

namespace {

void require_window_in_subspace(const OperatorHandle& op, const BasisWindow& window) {
  for (const auto& k : window.keys()) {
    op.coalgebra().check_key(k);
    if (!op.projection().contains(k)) {
      throw Error(ErrorKind::NotInSubcoalgebra,
                  "window key " + to_string(k) + " lies outside " + op.projection().description());
    }
  }
}

}  // namespace

MatrixResult operator_matrix(const OperatorHandle& op, const BasisWindow& window) {
  require_window_in_subspace(op, window);
  const std::size_t n = window.size();
  MatrixResult out{window, ScalarGrid(n, std::vector<GaussianRational>(n)), {}};
  for (std::size_t c = 0; c < n; ++c) {
    const BasisKey& source = window.keys()[c];
    const Element image = co_toeplitz_apply(op, op.coalgebra().unit(source));
    Element escaped = op.coalgebra().zero();
    for (const auto& [key, coeff] : image.terms()) {
      if (auto r = window.index_of(key)) {
        out.entries[*r][c] = coeff;
      } else {
        escaped.add_term(key, coeff);
      }
    }
    if (!escaped.is_zero()) out.leakage.push_back({source, std::move(escaped)});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::int64_t Classification::degree() const {
  if (kind != Kind::Creation && kind != Kind::Annihilation) return 0;
  const std::int64_t s = *shifts.begin();
  return s < 0 ? -s : s;
}

namespace {

std::string signed_str(std::int64_t v) { return (v > 0 ? "+" : "") + std::to_string(v); }

}  // namespace

std::string_view to_string(Classification::Kind kind) noexcept {
  switch (kind) {
    case Classification::Kind::Zero: return "zero";
    case Classification::Kind::Preservation: return "preservation";
    case Classification::Kind::Creation: return "creation";
    case Classification::Kind::Annihilation: return "annihilation";
    case Classification::Kind::Inhomogeneous: return "inhomogeneous";
  }
  return "zero";
}

std::string Classification::describe() const {
  switch (kind) {
    case Kind::Zero:
    case Kind::Preservation:
      return std::string(to_string(kind));
    case Kind::Creation:
    case Kind::Annihilation:
      return std::string(to_string(kind)) + " (degree " + signed_str(*shifts.begin()) + ")";
    case Kind::Inhomogeneous: {
      std::string out = "inhomogeneous (shifts ";
      bool first = true;
      for (std::int64_t s : shifts) {
        if (!first) out += ", ";
        out += signed_str(s);
        first = false;
      }
      return out + ")";
    }
  }
  return "zero";
}

Classification classify_shift(const OperatorHandle& op, const BasisWindow& window) {
  const Coalgebra& c = op.coalgebra();
  if (!c.has_degree()) throw Error(ErrorKind::NoDegree, "coalgebra '" + c.spec() + "' has no grading");
  require_window_in_subspace(op, window);
  Classification out;
  for (const auto& source : window.keys()) {
    const std::int64_t from = degree_of_key(c, source);
    const Element image = co_toeplitz_apply(op, c.unit(source));
    for (const auto& [key, coeff] : image.terms()) {
      out.shifts.insert(degree_of_key(c, key) - from);
    }
  }
  if (out.shifts.empty()) {
    out.kind = Classification::Kind::Zero;
  } else if (out.shifts.size() > 1) {
    out.kind = Classification::Kind::Inhomogeneous;
  } else {
    const std::int64_t s = *out.shifts.begin();
    out.kind = s == 0 ? Classification::Kind::Preservation
                      : (s > 0 ? Classification::Kind::Creation : Classification::Kind::Annihilation);
  }
  return out;
}

// ---------------------------------------------------------------------------

GramResult gram_matrix(const SesquilinearForm& form, const BasisWindow& window) {
  const auto& keys = window.keys();
  GramResult out;
  out.entries.assign(keys.size(), std::vector<GaussianRational>(keys.size()));
  for (std::size_t r = 0; r < keys.size(); ++r) {
    for (std::size_t c = 0; c < keys.size(); ++c) out.entries[r][c] = form.pair_basis(keys[r], keys[c]);
  }
  out.hermitian = is_hermitian(out.entries);
  return out;
}

bool is_hermitian(const ScalarGrid& grid) {
  const std::size_t n = grid.size();
  for (const auto& row : grid) {
    if (row.size() != n) return false;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      if (grid[r][c] != grid[c][r].conj()) return false;
    }
  }
  return true;
}

std::vector<GaussianRational> leading_minors(const ScalarGrid& grid) {
  const std::size_t n = grid.size();
  ScalarGrid a = grid;
  std::vector<GaussianRational> minors;
  GaussianRational previous(1);
  for (std::size_t k = 0; k < n; ++k) {
    const GaussianRational pivot = a[k][k];
    minors.push_back(pivot);
    if (pivot.is_zero()) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / previous;
      }
    }
    previous = pivot;
  }
  return minors;
}

bool is_positive_definite(const ScalarGrid& grid) {
  if (!is_hermitian(grid)) throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian");
  const std::vector<GaussianRational> minors = leading_minors(grid);
  if (minors.size() != grid.size()) return false;
  return std::all_of(minors.begin(), minors.end(),
                     [](const GaussianRational& m) { return m.is_real() && m.re().sign() > 0; });
}

std::vector<Eigenvalue> diagonal_eigenvalues(const MatrixResult& matrix) {
  if (!matrix.leakage.empty()) {
    throw Error(ErrorKind::NotDiagonal,
                "operator maps " + to_string(matrix.leakage.front().from) + " outside the window");
  }
  std::map<GaussianRational, std::size_t, ScalarOrder> counts;
  const std::size_t n = matrix.entries.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r != c && !matrix.entries[r][c].is_zero()) {
        throw Error(ErrorKind::NotDiagonal, "nonzero off-diagonal entry at (" +
                                                to_string(matrix.window.keys()[r]) + ", " +
                                                to_string(matrix.window.keys()[c]) + ")");
      }
    }
    ++counts[matrix.entries[r][r]];
  }
  std::vector<Eigenvalue> out;
  for (const auto& [value, mult] : counts) out.push_back({value, mult});
  return out;
}

std::vector<CoassociativityWitness> check_coassociativity(const Coalgebra& coalgebra,
                                                          const BasisWindow& window) {
  std::vector<CoassociativityWitness> out;
  for (const auto& key : window.keys()) {
    const Element e = coalgebra.unit(key);
    TripleTensorElement diff = comul_left_twice(coalgebra, e) - comul_right_twice(coalgebra, e);
    if (!diff.is_zero()) out.push_back({key, std::move(diff)});
  }
  return out;
}

std::optional<AntilinearityCounterexample> verify_antilinearity(
    const CoalgebraPtr& coalgebra, const FormPtr& form, const Element& g, const Element& h,
    const GaussianRational& alpha, const std::vector<Element>& probes) {
  const OperatorHandle combined(coalgebra, form, alpha * g + h);
  const OperatorHandle op_g(coalgebra, form, g);
  const OperatorHandle op_h(coalgebra, form, h);
  for (const auto& phi : probes) {
    Element lhs = co_toeplitz_apply(combined, phi);
    Element rhs = alpha.conj() * co_toeplitz_apply(op_g, phi) + co_toeplitz_apply(op_h, phi);
    if (lhs != rhs) return AntilinearityCounterexample{phi, std::move(lhs), std::move(rhs)};
  }
  return std::nullopt;
}

}  // namespace cotq
