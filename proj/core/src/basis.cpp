#include "cotq/basis.hpp"

namespace cotq {

namespace {

struct DegreeVisitor {
  std::int64_t operator()(const ManinKey& k) const { return k.i + k.j; }
  std::int64_t operator()(const DividedKey& k) const { return k.n; }
  std::int64_t operator()(const NegDegKey& k) const { return k.n; }
  std::int64_t operator()(const MatrixKey& k) const { return k.i + k.j; }
};

}  // namespace

std::int64_t BasisKey::degree() const { return std::visit(DegreeVisitor{}, key_); }

std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b) {
  if (auto c = a.key_.index() <=> b.key_.index(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (const auto* ma = std::get_if<ManinKey>(&a.key_)) {
    // Equal degree: more leading a's come first in dictionary order.
    return b.as<ManinKey>().i <=> ma->i;
  }
  if (const auto* ea = std::get_if<MatrixKey>(&a.key_)) {
    return ea->i <=> b.as<MatrixKey>().i;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const BasisKey& key) {
  struct Render {
    std::string operator()(const ManinKey& k) const {
      return "a^" + std::to_string(k.i) + " c^" + std::to_string(k.j);
    }
    std::string operator()(const DividedKey& k) const { return "x_" + std::to_string(k.n); }
    std::string operator()(const NegDegKey& k) const { return "x_" + std::to_string(k.n); }
    std::string operator()(const MatrixKey& k) const {
      return "E_" + std::to_string(k.i) + "_" + std::to_string(k.j);
    }
  };
  return std::visit(Render{}, key.get());
}

}  // namespace cotq
