#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "cotq/basis.hpp"
#include "cotq/error.hpp"
#include "cotq/scalar.hpp"

namespace cotq {

/// Finitely supported linear combination over `Key`, tagged with the
/// canonical spec string of the coalgebra it lives in. No stored coefficient
/// is ever zero, so structural equality is mathematical equality.
template <class Key>
class SparseVector {
 public:
  using key_type = Key;
  using Terms = std::map<Key, GaussianRational>;

  SparseVector() = default;
  explicit SparseVector(std::string context) : context_(std::move(context)) {}

  const std::string& context() const { return context_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  GaussianRational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? GaussianRational{} : it->second;
  }

  /// Accumulates `c` onto `key`, dropping the entry if it cancels.
  void add_term(const Key& key, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparseVector& operator+=(const SparseVector& o) {
    require_same_context(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }

  SparseVector& operator-=(const SparseVector& o) {
    require_same_context(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }

  SparseVector& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(SparseVector a, const GaussianRational& s) { return a *= s; }
  friend SparseVector operator*(const GaussianRational& s, SparseVector a) { return a *= s; }
  friend SparseVector operator-(SparseVector a) { return a *= GaussianRational(-1); }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

  void require_same_context(const SparseVector& o) const {
    if (o.context_ != context_) {
      throw Error(ErrorKind::ContextMismatch,
                  "cannot combine elements of '" + context_ + "' and '" + o.context_ + "'");
    }
  }

 private:
  std::string context_;
  Terms terms_;
};

using TensorKey = std::array<BasisKey, 2>;
using TripleKey = std::array<BasisKey, 3>;

using Element = SparseVector<BasisKey>;
using TensorElement = SparseVector<TensorKey>;
using TripleTensorElement = SparseVector<TripleKey>;

}  // namespace cotq
