#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace cotq {

/// a^i c^j in the Manin quantum plane.
struct ManinKey {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend bool operator==(const ManinKey&, const ManinKey&) = default;
};

/// x_n, n >= 0, in the divided power coalgebra.
struct DividedKey {
  std::int64_t n = 0;
  friend bool operator==(const DividedKey&, const DividedKey&) = default;
};

/// x_n, |n| <= M, in the truncated coalgebra with negative degrees.
struct NegDegKey {
  std::int64_t n = 0;
  friend bool operator==(const NegDegKey&, const NegDegKey&) = default;
};

/// Matrix unit E_{i,j}, 1 <= i, j <= n.
struct MatrixKey {
  std::int64_t i = 1;
  std::int64_t j = 1;
  friend bool operator==(const MatrixKey&, const MatrixKey&) = default;
};

/// Label of a distinguished basis vector. Range validity depends on the
/// owning coalgebra and is checked there, not here.
class BasisKey {
 public:
  using Variant = std::variant<ManinKey, DividedKey, NegDegKey, MatrixKey>;

  BasisKey() = default;
  BasisKey(ManinKey k) : key_(k) {}    // NOLINT(google-explicit-constructor)
  BasisKey(DividedKey k) : key_(k) {}  // NOLINT(google-explicit-constructor)
  BasisKey(NegDegKey k) : key_(k) {}   // NOLINT(google-explicit-constructor)
  BasisKey(MatrixKey k) : key_(k) {}   // NOLINT(google-explicit-constructor)

  const Variant& get() const { return key_; }

  template <class K>
  bool is() const { return std::holds_alternative<K>(key_); }
  template <class K>
  const K& as() const { return std::get<K>(key_); }

  /// Intrinsic grading: i+j for a^i c^j, n for x_n, i+j for E_{i,j}.
  std::int64_t degree() const;

  /// Graded-lexicographic: by family, then degree, then dictionary order.
  /// Manin ties use the word a^i c^j with a < c, so a^2 c^0 precedes
  /// a^1 c^1; matrix ties compare (i, j) ascending.
  friend std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b);
  friend bool operator==(const BasisKey&, const BasisKey&) = default;

 private:
  Variant key_;
};

/// Canonical text: "a^2 c^3", "x_4", "x_-3", "E_1_2".
std::string to_string(const BasisKey& key);

}  // namespace cotq
