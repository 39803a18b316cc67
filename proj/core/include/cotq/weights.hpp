#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>

#include "cotq/scalar.hpp"

namespace cotq {

/// One-argument positive weight function. Multi-argument weights are products
/// of the same family applied to each argument.
class WeightFamily {
 public:
  enum class Kind { One, Factorial, Geom, Poly, AbsFactorial };

  static WeightFamily one() { return WeightFamily(Kind::One); }
  static WeightFamily factorial() { return WeightFamily(Kind::Factorial); }
  static WeightFamily abs_factorial() { return WeightFamily(Kind::AbsFactorial); }
  /// w(i) = ratio^i. Throws InvalidParameter unless ratio > 0.
  static WeightFamily geom(Rational ratio);
  /// w(i) = (|i| + 1)^power.
  static WeightFamily poly(std::int64_t power);

  Kind kind() const { return kind_; }
  const Rational& ratio() const { return ratio_; }
  std::int64_t power() const { return power_; }

  /// False only for Factorial, which is undefined on negative integers.
  bool defined_on_negatives() const { return kind_ != Kind::Factorial; }

  /// Strictly positive value. Throws InvalidWeightDomain for Factorial(i<0).
  Rational operator()(std::int64_t i) const;
  /// Product of single-argument values.
  Rational operator()(std::initializer_list<std::int64_t> args) const;

  /// "one", "factorial", "absfactorial", "geom:1/2", "poly:3".
  std::string spec() const;

  friend bool operator==(const WeightFamily&, const WeightFamily&) = default;

 private:
  explicit WeightFamily(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational ratio_{1};
  std::int64_t power_ = 0;
};

}  // namespace cotq
