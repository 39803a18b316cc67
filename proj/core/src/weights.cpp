#include "cotq/weights.hpp"

#include "cotq/error.hpp"

namespace cotq {

namespace {

Rational factorial_of(std::int64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

}  // namespace

WeightFamily WeightFamily::geom(Rational ratio) {
  if (ratio.sign() <= 0) {
    throw Error(ErrorKind::InvalidParameter, "geom ratio must be positive, got " + ratio.str());
  }
  WeightFamily w(Kind::Geom);
  w.ratio_ = std::move(ratio);
  return w;
}

WeightFamily WeightFamily::poly(std::int64_t power) {
  if (power < 0) {
    throw Error(ErrorKind::InvalidParameter, "poly power must be non-negative");
  }
  WeightFamily w(Kind::Poly);
  w.power_ = power;
  return w;
}

Rational WeightFamily::operator()(std::int64_t i) const {
  switch (kind_) {
    case Kind::One:
      return Rational(1);
    case Kind::Factorial:
      if (i < 0) {
        throw Error(ErrorKind::InvalidWeightDomain,
                    "factorial weight evaluated at negative index " + std::to_string(i));
      }
      return factorial_of(i);
    case Kind::AbsFactorial:
      return factorial_of(i < 0 ? -i : i);
    case Kind::Geom:
      return pow(ratio_, i);
    case Kind::Poly:
      return pow(Rational(i < 0 ? 1 - i : 1 + i), power_);
  }
  return Rational(1);
}

Rational WeightFamily::operator()(std::initializer_list<std::int64_t> args) const {
  Rational out(1);
  for (std::int64_t a : args) out *= (*this)(a);
  return out;
}

std::string WeightFamily::spec() const {
  switch (kind_) {
    case Kind::One: return "one";
    case Kind::Factorial: return "factorial";
    case Kind::AbsFactorial: return "absfactorial";
    case Kind::Geom: return "geom:" + ratio_.str();
    case Kind::Poly: return "poly:" + std::to_string(power_);
  }
  return "one";
}

}  // namespace cotq
