#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cotq {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}

  /// Throws Error{MalformedRational} when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws Error{DivisionByZero}.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Always "p/q", e.g. "3/1" and "0/1".
  std::string fraction_str() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_;
};

Rational pow(const Rational& base, std::int64_t exponent);

/// A Gaussian rational re + im*i: exact complex scalar with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Throws Error{DivisionByZero} for zero.
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

/// Exact integer power; negative exponents invert first.
/// Throws Error{DivisionByZero} for 0 raised to a negative power.
GaussianRational pow(const GaussianRational& base, std::int64_t exponent);

/// Total order by (re, im). Only for canonical sorting; carries no algebraic meaning.
struct ScalarOrder {
  bool operator()(const GaussianRational& a, const GaussianRational& b) const {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
  }
};

/// Canonical text form, readable by parse_scalar:
///   "3", "-1/2", "i", "-2i", "1/2i", "(1/2+3i)", "(3-i)".
std::string to_string(const GaussianRational& z);

/// Parses a complete scalar literal. Accepted forms include "3", "3/2", "2i",
/// "-2i", "i", "(1/2+3i)", "(3-i)". Throws Error{SyntaxError} with a byte
/// offset on malformed input.
GaussianRational parse_scalar(std::string_view text);

/// Parses one scalar literal starting at `pos` (skipping leading blanks) and
/// advances `pos` past it. A leading sign is consumed only if `allow_sign`.
/// Offsets in thrown errors are relative to the start of `text`.
GaussianRational parse_scalar_at(std::string_view text, std::size_t& pos, bool allow_sign = true);

}  // namespace cotq
