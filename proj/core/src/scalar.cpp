#include "cotq/scalar.hpp"

#include <cctype>

#include "cotq/error.hpp"

namespace cotq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MalformedRational: return "MalformedRational";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::StarUndefined: return "StarUndefined";
    case ErrorKind::KeyOutOfRange: return "KeyOutOfRange";
    case ErrorKind::WrongCoalgebra: return "WrongCoalgebra";
    case ErrorKind::InvalidWeightDomain: return "InvalidWeightDomain";
    case ErrorKind::NotInSubcoalgebra: return "NotInSubcoalgebra";
    case ErrorKind::NoDegree: return "NoDegree";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::Unclassified: return "Unclassified";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSpec: return "UnknownSpec";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw Error(ErrorKind::MalformedRational, "rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::fraction_str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  const GaussianRational z = parse_scalar_at(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) {
    throw Error(ErrorKind::SyntaxError, "trailing characters after rational", pos);
  }
  if (!z.is_real()) {
    throw Error(ErrorKind::SyntaxError, "expected a real rational", 0);
  }
  return z.re();
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result(1);
  Rational square = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= square;
    e >>= 1U;
    if (e != 0) square *= square;
  }
  return result;
}

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational GaussianRational::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

GaussianRational pow(const GaussianRational& base, std::int64_t exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  GaussianRational result(1);
  GaussianRational square = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= square;
    e >>= 1U;
    if (e != 0) square *= square;
  }
  return result;
}

namespace {

std::string imaginary_part(const Rational& im) {
  if (im == Rational(1)) return "i";
  if (im == Rational(-1)) return "-i";
  return im.str() + "i";
}

}  // namespace

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return z.re().str();
  if (z.re().is_zero()) return imaginary_part(z.im());
  std::string out = "(" + z.re().str();
  if (z.im().sign() > 0) out += "+";
  out += imaginary_part(z.im());
  out += ")";
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

void skip_blanks(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

BigInt read_digits(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == start) throw Error(ErrorKind::SyntaxError, "expected digits", start);
  return BigInt(std::string(text.substr(start, pos - start)));
}

// atom := rational ['i'] | 'i'
GaussianRational parse_atom(std::string_view text, std::size_t& pos) {
  skip_blanks(text, pos);
  if (pos >= text.size()) throw Error(ErrorKind::SyntaxError, "expected scalar", pos);
  if (text[pos] == 'i') {
    ++pos;
    return GaussianRational::i();
  }
  if (!is_digit(text[pos])) throw Error(ErrorKind::SyntaxError, "expected scalar", pos);
  BigInt num = read_digits(text, pos);
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_pos = pos;
    den = read_digits(text, pos);
    if (den == 0) throw Error(ErrorKind::MalformedRational, "zero denominator", den_pos);
  }
  Rational value(num, den);
  std::size_t look = pos;
  skip_blanks(text, look);
  if (look < text.size() && text[look] == 'i') {
    pos = look + 1;
    return {Rational(0), value};
  }
  return value;
}

GaussianRational parse_signed_atom(std::string_view text, std::size_t& pos) {
  skip_blanks(text, pos);
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  GaussianRational a = parse_atom(text, pos);
  return negative ? -a : a;
}

}  // namespace

GaussianRational parse_scalar_at(std::string_view text, std::size_t& pos, bool allow_sign) {
  skip_blanks(text, pos);
  if (pos < text.size() && text[pos] == '(') {
    const std::size_t open = pos;
    ++pos;
    GaussianRational sum = parse_signed_atom(text, pos);
    while (true) {
      skip_blanks(text, pos);
      if (pos >= text.size()) throw Error(ErrorKind::SyntaxError, "unclosed '('", open);
      const char c = text[pos];
      if (c == ')') {
        ++pos;
        return sum;
      }
      if (c != '+' && c != '-') throw Error(ErrorKind::SyntaxError, "expected '+', '-' or ')'", pos);
      ++pos;
      GaussianRational a = parse_atom(text, pos);
      sum += c == '-' ? -a : a;
    }
  }
  return allow_sign ? parse_signed_atom(text, pos) : parse_atom(text, pos);
}

GaussianRational parse_scalar(std::string_view text) {
  std::size_t pos = 0;
  GaussianRational z = parse_scalar_at(text, pos);
  skip_blanks(text, pos);
  if (pos != text.size()) throw Error(ErrorKind::SyntaxError, "trailing characters after scalar", pos);
  return z;
}

}  // namespace cotq
