#include "cotq/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace cotq {

namespace {

constexpr std::string_view kTensorSign = "⊗";

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class ElementParser {
 public:
  ElementParser(std::string_view text, const Coalgebra& coalgebra)
      : text_(text), coalgebra_(coalgebra) {}

  Element parse() {
    Element out = coalgebra_.zero();
    skip();
    if (at_end()) fail("empty element", 0);
    bool first = true;
    while (true) {
      skip();
      GaussianRational sign(1);
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? GaussianRational(-1) : GaussianRational(1);
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'", pos_);
      }
      auto [coeff, key] = term();
      out.add_term(key, sign * coeff);
      skip();
      if (at_end()) break;
      first = false;
    }
    return out;
  }

  BasisKey single_key() {
    skip();
    BasisKey key = monomial();
    skip();
    if (!at_end()) fail("unexpected input after monomial", pos_);
    return key;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t offset,
                         ErrorKind kind = ErrorKind::SyntaxError) const {
    throw Error(kind, message, clamp(offset));
  }

  std::size_t clamp(std::size_t offset) const {
    return text_.empty() ? 0 : std::min(offset, text_.size() - 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && is_blank(peek())) ++pos_;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::int64_t integer(bool allow_negative) {
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_negative && !at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (pos_ == digits) fail("expected an index", start);
    std::int64_t value = 0;
    auto res = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (res.ec != std::errc{}) fail("index too large", start, ErrorKind::KeyOutOfRange);
    return negative ? -value : value;
  }

  std::pair<GaussianRational, BasisKey> term() {
    skip();
    if (at_end()) fail("expected a term", pos_);
    const char c = peek();
    if (c == 'a' || c == 'x' || c == 'E') return {GaussianRational(1), monomial()};
    GaussianRational coeff;
    try {
      coeff = parse_scalar_at(text_, pos_, /*allow_sign=*/false);
    } catch (const Error& e) {
      fail(e.what(), e.offset().value_or(pos_), e.kind());
    }
    skip();
    if (at_end() || peek() != '*') {
      fail("expected '*' and a monomial after coefficient (bare scalars are not basis elements)", pos_);
    }
    ++pos_;
    skip();
    return {coeff, monomial()};
  }

  BasisKey monomial() {
    const std::size_t start = pos_;
    if (at_end()) fail("expected a monomial", pos_);
    BasisKey key;
    switch (peek()) {
      case 'a': {
        ++pos_;
        expect('^');
        const std::int64_t i = integer(false);
        skip();
        expect('c');
        expect('^');
        const std::int64_t j = integer(false);
        key = ManinKey{i, j};
        break;
      }
      case 'x': {
        ++pos_;
        expect('_');
        const std::int64_t n = integer(true);
        switch (coalgebra_.kind()) {
          case CoalgebraKind::NegativeDegree: key = NegDegKey{n}; break;
          case CoalgebraKind::DividedPower: key = DividedKey{n}; break;
          default: fail("x_n is not a basis element of '" + coalgebra_.spec() + "'", start, ErrorKind::WrongCoalgebra);
        }
        break;
      }
      case 'E': {
        ++pos_;
        expect('_');
        const std::int64_t i = integer(false);
        expect('_');
        const std::int64_t j = integer(false);
        key = MatrixKey{i, j};
        break;
      }
      default:
        fail("expected a monomial (a^I c^J, x_N or E_I_J)", pos_);
    }
    if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '^')) {
      fail("unexpected character in monomial", pos_);
    }
    try {
      coalgebra_.check_key(key);
    } catch (const Error& e) {
      fail(e.what(), start, e.kind());
    }
    return key;
  }

  std::string_view text_;
  const Coalgebra& coalgebra_;
  std::size_t pos_ = 0;
};

bool is_negative(const GaussianRational& c) {
  return (c.is_real() && c.re().sign() < 0) || (c.re().is_zero() && c.im().sign() < 0);
}

template <class Terms, class RenderKey>
std::string render_terms(const Terms& terms, RenderKey render_key) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const bool negative = is_negative(c);
    const GaussianRational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += render_coefficient(magnitude);
    out += render_key(key);
    first = false;
  }
  return out;
}

std::string join_tensor(const std::vector<std::string>& parts) {
  bool spaced = false;
  for (const auto& p : parts) spaced = spaced || p.find(' ') != std::string::npos;
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) {
      if (spaced) out += " ";
      out += kTensorSign;
      if (spaced) out += " ";
    }
    out += parts[k];
  }
  return out;
}

struct SpecParts {
  std::string name;
  std::map<std::string, std::string> params;
};

SpecParts split_spec(std::string_view text) {
  SpecParts out;
  const std::size_t q = text.find('?');
  out.name = std::string(text.substr(0, q));
  if (q == std::string_view::npos) return out;
  std::string_view rest = text.substr(q + 1);
  while (!rest.empty()) {
    const std::size_t amp = rest.find('&');
    const std::string_view item = rest.substr(0, amp);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorKind::InvalidParameter, "malformed parameter '" + std::string(item) + "'");
    }
    out.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (amp == std::string_view::npos) break;
    rest = rest.substr(amp + 1);
  }
  return out;
}

void allow_only(const SpecParts& parts, std::initializer_list<std::string_view> allowed) {
  for (const auto& [k, v] : parts.params) {
    bool ok = false;
    for (auto a : allowed) ok = ok || k == a;
    if (!ok) {
      throw Error(ErrorKind::InvalidParameter, "unknown parameter '" + k + "' for '" + parts.name + "'");
    }
  }
}

std::int64_t int_param(const SpecParts& parts, const std::string& name) {
  auto it = parts.params.find(name);
  if (it == parts.params.end()) {
    throw Error(ErrorKind::InvalidParameter, "'" + parts.name + "' requires parameter " + name);
  }
  std::int64_t value = 0;
  const std::string& s = it->second;
  auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidParameter, "parameter " + name + " must be an integer, got '" + s + "'");
  }
  return value;
}

WeightFamily weight_param(const SpecParts& parts, const std::string& name) {
  auto it = parts.params.find(name);
  return it == parts.params.end() ? WeightFamily::one() : parse_weight_spec(it->second);
}

}  // namespace

Element parse_element(std::string_view text, const Coalgebra& coalgebra) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "0") {
    return coalgebra.zero();
  }
  return ElementParser(text, coalgebra).parse();
}

BasisKey parse_key(std::string_view text, const Coalgebra& coalgebra) {
  return ElementParser(text, coalgebra).single_key();
}

std::vector<BasisKey> parse_key_list(std::string_view text, const Coalgebra& coalgebra) {
  std::vector<BasisKey> out;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    const std::size_t comma = text.find(',', offset);
    const std::string_view item =
        text.substr(offset, comma == std::string_view::npos ? std::string_view::npos : comma - offset);
    if (item.find_first_not_of(" \t") != std::string_view::npos) {
      try {
        out.push_back(parse_key(item, coalgebra));
      } catch (const Error& e) {
        throw Error(e.kind(), e.what(), offset + e.offset().value_or(0));
      }
    }
    if (comma == std::string_view::npos) break;
    offset = comma + 1;
  }
  return out;
}

std::string render_coefficient(const GaussianRational& c) {
  if (c == GaussianRational(1)) return "";
  if (c == GaussianRational(-1)) return "-";
  return to_string(c) + "*";
}

std::string render_element(const Element& e) {
  return render_terms(e.terms(), [](const BasisKey& k) { return to_string(k); });
}

std::string render_tensor(const TensorElement& t) {
  return render_terms(t.terms(), [](const TensorKey& k) {
    return join_tensor({to_string(k[0]), to_string(k[1])});
  });
}

std::string render_triple(const TripleTensorElement& t) {
  return render_terms(t.terms(), [](const TripleKey& k) {
    return join_tensor({to_string(k[0]), to_string(k[1]), to_string(k[2])});
  });
}

CoalgebraPtr parse_coalgebra_spec(std::string_view text) {
  const SpecParts parts = split_spec(text);
  if (parts.name == "manin") {
    allow_only(parts, {"q"});
    GaussianRational q(Rational(BigInt(2), BigInt(3)));
    if (auto it = parts.params.find("q"); it != parts.params.end()) {
      try {
        q = parse_scalar(it->second);
      } catch (const Error& e) {
        throw Error(ErrorKind::InvalidParameter, "bad q '" + it->second + "': " + e.what());
      }
    }
    return make_manin(q);
  }
  if (parts.name == "divpow") {
    allow_only(parts, {});
    return make_divided_power();
  }
  if (parts.name == "negdeg") {
    allow_only(parts, {"M"});
    return make_negative_degree(int_param(parts, "M"));
  }
  if (parts.name == "matrix") {
    allow_only(parts, {"n"});
    return make_matrix(int_param(parts, "n"));
  }
  throw Error(ErrorKind::UnknownSpec, "unknown coalgebra '" + parts.name + "'");
}

FormSpec parse_form_spec(std::string_view text) {
  const SpecParts parts = split_spec(text);
  FormSpec out;
  if (parts.name == "manin-orth") {
    allow_only(parts, {"w"});
    out.kind = FormSpec::Kind::ManinOrthogonal;
    out.weight = weight_param(parts, "w");
  } else if (parts.name == "manin-skew") {
    allow_only(parts, {"mu"});
    out.kind = FormSpec::Kind::ManinSkew;
    out.weight = weight_param(parts, "mu");
  } else if (parts.name == "diag") {
    allow_only(parts, {"w"});
    out.kind = FormSpec::Kind::Diagonal;
    out.weight = weight_param(parts, "w");
  } else if (parts.name == "matrix-orth") {
    allow_only(parts, {});
    out.kind = FormSpec::Kind::MatrixOrthonormal;
  } else if (parts.name == "matrix-weighted") {
    allow_only(parts, {"w"});
    out.kind = FormSpec::Kind::MatrixWeighted;
    out.weight = weight_param(parts, "w");
  } else {
    throw Error(ErrorKind::UnknownSpec, "unknown form '" + parts.name + "'");
  }
  return out;
}

WeightFamily parse_weight_spec(std::string_view text) {
  if (text == "one") return WeightFamily::one();
  if (text == "factorial") return WeightFamily::factorial();
  if (text == "absfactorial") return WeightFamily::abs_factorial();
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  if (colon != std::string_view::npos && (name == "geom" || name == "poly")) {
    const std::string arg(text.substr(colon + 1));
    if (name == "geom") {
      Rational ratio;
      try {
        ratio = Rational::parse(arg);
      } catch (const Error& e) {
        throw Error(ErrorKind::InvalidParameter, "bad geom ratio '" + arg + "': " + e.what());
      }
      return WeightFamily::geom(ratio);
    }
    std::int64_t power = 0;
    auto res = std::from_chars(arg.data(), arg.data() + arg.size(), power);
    if (arg.empty() || res.ec != std::errc{} || res.ptr != arg.data() + arg.size()) {
      throw Error(ErrorKind::InvalidParameter, "bad poly power '" + arg + "'");
    }
    return WeightFamily::poly(power);
  }
  throw Error(ErrorKind::UnknownSpec, "unknown weight family '" + std::string(text) + "'");
}

AnySpec parse_spec(std::string_view text) {
  const std::string_view name = text.substr(0, text.find_first_of("?:"));
  if (name == "manin" || name == "divpow" || name == "negdeg" || name == "matrix") {
    return parse_coalgebra_spec(text);
  }
  if (name == "manin-orth" || name == "manin-skew" || name == "diag" || name == "matrix-orth" ||
      name == "matrix-weighted") {
    return parse_form_spec(text);
  }
  return parse_weight_spec(text);
}

}  // namespace cotq
