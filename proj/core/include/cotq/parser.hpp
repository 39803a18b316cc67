#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cotq/coalgebra.hpp"
#include "cotq/instances.hpp"

namespace cotq {

// Surface syntax (whitespace insensitive):
//
//   element  := term (('+' | '-') term)*          first term may carry a sign
//   term     := [coeff '*'] monomial
//   coeff    := scalar literal without leading sign: 3, 3/2, 2i, i, (1/2+3i)
//   monomial := 'a^' NAT 'c^' NAT | 'x_' INT | 'E_' NAT '_' NAT
//
// `a^0 c^0` is an ordinary basis monomial; bare scalars are rejected, except
// that the whole input `0` denotes the zero element (its canonical rendering).

/// Throws SyntaxError (with byte offset), KeyOutOfRange, WrongCoalgebra.
Element parse_element(std::string_view text, const Coalgebra& coalgebra);

/// A single monomial, validated against the coalgebra.
BasisKey parse_key(std::string_view text, const Coalgebra& coalgebra);

/// Comma-separated monomials, e.g. "x_0, x_1, x_3".
std::vector<BasisKey> parse_key_list(std::string_view text, const Coalgebra& coalgebra);

/// Canonical form: basis order, "1*" elided, negative real or imaginary
/// coefficients folded into " - ", zero rendered "0".
std::string render_element(const Element& e);
std::string render_tensor(const TensorElement& t);
std::string render_triple(const TripleTensorElement& t);

/// Canonical rendering of a coefficient that multiplies a monomial.
std::string render_coefficient(const GaussianRational& c);

/// `manin?q=<scalar>` (q defaults to 2/3), `divpow`, `negdeg?M=<int>`,
/// `matrix?n=<int>`. Throws UnknownSpec / InvalidParameter.
CoalgebraPtr parse_coalgebra_spec(std::string_view text);

/// `manin-orth?w=F`, `manin-skew?mu=F`, `diag?w=F`, `matrix-orth`,
/// `matrix-weighted?w=F`; F defaults to `one`.
FormSpec parse_form_spec(std::string_view text);

/// `one`, `factorial`, `absfactorial`, `geom:<rational>`, `poly:<int>`.
WeightFamily parse_weight_spec(std::string_view text);

using AnySpec = std::variant<CoalgebraPtr, FormSpec, WeightFamily>;

/// Dispatches on the leading name to one of the three spec parsers.
AnySpec parse_spec(std::string_view text);

}  // namespace cotq
