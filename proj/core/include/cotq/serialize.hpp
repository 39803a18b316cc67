#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cotq/engine.hpp"

namespace cotq {

/// Insertion-ordered JSON so that emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// {"re": "p/q", "im": "p/q"}, reduced fractions, "0/1" for zero parts.
Json to_json(const GaussianRational& z);
/// Inverse of to_json(GaussianRational). Throws SyntaxError on bad input.
GaussianRational scalar_from_json(const Json& j);

/// {"coalgebra": spec, "terms": [{"key": "x_1", "coeff": {...}}, ...]}
Json to_json(const Element& e);
/// Like Element, with "key1"/"key2" per term.
Json to_json(const TensorElement& t);
/// Like Element, with "key1"/"key2"/"key3" per term.
Json to_json(const TripleTensorElement& t);

/// {"window": [...], "entries": [[...]], "leakage": [{"from", "escaped"}]}
Json to_json(const MatrixResult& m);
Json to_json(const Classification& c);

/// "re+im i" in reduced fractions, e.g. "1/2-3i", "2+0i".
std::string csv_scalar(const GaussianRational& z);
/// Key-labelled header row and column.
std::string to_csv(const BasisWindow& window, const ScalarGrid& grid);

}  // namespace cotq
