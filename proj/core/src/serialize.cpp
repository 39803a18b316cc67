#include "cotq/serialize.hpp"

#include "cotq/parser.hpp"

namespace cotq {

Json to_json(const GaussianRational& z) {
  Json j;
  j["re"] = z.re().fraction_str();
  j["im"] = z.im().fraction_str();
  return j;
}

GaussianRational scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_string() ||
      !j["im"].is_string()) {
    throw Error(ErrorKind::SyntaxError, "scalar JSON must be {\"re\": \"p/q\", \"im\": \"p/q\"}");
  }
  return {Rational::parse(j["re"].get<std::string>()), Rational::parse(j["im"].get<std::string>())};
}

Json to_json(const Element& e) {
  Json j;
  j["coalgebra"] = e.context();
  j["terms"] = Json::array();
  for (const auto& [k, c] : e.terms()) {
    Json t;
    t["key"] = to_string(k);
    t["coeff"] = to_json(c);
    j["terms"].push_back(std::move(t));
  }
  return j;
}

Json to_json(const TensorElement& e) {
  Json j;
  j["coalgebra"] = e.context();
  j["terms"] = Json::array();
  for (const auto& [k, c] : e.terms()) {
    Json t;
    t["key1"] = to_string(k[0]);
    t["key2"] = to_string(k[1]);
    t["coeff"] = to_json(c);
    j["terms"].push_back(std::move(t));
  }
  return j;
}

Json to_json(const TripleTensorElement& e) {
  Json j;
  j["coalgebra"] = e.context();
  j["terms"] = Json::array();
  for (const auto& [k, c] : e.terms()) {
    Json t;
    t["key1"] = to_string(k[0]);
    t["key2"] = to_string(k[1]);
    t["key3"] = to_string(k[2]);
    t["coeff"] = to_json(c);
    j["terms"].push_back(std::move(t));
  }
  return j;
}

Json to_json(const MatrixResult& m) {
  Json j;
  j["window"] = Json::array();
  for (const auto& k : m.window.keys()) j["window"].push_back(to_string(k));
  j["entries"] = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(to_json(z));
    j["entries"].push_back(std::move(r));
  }
  j["leakage"] = Json::array();
  for (const auto& leak : m.leakage) {
    Json l;
    l["from"] = to_string(leak.from);
    l["escaped"] = to_json(leak.escaped);
    j["leakage"].push_back(std::move(l));
  }
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["kind"] = std::string(to_string(c.kind));
  j["degree"] = c.degree();
  j["shifts"] = Json::array();
  for (std::int64_t s : c.shifts) j["shifts"].push_back(s);
  j["description"] = c.describe();
  return j;
}

std::string csv_scalar(const GaussianRational& z) {
  std::string out = z.re().str();
  if (z.im().sign() < 0) {
    out += "-" + (-z.im()).str();
  } else {
    out += "+" + z.im().str();
  }
  return out + "i";
}

std::string to_csv(const BasisWindow& window, const ScalarGrid& grid) {
  std::string out;
  for (const auto& k : window.keys()) out += "," + to_string(k);
  out += "\n";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    out += to_string(window.keys()[r]);
    for (const auto& z : grid[r]) out += "," + csv_scalar(z);
    out += "\n";
  }
  return out;
}

}  // namespace cotq
