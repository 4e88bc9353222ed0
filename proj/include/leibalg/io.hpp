#pragma once

#include "leibalg/algebra.hpp"

#include <json.hpp>

#include <sstream>
#include <variant>

namespace leibalg {

/// Input error with the location (table entry index, triple, ...) attached.
struct DocumentError : std::runtime_error {
  explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

/// On-disk algebra description: sparse table, coefficients as exact strings.
struct AlgebraDocument {
  struct Entry {
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, std::string>> result;
  };

  std::string name;
  std::string kind;  // "leibniz" | "associative"
  int dim = 0;
  std::string field = "rational";  // or "fp:<p>"
  std::vector<std::string> basis;
  std::vector<Entry> table;
  std::optional<std::vector<std::string>> unit;
};

inline FieldSpec parse_field(const std::string& s) {
  if (s == "rational") return FieldSpec::rationals();
  if (s.rfind("fp:", 0) == 0) {
    std::int64_t p = 0;
    try {
      p = std::stoll(s.substr(3));
    } catch (const std::exception&) {
      throw DocumentError("field: cannot parse prime in '" + s + "'");
    }
    return FieldSpec::prime(p);
  }
  throw DocumentError("field: expected 'rational' or 'fp:<p>', got '" + s + "'");
}

inline nlohmann::ordered_json to_json(const AlgebraDocument& d) {
  nlohmann::ordered_json j;
  j["name"] = d.name;
  j["kind"] = d.kind;
  j["dim"] = d.dim;
  j["field"] = d.field;
  j["basis"] = d.basis;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& e : d.table) {
    nlohmann::ordered_json row;
    row["left"] = e.left;
    row["right"] = e.right;
    nlohmann::ordered_json result = nlohmann::ordered_json::array();
    for (const auto& [k, c] : e.result) result.push_back({{"index", k}, {"coeff", c}});
    row["result"] = std::move(result);
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  if (d.unit) j["unit"] = *d.unit;
  return j;
}

inline AlgebraDocument document_from_json(const nlohmann::json& j) {
  AlgebraDocument d;
  try {
    d.name = j.at("name").get<std::string>();
    d.kind = j.at("kind").get<std::string>();
    d.dim = j.at("dim").get<int>();
    d.field = j.value("field", std::string("rational"));
    if (j.contains("basis")) d.basis = j.at("basis").get<std::vector<std::string>>();
    if (j.contains("unit")) d.unit = j.at("unit").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(std::string("document header: ") + e.what());
  }
  if (d.kind != "leibniz" && d.kind != "associative")
    throw DocumentError("kind: expected 'leibniz' or 'associative', got '" + d.kind + "'");
  if (d.dim < 0) throw DocumentError("dim: negative dimension");
  if (!d.basis.empty() && static_cast<int>(d.basis.size()) != d.dim)
    throw DocumentError("basis: expected " + std::to_string(d.dim) + " names, got " +
                        std::to_string(d.basis.size()));
  if (d.unit && static_cast<int>(d.unit->size()) != d.dim)
    throw DocumentError("unit: expected " + std::to_string(d.dim) + " coordinates");
  parse_field(d.field);
  int entry = 0;
  for (const auto& row : j.value("table", nlohmann::json::array())) {
    AlgebraDocument::Entry e;
    try {
      e.left = row.at("left").get<int>();
      e.right = row.at("right").get<int>();
      for (const auto& term : row.at("result"))
        e.result.emplace_back(term.at("index").get<int>(), term.at("coeff").get<std::string>());
    } catch (const nlohmann::json::exception& ex) {
      throw DocumentError("table entry " + std::to_string(entry) + ": " + ex.what());
    }
    auto in_range = [&](int i) { return i >= 0 && i < d.dim; };
    if (!in_range(e.left) || !in_range(e.right))
      throw DocumentError("table entry " + std::to_string(entry) + ": index out of range");
    for (const auto& [k, c] : e.result)
      if (!in_range(k))
        throw DocumentError("table entry " + std::to_string(entry) + ": result index " +
                            std::to_string(k) + " out of range");
    d.table.push_back(std::move(e));
    ++entry;
  }
  return d;
}

inline AlgebraDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

inline Rational parse_coefficient(const std::string& s, int entry) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw DocumentError("table entry " + std::to_string(entry) + ": malformed coefficient '" + s +
                        "'");
  }
}

inline StructureTable<Rational> document_table(const AlgebraDocument& d) {
  StructureTable<Rational> t(d.dim, d.basis);
  int entry = 0;
  for (const auto& e : d.table) {
    for (const auto& [k, c] : e.result) t.set_c(e.left, e.right, k, parse_coefficient(c, entry));
    ++entry;
  }
  return t;
}

inline LeibnizAlgebra<Rational> document_leibniz(const AlgebraDocument& d) {
  if (d.kind != "leibniz") throw DocumentError("document '" + d.name + "' is not a Leibniz algebra");
  StructureTable<Rational> t = document_table(d);
  if (auto fail = check_leibniz(t)) {
    const auto& names = t.basis_names();
    throw DocumentError("document '" + d.name + "' violates the Leibniz identity at (" +
                        names[fail->i] + "," + names[fail->j] + "," + names[fail->k] + ")");
  }
  return LeibnizAlgebra<Rational>(std::move(t));
}

inline AssocCommAlgebra<Rational> document_assoc(const AlgebraDocument& d) {
  if (d.kind != "associative")
    throw DocumentError("document '" + d.name + "' is not an associative algebra");
  std::optional<ColVector<Rational>> unit;
  if (d.unit) {
    ColVector<Rational> u(d.dim);
    for (int i = 0; i < d.dim; ++i) u(i) = parse_coefficient((*d.unit)[i], -1);
    unit = std::move(u);
  }
  try {
    return AssocCommAlgebra<Rational>(document_table(d), std::move(unit));
  } catch (const std::invalid_argument& e) {
    throw DocumentError("document '" + d.name + "': " + e.what());
  }
}

/// Sparse document from a table: only nonzero products listed, canonical
/// coefficient strings.
inline AlgebraDocument document_from_table(const std::string& name, const std::string& kind,
                                           const StructureTable<Rational>& t,
                                           const std::optional<ColVector<Rational>>& unit =
                                               std::nullopt) {
  AlgebraDocument d;
  d.name = name;
  d.kind = kind;
  d.dim = t.dim();
  d.basis = t.basis_names();
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) {
      AlgebraDocument::Entry e{i, j, {}};
      ColVector<Rational> w = t.product_basis(i, j);
      for (int k = 0; k < t.dim(); ++k)
        if (!is_zero(w(k))) e.result.emplace_back(k, to_string(w(k)));
      if (!e.result.empty()) d.table.push_back(std::move(e));
    }
  if (unit) {
    std::vector<std::string> u;
    for (int i = 0; i < t.dim(); ++i) u.push_back(to_string((*unit)(i)));
    d.unit = std::move(u);
  }
  return d;
}

inline std::string serialize_document(const AlgebraDocument& d) { return to_json(d).dump(2) + "\n"; }

}  // namespace leibalg
