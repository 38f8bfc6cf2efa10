// Spec-document ingestion and report serialization.
//
// A spec document is JSON with a "kind" field:
//   free_d2 | free_d3                — the symbolic free braces;
//   quotient_d2 | quotient_d3       — finite quotients, field "modulus";
//   trivial_cyclic                  — Z/m with mul = add, field "modulus";
//   table                           — fields "elements" (labels), "add" and
//                                      "mul" (n x n row-major index matrices,
//                                      entry [i][j] = row ∘ column);
//   ybe_solution                    — fields "elements" and "r" (n^2 x 2
//                                      matrix, row x*n+y holding r(x,y)).
//
// Reports are emitted through nlohmann::ordered_json so identical runs
// produce byte-identical documents.

#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "braces/cayley.hpp"
#include "braces/check.hpp"
#include "braces/core.hpp"
#include "braces/free_d2.hpp"
#include "braces/free_d3.hpp"
#include "braces/ybe.hpp"

namespace braces {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct SpecDocument {
  std::string kind;
  std::int64_t modulus = 0;
  std::vector<std::string> elements;
  std::vector<std::uint32_t> add;     // table kind, flattened row-major
  std::vector<std::uint32_t> mul;     // table kind
  std::vector<std::uint32_t> r_left;  // ybe_solution kind
  std::vector<std::uint32_t> r_right;
};

namespace detail {

inline std::uint32_t parse_index(const Json& v, std::size_t n,
                                 const char* where) {
  if (!v.is_number_integer())
    throw ParseError(std::string(where) + ": entry is not an integer");
  std::int64_t i = v.get<std::int64_t>();
  if (i < 0 || static_cast<std::size_t>(i) >= n)
    throw ParseError(std::string(where) + ": index " + std::to_string(i) +
                     " out of range 0.." + std::to_string(n - 1));
  return static_cast<std::uint32_t>(i);
}

inline std::vector<std::uint32_t> parse_matrix(const Json& m, std::size_t rows,
                                               std::size_t cols,
                                               std::size_t index_bound,
                                               const char* where) {
  if (!m.is_array() || m.size() != rows)
    throw ParseError(std::string(where) + ": expected " +
                     std::to_string(rows) + " rows");
  std::vector<std::uint32_t> out;
  out.reserve(rows * cols);
  for (const Json& row : m) {
    if (!row.is_array() || row.size() != cols)
      throw ParseError(std::string(where) + ": expected rows of length " +
                       std::to_string(cols));
    for (const Json& v : row) out.push_back(parse_index(v, index_bound, where));
  }
  return out;
}

}  // namespace detail

inline SpecDocument parse_spec_document(const Json& doc) {
  if (!doc.is_object()) throw ParseError("spec document must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("spec document requires a string field 'kind'");
  SpecDocument s;
  s.kind = doc["kind"].get<std::string>();

  if (s.kind == "free_d2" || s.kind == "free_d3") return s;

  if (s.kind == "quotient_d2" || s.kind == "quotient_d3" ||
      s.kind == "trivial_cyclic") {
    if (!doc.contains("modulus") || !doc["modulus"].is_number_integer())
      throw ParseError("kind '" + s.kind +
                       "' requires an integer field 'modulus'");
    s.modulus = doc["modulus"].get<std::int64_t>();
    return s;
  }

  if (s.kind == "table" || s.kind == "ybe_solution") {
    if (!doc.contains("elements") || !doc["elements"].is_array() ||
        doc["elements"].empty())
      throw ParseError("kind '" + s.kind +
                       "' requires a non-empty array field 'elements'");
    for (const Json& e : doc["elements"]) {
      if (!e.is_string())
        throw ParseError("'elements' entries must be strings");
      s.elements.push_back(e.get<std::string>());
    }
    const std::size_t n = s.elements.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (s.elements[i] == s.elements[j])
          throw ParseError("duplicate element label '" + s.elements[i] + "'");

    if (s.kind == "table") {
      if (!doc.contains("add") || !doc.contains("mul"))
        throw ParseError("kind 'table' requires fields 'add' and 'mul'");
      s.add = detail::parse_matrix(doc["add"], n, n, n, "add");
      s.mul = detail::parse_matrix(doc["mul"], n, n, n, "mul");
    } else {
      if (!doc.contains("r"))
        throw ParseError("kind 'ybe_solution' requires field 'r'");
      std::vector<std::uint32_t> flat =
          detail::parse_matrix(doc["r"], n * n, 2, n, "r");
      s.r_left.resize(n * n);
      s.r_right.resize(n * n);
      for (std::size_t i = 0; i < n * n; ++i) {
        s.r_left[i] = flat[2 * i];
        s.r_right[i] = flat[2 * i + 1];
      }
    }
    return s;
  }

  throw ParseError("unknown spec kind '" + s.kind + "'");
}

inline SpecDocument load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_spec_document(doc);
}

// A brace loaded from a spec: one of the two symbolic free braces or a
// verified finite Cayley brace.
struct LoadedBrace {
  std::variant<D2Brace, D3Brace, CayleyBrace> value;

  bool finite() const { return std::holds_alternative<CayleyBrace>(value); }
  const CayleyBrace& cayley() const { return std::get<CayleyBrace>(value); }
  std::string describe() const {
    return std::visit([](const auto& b) { return std::string(b.describe()); },
                      value);
  }
};

inline LoadedBrace build_from_spec(const SpecDocument& s) {
  if (s.kind == "free_d2") return {D2Brace()};
  if (s.kind == "free_d3") return {D3Brace()};
  if (s.kind == "quotient_d2")
    return {build_quotient({QuotientFamily::d2, s.modulus})};
  if (s.kind == "quotient_d3")
    return {build_quotient({QuotientFamily::d3, s.modulus})};
  if (s.kind == "trivial_cyclic") return {build_trivial_cyclic(s.modulus)};
  if (s.kind == "table")
    return {from_tables(s.elements, s.add, s.mul, "table")};
  throw ParseError("spec kind '" + s.kind + "' does not describe a brace");
}

inline YbeMap ybe_map_from_spec(const SpecDocument& s) {
  if (s.kind != "ybe_solution")
    throw ParseError("spec kind '" + s.kind + "' is not a ybe_solution");
  return make_ybe_map(s.elements, s.r_left, s.r_right, "ybe_solution");
}

// Solution export in the same shape ybe_solution specs are ingested from,
// plus property flags filled in by the caller.
inline Json solution_to_json(const YbeMap& m) {
  Json j;
  j["elements"] = m.labels;
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.left.size(); ++i)
    rows.push_back(Json::array({m.left[i], m.right[i]}));
  j["r"] = rows;
  return j;
}

template <typename E, typename Fmt>
Json check_to_json(const CheckResult<E>& c, Fmt&& fmt) {
  Json j;
  j["name"] = c.name;
  j["status"] = c.passed() ? "pass" : "fail";
  if (!c.passed()) {
    j["detail"] = c.detail;
    Json w = Json::array();
    for (const E& e : c.witness) w.push_back(fmt(e));
    j["witness"] = w;
  }
  j["tuples"] = c.tuples;
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

// CSV flattening: one row per check (or per table row for the commands that
// emit tables), RFC-4180 quoting.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header)
      : columns_(header.size()) {
    append_row(header);
  }

  void append_row(const std::vector<std::string>& fields) {
    if (fields.size() != columns_)
      throw DomainError("CSV row width mismatch");
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ += ',';
      out_ += escape(fields[i]);
    }
    out_ += '\n';
  }

  const std::string& str() const { return out_; }

 private:
  static std::string escape(const std::string& f) {
    if (f.find_first_of(",\"\n") == std::string::npos) return f;
    std::string q = "\"";
    for (char c : f) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }

  std::size_t columns_;
  std::string out_;
};

inline void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + out_path + "'");
  out << text;
}

}  // namespace braces
