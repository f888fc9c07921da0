#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "syzkit/poly.hpp"
#include "syzkit/syzygy.hpp"
#include "syzkit/tensor.hpp"

namespace syzkit {

using Json = nlohmann::json;

inline Json tensor_to_json(const TripleTensor& t) {
  Json entries = Json::array();
  for (int i = 0; i < t.a(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < t.b(); ++j) {
      Json cell = Json::array();
      for (int k = 0; k < t.c(); ++k) cell.push_back(rat_to_string(t.coeff(i, j, k)));
      row.push_back(std::move(cell));
    }
    entries.push_back(std::move(row));
  }
  return Json{{"a", t.a()}, {"b", t.b()}, {"c", t.c()}, {"entries", std::move(entries)}};
}

inline TripleTensor tensor_from_json(const Json& j) {
  int a = j.at("a").get<int>();
  int b = j.at("b").get<int>();
  int c = j.at("c").get<int>();
  TripleTensor t(a, b, c);
  const Json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != a)
    throw std::invalid_argument("tensor JSON: wrong row count");
  for (int i = 0; i < a; ++i) {
    if (static_cast<int>(entries[i].size()) != b)
      throw std::invalid_argument("tensor JSON: wrong column count");
    for (int j2 = 0; j2 < b; ++j2) {
      if (static_cast<int>(entries[i][j2].size()) != c)
        throw std::invalid_argument("tensor JSON: wrong entry length");
      for (int k = 0; k < c; ++k)
        t.coeff(i, j2, k) = rat_parse(entries[i][j2][k].get<std::string>());
    }
  }
  return t;
}

inline Json poly_to_json(const Poly& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back(Json{{"exponents", m}, {"coeff", rat_to_string(c)}});
  return terms;
}

inline Poly poly_from_json(const Json& j, int nvars) {
  Poly f(nvars);
  for (const Json& term : j) {
    Monomial m = term.at("exponents").get<Monomial>();
    f.add_term(m, rat_parse(term.at("coeff").get<std::string>()));
  }
  return f;
}

inline std::string subset_key(const std::vector<int>& elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(elems[i]);
  }
  return out;
}

inline Json cocycle_to_json(const SyzygyCocycle& coc) {
  Json comps = Json::object();
  for (const auto& [key, f] : coc.components) comps[subset_key(key)] = poly_to_json(f);
  return Json{{"a", coc.a}, {"b", coc.b}, {"c", coc.c}, {"components", std::move(comps)}};
}

inline Json syzygy_to_json(const LastSyzygy& s) {
  Json out = Json::array();
  for (const Rat& q : s) out.push_back(rat_to_string(q));
  return out;
}

inline Json rat_vector_to_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const Rat& q : v) out.push_back(rat_to_string(q));
  return out;
}

inline Json matrix_to_json(const DenseMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json multivector_to_json(const MultiVector& v) {
  Json coords = Json::object();
  for (const auto& [key, c] : v.coords) coords[subset_key(key)] = rat_to_string(c);
  return Json{{"grade", v.grade}, {"ambient", v.ambient}, {"coords", std::move(coords)}};
}

// Comma-separated rationals, e.g. "1,1/2,-3".
inline std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rat_parse(item));
  return out;
}

}  // namespace syzkit
