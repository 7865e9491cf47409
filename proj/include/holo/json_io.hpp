#pragma once

// JSON schemas for the structure-constant and Seifert-invariant inputs.
// Kept separate so the core headers stay free of the JSON dependency.

#include <json.hpp>

#include "holo/fdlie.hpp"
#include "holo/seifert.hpp"

namespace holo {

using json = nlohmann::ordered_json;

/// {"dim": n, "brackets": [[i, j, [[k, "p/q"], ...]], ...]} with 1-based
/// indices; each entry sets [e_i, e_j] (and its opposite).
inline StructureConstants structure_constants_from_json(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw std::invalid_argument("structure constants: missing integer field 'dim'");
  int n = j["dim"].get<int>();
  if (n < 1 || n > 64) throw std::invalid_argument("structure constants: dim out of range");
  StructureConstants sc(n);
  for (const json& entry : j.value("brackets", json::array())) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::invalid_argument("structure constants: each bracket is [i, j, terms]");
    int i = entry[0].get<int>(), jj = entry[1].get<int>();
    if (i < 1 || i > n || jj < 1 || jj > n || i == jj)
      throw std::invalid_argument("structure constants: bad basis indices");
    for (const json& term : entry[2]) {
      int k = term[0].get<int>();
      if (k < 1 || k > n) throw std::invalid_argument("structure constants: bad target index");
      Q v = term[1].is_string() ? q_parse(term[1].get<std::string>())
                                : Q(term[1].get<long>());
      sc.set_bracket(i - 1, jj - 1, k - 1, v);
    }
  }
  return sc;
}

inline json structure_constants_to_json(const StructureConstants& sc) {
  json brackets = json::array();
  for (int i = 0; i < sc.dim; ++i)
    for (int j = i + 1; j < sc.dim; ++j) {
      json terms = json::array();
      for (int k = 0; k < sc.dim; ++k)
        if (sc.c[i][j][k] != 0) terms.push_back({k + 1, q_str(sc.c[i][j][k])});
      if (!terms.empty()) brackets.push_back({i + 1, j + 1, terms});
    }
  return json{{"dim", sc.dim}, {"brackets", brackets}};
}

/// {"genus": g, "b": b, "fibers": [[alpha, beta], ...]}
inline SeifertInvariants seifert_from_json(const json& j) {
  SeifertInvariants s;
  if (!j.contains("genus") || !j.contains("b"))
    throw std::invalid_argument("seifert invariants: need fields 'genus' and 'b'");
  s.genus = j["genus"].get<long>();
  s.b = j["b"].get<long>();
  for (const json& f : j.value("fibers", json::array())) {
    if (!f.is_array() || f.size() != 2)
      throw std::invalid_argument("seifert invariants: each fiber is [alpha, beta]");
    s.fibers.emplace_back(f[0].get<long>(), f[1].get<long>());
  }
  s.check();
  return s;
}

}  // namespace holo
