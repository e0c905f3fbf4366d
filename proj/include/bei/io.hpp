#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bei/common.hpp"
#include "bei/constructions.hpp"
#include "bei/expr.hpp"
#include "bei/graph.hpp"
#include "bei/hilbert.hpp"
#include "bei/oracles.hpp"
#include "bei/primes.hpp"
#include "bei/rules.hpp"

// JSON surfaces: graphs as {"n": .., "edges": [[u, v], ..]} with 1-based
// labels, reduced series as {"Q": [..], "d": ..}, certificates, prime
// components and check reports. Integers that fit in 64 bits are emitted
// as numbers, anything larger as a decimal string.

namespace bei {

inline nlohmann::json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw error("graph JSON must be an object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw error("graph JSON: \"n\" must be an integer");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw error("graph JSON: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n, edges);  // rejects loops and out-of-range labels
}

inline Graph read_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return graph_from_json(j);
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}};
}

inline nlohmann::json series_to_json(const ReducedSeries& r) {
  nlohmann::json q = nlohmann::json::array();
  for (const auto& c : r.q.coeffs()) q.push_back(int_to_json(c));
  return {{"Q", q}, {"d", r.d}};
}

inline nlohmann::json reg_certificate_to_json(const RegCertificate& cert) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : cert.steps)
    steps.push_back({{"node", s.node},
                     {"rule", s.rule},
                     {"detail", s.detail},
                     {"inputs", s.inputs},
                     {"value", s.value}});
  return {{"value", cert.reg}, {"steps", steps}};
}

inline nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& step : cert.chain)
    chain.push_back({{"delete", step.vertex}, {"fcdeg", step.fcdeg}});
  return {{"expr", expr_str(cert.expr)},
          {"reg", reg_certificate_to_json(cert.reg)},
          {"ei",
           {{"i", cert.i},
            {"s", cert.s},
            {"chain", chain},
            {"base", expr_str(cert.base)}}},
          {"method", cert.method},
          {"verified", cert.verified}};
}

inline nlohmann::json prime_component_to_json(const PrimeComponent& p) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : p.components) comps.push_back(c.to_list());
  return {{"T", p.t.to_list()}, {"components", comps}, {"height", p.height}};
}

inline nlohmann::json check_report_to_json(const CheckReport& r) {
  nlohmann::json j = {{"name", r.name},
                      {"inputs", r.inputs},
                      {"applicable", r.applicable},
                      {"pass", r.pass}};
  if (!r.lhs.empty() || !r.rhs.empty()) {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace bei
