// Copyright 2026 The mcqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCQAOA_JSON_IO_HPP
#define MCQAOA_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mcqaoa/ir.hpp"
#include "mcqaoa/validate.hpp"

namespace mcqaoa {

using json = nlohmann::json;

inline const char* polarity_symbol(Polarity p) {
  switch (p) {
    case Polarity::PositiveOn1: return "+";
    case Polarity::NegativeOn0: return "-";
    case Polarity::PositiveOn2: return "2";
  }
  return "?";
}

inline Polarity parse_polarity(const std::string& s) {
  if (s == "+") return Polarity::PositiveOn1;
  if (s == "-") return Polarity::NegativeOn0;
  if (s == "2") return Polarity::PositiveOn2;
  throw Error(ErrorCode::kInvalidArgument, "unknown control polarity '" + s + "'");
}

inline json gate_to_json(const Gate& g) {
  json j;
  switch (g.kind) {
    case GateKind::SingleQudit:
      j["kind"] = "single";
      j["name"] = single_op_name(g.op);
      if (is_rotation(g.op)) j["angle"] = g.angle;
      j["targets"] = g.targets;
      return j;
    case GateKind::MultiControlledX: j["kind"] = "mcx"; break;
    case GateKind::MultiControlledRx:
      j["kind"] = "mcrx";
      j["angle"] = g.angle;
      break;
  }
  json cs = json::array();
  for (const auto& c : g.controls) cs.push_back(json::array({c.line, polarity_symbol(c.polarity)}));
  j["controls"] = cs;
  j["targets"] = g.targets;
  if (g.relative_phase_ok) j["phase"] = "relative";
  return j;
}

inline Gate gate_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  Gate g;
  if (kind == "single") {
    g.kind = GateKind::SingleQudit;
    auto op = parse_single_op(j.at("name").get<std::string>());
    if (!op) throw Error(ErrorCode::kInvalidArgument, "unknown single-qudit gate name");
    g.op = *op;
    if (is_rotation(g.op)) g.angle = j.at("angle").get<double>();
  } else if (kind == "mcx") {
    g.kind = GateKind::MultiControlledX;
  } else if (kind == "mcrx") {
    g.kind = GateKind::MultiControlledRx;
    g.angle = j.at("angle").get<double>();
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown gate kind '" + kind + "'");
  }
  if (j.contains("controls")) {
    for (const auto& c : j.at("controls")) {
      g.controls.push_back({c.at(0).get<int>(), parse_polarity(c.at(1).get<std::string>())});
    }
  }
  g.targets = j.at("targets").get<std::vector<int>>();
  g.relative_phase_ok = j.value("phase", std::string()) == "relative";
  return g;
}

inline json circuit_to_json(const Circuit& c) {
  json j;
  j["dim"] = c.dim();
  j["width"] = c.width();
  json anc = json::array();
  for (const auto& a : c.ancilla()) anc.push_back({{"line", a.line}, {"regime", regime_name(a.regime)}});
  j["ancilla"] = anc;
  json gates = json::array();
  for (const auto& g : c.gates()) gates.push_back(gate_to_json(g));
  j["gates"] = gates;
  return j;
}

// Throws Error on malformed input or an invalid circuit.
inline Circuit circuit_from_json(const json& j) {
  Circuit c(j.at("width").get<int>(), j.value("dim", 2));
  if (j.contains("ancilla")) {
    for (const auto& a : j.at("ancilla")) {
      auto r = parse_regime(a.at("regime").get<std::string>());
      if (!r) throw Error(ErrorCode::kInvalidArgument, "unknown ancilla regime");
      c.add_ancilla(a.at("line").get<int>(), *r);
    }
  }
  for (const auto& g : j.at("gates")) c.append(gate_from_json(g));
  require_valid(c);
  return c;
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return {{"nodes", g.node_count()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(j.at("nodes").get<int>(), edges);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, path + ": " + e.what());
  }
}

}  // namespace mcqaoa

#endif  // MCQAOA_JSON_IO_HPP
