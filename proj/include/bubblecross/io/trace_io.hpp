#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bubblecross/drawing_recursion.hpp"
#include "bubblecross/io/csv.hpp"

namespace bubblecross::io {

inline void write_trace_csv(std::ostream& os, const std::vector<GenerationState>& generations) {
  os << csv_row({"n", "l", "r", "multiplicity"});
  for (const auto& g : generations) {
    for (const auto& [s, c] : g.counts) {
      os << csv_row({std::to_string(g.n), std::to_string(s.l), std::to_string(s.r), std::to_string(c)});
    }
  }
}

inline nlohmann::json generation_to_json(const GenerationState& g) {
  nlohmann::json j;
  j["n"] = g.n;
  auto& states = j["states"] = nlohmann::json::array();
  for (const auto& [s, c] : g.counts) states.push_back({{"l", s.l}, {"r", s.r}, {"multiplicity", c}});
  return j;
}

inline GenerationState generation_from_json(const nlohmann::json& j) {
  GenerationState g;
  try {
    g.n = j.at("n").get<int>();
    for (const auto& s : j.at("states")) {
      const VertexState v{s.at("l").get<int>(), s.at("r").get<int>()};
      g.counts[v] += s.at("multiplicity").get<std::uint64_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("malformed generation snapshot: ") + e.what());
  }
  return g;
}

}  // namespace bubblecross::io
