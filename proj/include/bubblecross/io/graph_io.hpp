#pragma once

#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "bubblecross/perm_graph.hpp"

namespace bubblecross::io {

// Vertices and edges come out in rank order, which is lexicographic label order.
inline void write_dot(std::ostream& os, const LabeledGraph& g, const std::string& name) {
  os << "graph " << name << " {\n";
  os << "  // n=" << g.n << " vertices=" << g.vertices.size() << " edges=" << g.edges.size()
     << " core_vertices=" << g.core_vertex_count << "\n";
  for (VertexId r : g.vertices) os << "  \"" << Permutation::unrank(g.n, r).label() << "\";\n";
  for (const Edge& e : g.edges) {
    os << "  \"" << Permutation::unrank(g.n, e.u).label() << "\" -- \"" << Permutation::unrank(g.n, e.v).label()
       << "\";\n";
  }
  os << "}\n";
}

inline nlohmann::json graph_to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["core_vertex_count"] = g.core_vertex_count;
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (VertexId r : g.vertices) verts.push_back(Permutation::unrank(g.n, r).label());
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges) {
    edges.push_back({Permutation::unrank(g.n, e.u).label(), Permutation::unrank(g.n, e.v).label()});
  }
  return j;
}

}  // namespace bubblecross::io
