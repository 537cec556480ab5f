#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bubblecross/bounds.hpp"
#include "bubblecross/drawing_recursion.hpp"
#include "bubblecross/errors.hpp"
#include "bubblecross/io/bounds_io.hpp"
#include "bubblecross/io/graph_io.hpp"
#include "bubblecross/io/mesh_io.hpp"
#include "bubblecross/io/trace_io.hpp"
#include "bubblecross/mesh.hpp"
#include "bubblecross/perm_graph.hpp"
#include "bubblecross/random.hpp"
#include "bubblecross/verify.hpp"

namespace bubblecross::cli {

enum class Command { graph, mesh, verify, bounds, trace };
enum class Format { dot, json, csv, svg };

// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Relative output paths resolve against this directory when it is set.
inline constexpr const char* kOutputDirEnv = "BUBBLECROSS_OUTPUT_DIR";

struct RunConfig {
  Command command = Command::graph;
  int n = 0;                        // graph: dimension; mesh: n; trace: target dimension
  int n_max = kDefaultBoundNMax;    // bounds
  std::optional<int> a;             // mesh split
  std::optional<std::vector<int>> permutation;  // mesh lost values
  std::uint64_t seed = kDefaultSeed;
  std::string output_path;          // empty: artifact goes to stdout
  std::optional<Format> format;
  bool bprime = false;              // graph: emit B'_n instead of B_n
  std::string suite;                // verify
  PolicyKind policy = PolicyKind::fixed;
  SeedSplit seed_split = SeedSplit::alternating;
  std::string resume_path;          // trace: start from a JSON snapshot
  int graph_max_n = GraphLimits{}.max_n;
};

inline const char* to_string(Format f) {
  switch (f) {
    case Format::dot:
      return "dot";
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    case Format::svg:
      return "svg";
  }
  return "?";
}

namespace detail {

inline Format require_format(const RunConfig& cfg, Format fallback, std::initializer_list<Format> allowed,
                             const char* command) {
  const Format f = cfg.format.value_or(fallback);
  for (Format ok : allowed)
    if (f == ok) return f;
  throw invalid_input(std::string("format '") + to_string(f) + "' is not valid for " + command);
}

inline std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
  }
  return p;
}

// Writes the artifact to cfg.output_path, or to `out` when no path is given.
inline void emit(const RunConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (cfg.output_path.empty()) {
    write(out);
    return;
  }
  const auto path = resolve_output(cfg.output_path);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw invalid_input("cannot write '" + path.string() + "'");
  write(file);
  file.flush();
  if (!file) throw invalid_input("write to '" + path.string() + "' failed");
  out << "wrote " << path.string() << "\n";
}

inline void write_json(std::ostream& os, const nlohmann::json& j) { os << j.dump(2) << "\n"; }

}  // namespace detail

inline int cmd_graph(const RunConfig& cfg, std::ostream& out) {
  const Format fmt = detail::require_format(cfg, Format::dot, {Format::dot, Format::json}, "graph");
  const GraphLimits limits{cfg.graph_max_n};
  const LabeledGraph g = cfg.bprime ? build_bprime(cfg.n, limits) : build_bn(cfg.n, limits);
  const std::string name = (cfg.bprime ? "Bprime_" : "B_") + std::to_string(cfg.n);
  detail::emit(cfg, out, [&](std::ostream& os) {
    if (fmt == Format::dot) {
      io::write_dot(os, g, name);
    } else {
      auto j = io::graph_to_json(g);
      j["graph"] = name;
      detail::write_json(os, j);
    }
  });
  if (!cfg.output_path.empty()) {
    out << name << ": " << g.vertices.size() << " vertices (" << g.core_vertex_count << " core), " << g.edges.size()
        << " edges\n";
  }
  return kExitPass;
}

inline int cmd_mesh(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.a || !cfg.permutation) throw invalid_input("mesh needs --a and --P");
  const MeshSpec spec = make_mesh(cfg.n, *cfg.a, *cfg.permutation);
  const auto formula = total_crossings(spec);
  const auto oracle = oracle_crossings(spec);
  out << "total_crossings " << formula << "\n";
  out << "oracle_crossings " << oracle << "\n";
  if (cfg.format) {
    const Format fmt = detail::require_format(cfg, Format::svg, {Format::svg, Format::json}, "mesh");
    detail::emit(cfg, out, [&](std::ostream& os) {
      if (fmt == Format::svg) {
        os << io::mesh_svg(spec);
      } else {
        detail::write_json(os, io::mesh_to_json(spec));
      }
    });
  }
  return formula == oracle ? kExitPass : kExitFailure;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto rep = verify::run_suite(cfg.suite, cfg.seed);
  out << "suite " << rep.suite << ": " << rep.cases << " cases\n";
  for (const auto& line : rep.lines) out << "  " << line << "\n";
  if (!rep.passed) {
    out << "FAIL: " << rep.counterexample << "\n";
    return kExitFailure;
  }
  out << "PASS\n";
  return kExitPass;
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const Format fmt = detail::require_format(cfg, Format::csv, {Format::csv, Format::json}, "bounds");
  const auto rows = bound_table(cfg.n_max);
  detail::emit(cfg, out, [&](std::ostream& os) {
    if (fmt == Format::csv) {
      io::write_bounds_csv(os, rows);
    } else {
      detail::write_json(os, io::bounds_to_json(rows));
    }
  });
  return kExitPass;
}

inline int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  const Format fmt = detail::require_format(cfg, Format::csv, {Format::csv, Format::json}, "trace");
  if (cfg.n < 7 || cfg.n > verify::kTraceMaxN) {
    throw dimension_out_of_range("trace target n=" + std::to_string(cfg.n) + " outside [7, " +
                                 std::to_string(verify::kTraceMaxN) + "]");
  }
  GenerationState g = seed_d6(cfg.seed_split);
  if (!cfg.resume_path.empty()) {
    std::ifstream in(detail::resolve_output(cfg.resume_path));
    if (!in) throw invalid_input("cannot read '" + cfg.resume_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw invalid_input(std::string("bad snapshot: ") + e.what());
    }
    g = io::generation_from_json(j.contains("generations") ? j.at("generations").back() : j);
    if (g.n < 6 || g.n > cfg.n) throw invalid_input("snapshot dimension does not precede the target");
    check_generation(g);
  }
  const auto policy = make_policy(cfg.policy, cfg.seed);
  std::vector<GenerationState> generations{g};
  while (generations.back().n < cfg.n) generations.push_back(step_generation(generations.back(), policy));

  detail::emit(cfg, out, [&](std::ostream& os) {
    if (fmt == Format::csv) {
      io::write_trace_csv(os, generations);
    } else {
      nlohmann::json j;
      j["policy"] = to_string(cfg.policy);
      j["seed"] = cfg.seed;
      auto& gens = j["generations"] = nlohmann::json::array();
      for (const auto& gen : generations) gens.push_back(io::generation_to_json(gen));
      detail::write_json(os, j);
    }
  });
  return kExitPass;
}

// Runs one command; artifacts and reports go to `out`, errors to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::graph:
        return cmd_graph(cfg, out);
      case Command::mesh:
        return cmd_mesh(cfg, out);
      case Command::verify:
        return cmd_verify(cfg, out);
      case Command::bounds:
        return cmd_bounds(cfg, out);
      case Command::trace:
        return cmd_trace(cfg, out);
    }
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const invariant_violation& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace bubblecross::cli
