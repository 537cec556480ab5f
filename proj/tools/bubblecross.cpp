#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bubblecross/commands.hpp"

using bubblecross::PolicyKind;
using bubblecross::SeedSplit;
using bubblecross::cli::Command;
using bubblecross::cli::Format;
using bubblecross::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Bubble-sort graph crossing toolkit: graphs, meshes, drawing recursion, bounds"};
  app.require_subcommand(1);

  RunConfig cfg;
  const std::map<std::string, Format> formats{
      {"dot", Format::dot}, {"json", Format::json}, {"csv", Format::csv}, {"svg", Format::svg}};
  const std::map<std::string, PolicyKind> policies{
      {"fixed", PolicyKind::fixed}, {"roundrobin", PolicyKind::round_robin}, {"random", PolicyKind::random}};
  const std::map<std::string, SeedSplit> splits{{"alternating", SeedSplit::alternating},
                                                {"fewer-left", SeedSplit::all_fewer_left},
                                                {"more-left", SeedSplit::all_more_left}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output_path, "Output file (default: stdout)");
  };

  auto* graph = app.add_subcommand("graph", "Export B_n or B'_n as DOT or JSON");
  graph->add_option("--n", cfg.n, "Dimension")->required();
  graph->add_flag("--bprime", cfg.bprime, "Emit B'_n (pattern class of 1<2<3) instead of B_n");
  graph->add_option("--max-n", cfg.graph_max_n, "Materialization guard")->capture_default_str();
  add_format(graph);
  add_output(graph);

  auto* mesh = app.add_subcommand("mesh", "Count crossings of a mesh by formula and by geometry");
  mesh->add_option("--n", cfg.n, "Number of anchors")->required();
  mesh->add_option("--a", cfg.a, "Number of left families")->required();
  mesh->add_option("--P", cfg.permutation, "Lost values, a permutation of 2..n-1")->required()->delimiter(',');
  add_format(mesh);
  add_output(mesh);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", cfg.suite, "pairs | sorting | maxima | replacement | symmetry | planarity")->required();
  verify->add_option("--seed", cfg.seed, "Seed for randomized cases")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Tabulate the exact crossing bound");
  bounds->add_option("--n-max", cfg.n_max, "Largest dimension")->capture_default_str();
  add_format(bounds);
  add_output(bounds);

  auto* trace = app.add_subcommand("trace", "Run the vertex-replacement state machine");
  trace->add_option("--to", cfg.n, "Target dimension (7..10)")->required();
  trace->add_option("--policy", cfg.policy, "Lost-side policy")->transform(CLI::CheckedTransformer(policies));
  trace->add_option("--seed", cfg.seed, "Seed for the random policy")->capture_default_str();
  trace->add_option("--seed-split", cfg.seed_split, "Base (l,r) split at n=6")
      ->transform(CLI::CheckedTransformer(splits));
  trace->add_option("--resume", cfg.resume_path, "Start from a JSON generation snapshot");
  add_format(trace);
  add_output(trace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bubblecross::cli::kExitUsage;
  }

  if (*graph) cfg.command = Command::graph;
  if (*mesh) cfg.command = Command::mesh;
  if (*verify) cfg.command = Command::verify;
  if (*bounds) cfg.command = Command::bounds;
  if (*trace) cfg.command = Command::trace;

  return bubblecross::cli::run(cfg, std::cout, std::cerr);
}
