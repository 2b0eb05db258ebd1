// Copyright 2026 The dyncc Authors
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

// Command-line front end: `run` replays an operation stream against the
// online engine (optionally checking each step against the from-scratch
// clusterer), `gen` emits a reproducible planted instance + stream, and
// `bench` races the engine against per-step recomputation.
//
// Exit codes: 0 success; 1 divergence under --check --strict; 2 bad input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyncc/baseline.h"
#include "dyncc/harness.h"
#include "dyncc/io.h"

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

struct ModeFlags {
  std::string pruning = "corrected";
  std::string maintenance = "frontier";
  std::string neighborhood = "open";

  void Register(CLI::App* cmd) {
    cmd->add_option("--pruning", pruning, "corrected|paper-strict|safe")
        ->check(CLI::IsMember({"corrected", "paper-strict", "safe"}));
    cmd->add_option("--maintenance", maintenance, "frontier|paper-strict")
        ->check(CLI::IsMember({"frontier", "paper-strict"}));
    cmd->add_option("--neighborhood", neighborhood, "open|closed")
        ->check(CLI::IsMember({"open", "closed"}));
  }

  dyncc::EngineConfig ToConfig(const dyncc::Epsilon& eps) const {
    dyncc::EngineConfig config;
    config.eps = eps;
    config.pruning = pruning == "corrected" ? dyncc::PruningMode::kCorrected
                     : pruning == "safe"    ? dyncc::PruningMode::kSafe
                                            : dyncc::PruningMode::kPaperStrict;
    config.maintenance = maintenance == "frontier"
                             ? dyncc::MaintenanceMode::kFrontier
                             : dyncc::MaintenanceMode::kPaperStrict;
    config.neighborhood = neighborhood == "open"
                              ? dyncc::NeighborhoodMode::kOpen
                              : dyncc::NeighborhoodMode::kClosed;
    return config;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online correlation clustering on complete signed graphs"};
  app.require_subcommand(1);

  // --- run ---------------------------------------------------------------
  auto* run = app.add_subcommand("run", "replay an operation stream");
  std::string run_graph, run_ops, run_eps, run_report;
  bool run_check = false, run_strict = false;
  std::uint64_t run_seed = 0;
  ModeFlags run_modes;
  run->add_option("--graph", run_graph, "graph file")->required();
  run->add_option("--ops", run_ops, "operation stream file")->required();
  run->add_option("--epsilon", run_eps, "threshold P/Q")->required();
  run_modes.Register(run);
  run->add_flag("--check", run_check,
                "compare every step with the from-scratch clusterer");
  run->add_flag("--strict", run_strict, "exit 1 on any divergence (with --check)");
  run->add_option("--report", run_report, "write a JSON report here");
  run->add_option("--seed", run_seed, "provenance seed echoed into the report");

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate an instance + stream");
  dyncc::GeneratorParams params;
  std::string gen_p = "1/2", gen_q = "1/10";
  std::string out_graph = "graph.txt", out_ops = "ops.txt";
  gen->add_option("--n", params.n, "vertex count")->required();
  gen->add_option("--k", params.k, "planted group count")->required();
  gen->add_option("--p", gen_p, "in-group positive probability P/Q");
  gen->add_option("--q", gen_q, "cross-group positive probability P/Q");
  gen->add_option("--ops", params.op_count, "operation count")->required();
  gen->add_option("--seed", params.seed, "generator seed")->required();
  gen->add_option("--out-graph", out_graph, "graph output path");
  gen->add_option("--out-ops", out_ops, "ops output path");

  // --- bench -------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "online engine vs per-step recompute");
  std::string bench_graph, bench_ops, bench_eps, bench_report;
  ModeFlags bench_modes;
  bench->add_option("--graph", bench_graph, "graph file")->required();
  bench->add_option("--ops", bench_ops, "operation stream file")->required();
  bench->add_option("--epsilon", bench_eps, "threshold P/Q")->required();
  bench_modes.Register(bench);
  bench->add_option("--report", bench_report, "write a JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      dyncc::SignedGraph g0 = dyncc::ParseGraph(ReadFile(run_graph));
      std::vector<dyncc::Operation> ops = dyncc::ParseOps(ReadFile(run_ops));
      dyncc::EngineConfig config =
          run_modes.ToConfig(dyncc::ParseEpsilon(run_eps));

      dyncc::ExperimentReport report =
          dyncc::DriveOps(g0, ops, config, run_check);

      std::cout << "steps " << report.steps.size() << "  applied "
                << report.totals.applied << "  rejected "
                << report.totals.rejected << "\n";
      if (!report.steps.empty()) {
        const dyncc::StepReport& last = report.steps.back();
        std::cout << "final clusters " << last.cluster_count << "  cost "
                  << last.cost_total << "\n";
      }
      if (run_check)
        std::cout << "mismatches " << report.totals.mismatches << "\n";

      if (!run_report.empty()) {
        nlohmann::json config_echo = dyncc::ConfigJson(config);
        config_echo["seed"] = run_seed;
        config_echo["check"] = run_check;
        config_echo["strict"] = run_strict;
        WriteFile(run_report,
                  dyncc::ReportJson(report, config_echo).dump(2) + "\n");
      }
      if (run_check && run_strict && report.diverged) return 1;
      return 0;
    }

    if (*gen) {
      params.p = dyncc::ParseProbability(gen_p);
      params.q = dyncc::ParseProbability(gen_q);
      dyncc::SignedGraph g0 = dyncc::GenPlanted(params);
      std::vector<dyncc::Operation> ops = dyncc::GenOps(params, g0);
      WriteFile(out_graph, dyncc::SerializeGraph(g0));
      WriteFile(out_ops, dyncc::SerializeOps(ops));
      std::cout << "wrote " << out_graph << " (" << g0.NumVertices()
                << " vertices, " << g0.NumPositiveEdges()
                << " positive edges) and " << out_ops << " (" << ops.size()
                << " ops)\n";
      return 0;
    }

    // bench
    dyncc::SignedGraph g0 = dyncc::ParseGraph(ReadFile(bench_graph));
    std::vector<dyncc::Operation> ops = dyncc::ParseOps(ReadFile(bench_ops));
    dyncc::EngineConfig config =
        bench_modes.ToConfig(dyncc::ParseEpsilon(bench_eps));

    dyncc::Engine engine(g0, config);
    nlohmann::json steps = nlohmann::json::array();
    std::uint64_t online_na_total = 0, baseline_na_total = 0;
    std::int64_t online_ns_total = 0, baseline_ns_total = 0;
    for (const dyncc::Operation& op : ops) {
      dyncc::StepReport r = engine.Apply(op);
      dyncc::SignedGraph g = engine.GraphSnapshot();
      auto t0 = std::chrono::steady_clock::now();
      dyncc::Clustering base =
          dyncc::CorrelationClustering(g, config.eps, config.neighborhood);
      auto t1 = std::chrono::steady_clock::now();
      (void)base;
      std::uint64_t baseline_na = g.NumPositiveEdges();
      std::int64_t baseline_ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
              .count();
      online_na_total += r.na_evaluations;
      baseline_na_total += baseline_na;
      online_ns_total += r.elapsed_ns;
      baseline_ns_total += baseline_ns;
      steps.push_back({{"t", r.t},
                       {"op", dyncc::ToJson(op)},
                       {"online_na", r.na_evaluations},
                       {"baseline_na", baseline_na},
                       {"online_ns", r.elapsed_ns},
                       {"baseline_ns", baseline_ns}});
    }
    std::cout << "steps " << ops.size() << "\n"
              << "online:   " << online_na_total << " evaluations, "
              << online_ns_total / 1000000.0 << " ms\n"
              << "baseline: " << baseline_na_total << " evaluations, "
              << baseline_ns_total / 1000000.0 << " ms\n";
    if (!bench_report.empty()) {
      nlohmann::json j{{"schema", "dyncc-report-v1"},
                       {"config", dyncc::ConfigJson(config)},
                       {"steps", std::move(steps)},
                       {"totals",
                        {{"online_na", online_na_total},
                         {"baseline_na", baseline_na_total},
                         {"online_ns", online_ns_total},
                         {"baseline_ns", baseline_ns_total}}}};
      WriteFile(bench_report, j.dump(2) + "\n");
    }
    return 0;
  } catch (const dyncc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
