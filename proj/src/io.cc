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

#include "dyncc/io.h"

#include <charconv>
#include <sstream>

namespace dyncc {
namespace {

std::vector<std::string> Tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::uint64_t ParseId(const std::string& tok, int line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(ErrorCode::kParseError, line,
                     "expected an unsigned integer, got '" + tok + "'");
  return value;
}

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 0;
};

Fraction ParseFraction(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
    throw ParseError(ErrorCode::kParseError, 1,
                     "expected P/Q, got '" + text + "'");
  return {ParseId(text.substr(0, slash), 1), ParseId(text.substr(slash + 1), 1)};
}

const char* PruningName(PruningMode m) {
  switch (m) {
    case PruningMode::kCorrected:
      return "corrected";
    case PruningMode::kPaperStrict:
      return "paper-strict";
    case PruningMode::kSafe:
      return "safe";
  }
  return "?";
}

const char* MaintenanceName(MaintenanceMode m) {
  return m == MaintenanceMode::kFrontier ? "frontier" : "paper-strict";
}

const char* NeighborhoodName(NeighborhoodMode m) {
  return m == NeighborhoodMode::kOpen ? "open" : "closed";
}

}  // namespace

SignedGraph ParseGraph(const std::string& text) {
  SignedGraph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "vertices") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        VertexId v = ParseId(tokens[i], lineno);
        if (g.Contains(v))
          throw ParseError(ErrorCode::kParseError, lineno,
                           "duplicate vertex " + std::to_string(v));
        g.AddVertex(v);
      }
    } else if (tokens[0] == "edge+") {
      if (tokens.size() != 3)
        throw ParseError(ErrorCode::kParseError, lineno,
                         "edge+ takes exactly two vertex ids");
      VertexId u = ParseId(tokens[1], lineno);
      VertexId v = ParseId(tokens[2], lineno);
      if (u == v)
        throw ParseError(ErrorCode::kParseError, lineno,
                         "self loop at vertex " + std::to_string(u));
      if (!g.Contains(u) || !g.Contains(v))
        throw ParseError(ErrorCode::kUnknownVertex, lineno,
                         "undeclared vertex " +
                             std::to_string(g.Contains(u) ? v : u));
      if (g.IsPositiveEdge(u, v))
        throw ParseError(ErrorCode::kDuplicateEdge, lineno,
                         "duplicate edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "}");
      g.FlipEdge(u, v);
    } else {
      throw ParseError(ErrorCode::kParseError, lineno,
                       "unknown directive '" + tokens[0] + "'");
    }
  }
  return g;
}

std::vector<Operation> ParseOps(const std::string& text) {
  std::vector<Operation> ops;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "flip") {
      if (tokens.size() != 3)
        throw ParseError(ErrorCode::kParseError, lineno,
                         "flip takes exactly two vertex ids");
      VertexId u = ParseId(tokens[1], lineno);
      VertexId v = ParseId(tokens[2], lineno);
      if (u == v)
        throw ParseError(ErrorCode::kParseError, lineno,
                         "self loop at vertex " + std::to_string(u));
      ops.push_back(Operation::FlipSign(u, v));
    } else if (tokens[0] == "add" || tokens[0] == "del") {
      if (tokens.size() != 2)
        throw ParseError(ErrorCode::kParseError, lineno,
                         tokens[0] + " takes exactly one vertex id");
      VertexId v = ParseId(tokens[1], lineno);
      ops.push_back(tokens[0] == "add" ? Operation::AddVertex(v)
                                       : Operation::DeleteVertex(v));
    } else {
      throw ParseError(ErrorCode::kParseError, lineno,
                       "unknown operation '" + tokens[0] + "'");
    }
  }
  return ops;
}

std::string SerializeGraph(const SignedGraph& g) {
  std::ostringstream out;
  std::vector<VertexId> vs = g.Vertices();
  if (!vs.empty()) {
    out << "vertices";
    for (VertexId v : vs) out << ' ' << v;
    out << '\n';
  }
  for (const EdgeKey& e : g.PositiveEdges())
    out << "edge+ " << e.a << ' ' << e.b << '\n';
  return out.str();
}

std::string SerializeOps(const std::vector<Operation>& ops) {
  std::ostringstream out;
  for (const Operation& op : ops) {
    switch (op.kind) {
      case Operation::Kind::kFlipSign:
        out << "flip " << op.u << ' ' << op.v << '\n';
        break;
      case Operation::Kind::kAddVertex:
        out << "add " << op.u << '\n';
        break;
      case Operation::Kind::kDeleteVertex:
        out << "del " << op.u << '\n';
        break;
    }
  }
  return out.str();
}

Epsilon ParseEpsilon(const std::string& text) {
  Fraction f = ParseFraction(text);
  if (f.num < 1 || f.den < 1)
    throw ParseError(ErrorCode::kParseError, 1,
                     "epsilon requires P >= 1 and Q >= 1");
  return Epsilon(f.num, f.den);
}

Probability ParseProbability(const std::string& text) {
  Fraction f = ParseFraction(text);
  if (f.den < 1 || f.num > f.den)
    throw ParseError(ErrorCode::kParseError, 1,
                     "probability requires 0 <= P <= Q, Q >= 1");
  return Probability(f.num, f.den);
}

std::string FormatEpsilon(const Epsilon& eps) {
  return std::to_string(eps.num) + "/" + std::to_string(eps.den);
}

nlohmann::json ToJson(const Operation& op) {
  switch (op.kind) {
    case Operation::Kind::kFlipSign:
      return {{"kind", "flip"}, {"u", op.u}, {"v", op.v}};
    case Operation::Kind::kAddVertex:
      return {{"kind", "add"}, {"v", op.u}};
    case Operation::Kind::kDeleteVertex:
      return {{"kind", "del"}, {"v", op.u}};
  }
  return {};
}

nlohmann::json ToJson(const StepReport& r) {
  nlohmann::json j{{"t", r.t},
                   {"op", ToJson(r.op)},
                   {"status", r.applied ? "applied" : "rejected"},
                   {"na_evaluations", r.na_evaluations},
                   {"verify_calls", r.verify_calls},
                   {"s_size", r.s_size},
                   {"f_size", r.f_size},
                   {"cluster_count", r.cluster_count},
                   {"cost_total", r.cost_total},
                   {"elapsed_ns", r.elapsed_ns}};
  if (!r.applied) j["reason"] = r.reject_reason;
  if (r.baseline_match.has_value()) j["baseline_match"] = *r.baseline_match;
  return j;
}

nlohmann::json ToJson(const DivergenceWitness& w) {
  return {{"t", w.t},
          {"op", ToJson(w.op)},
          {"online", w.online},
          {"baseline", w.baseline},
          {"first_diff_pair", {w.diff_u, w.diff_v}}};
}

nlohmann::json ConfigJson(const EngineConfig& config) {
  return {{"epsilon", FormatEpsilon(config.eps)},
          {"pruning", PruningName(config.pruning)},
          {"maintenance", MaintenanceName(config.maintenance)},
          {"neighborhood", NeighborhoodName(config.neighborhood)}};
}

nlohmann::json ReportJson(const ExperimentReport& report,
                          const nlohmann::json& config_echo) {
  nlohmann::json steps = nlohmann::json::array();
  for (const StepReport& r : report.steps) steps.push_back(ToJson(r));
  nlohmann::json witnesses = nlohmann::json::array();
  for (const DivergenceWitness& w : report.witnesses)
    witnesses.push_back(ToJson(w));
  return {{"schema", "dyncc-report-v1"},
          {"config", config_echo},
          {"init",
           {{"vertices", report.initial_vertices},
            {"positive_edges", report.initial_edges},
            {"clusters", report.initial_clusters},
            {"cost", report.initial_cost}}},
          {"steps", std::move(steps)},
          {"totals",
           {{"applied", report.totals.applied},
            {"rejected", report.totals.rejected},
            {"na_evaluations", report.totals.na_evaluations},
            {"verify_calls", report.totals.verify_calls},
            {"mismatches", report.totals.mismatches},
            {"wall_ns", report.totals.wall_ns},
            {"diverged", report.diverged}}},
          {"witnesses", std::move(witnesses)}};
}

}  // namespace dyncc
