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

#ifndef DYNCC_IO_H_
#define DYNCC_IO_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "dyncc/engine.h"
#include "dyncc/harness.h"
#include "dyncc/signed_graph.h"

namespace dyncc {

// Graph text format, one directive per line ('#' starts a comment):
//   vertices <id> <id> ...     (repeatable)
//   edge+ <u> <v>              (declares a positive edge)
// Undeclared pairs are negative. Throws ParseError (kParseError /
// kUnknownVertex / kDuplicateEdge) with a 1-based line number.
SignedGraph ParseGraph(const std::string& text);

// Operation stream, one per line: "flip <u> <v>" | "add <v>" | "del <v>".
std::vector<Operation> ParseOps(const std::string& text);

// Canonical forms: one ascending `vertices` line (if any), then `edge+ u v`
// lines with u < v, ascending. Parse(Serialize(g)) == g, and serializing a
// parsed canonical file reproduces it byte-for-byte.
std::string SerializeGraph(const SignedGraph& g);
std::string SerializeOps(const std::vector<Operation>& ops);

// "P/Q" forms. Epsilon requires P,Q >= 1; probability allows P = 0, P <= Q.
Epsilon ParseEpsilon(const std::string& text);
Probability ParseProbability(const std::string& text);

std::string FormatEpsilon(const Epsilon& eps);

// JSON report pieces (schema "dyncc-report-v1").
nlohmann::json ToJson(const Operation& op);
nlohmann::json ToJson(const StepReport& r);
nlohmann::json ToJson(const DivergenceWitness& w);
nlohmann::json ConfigJson(const EngineConfig& config);
nlohmann::json ReportJson(const ExperimentReport& report,
                          const nlohmann::json& config_echo);

}  // namespace dyncc

#endif  // DYNCC_IO_H_
