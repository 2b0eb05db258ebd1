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

#ifndef DYNCC_TYPES_H_
#define DYNCC_TYPES_H_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dyncc {

using VertexId = std::uint64_t;
using ClusterId = std::uint64_t;

enum class EdgeSign { kPositive, kNegative };

// Neighborhood convention used by the agreement measure. Open (the default)
// excludes the vertex itself; closed includes it. All incremental shortcuts
// assume open neighborhoods, so a closed-mode engine falls back to the safe
// recompute path.
enum class NeighborhoodMode { kOpen, kClosed };

// How aggressively a flip update skips re-evaluating incident edges.
//  kCorrected   - skip rules plus one extra re-check that the skip rules alone
//                 would miss (a non-agreeing edge whose measure strictly drops
//                 when an endpoint loses a positive edge).
//  kPaperStrict - skip rules exactly as published; known to drift on some
//                 inputs (kept for divergence experiments).
//  kSafe        - no skipping: re-evaluate every positive edge at u or v.
enum class PruningMode { kCorrected, kPaperStrict, kSafe };

// Which vertices cluster maintenance re-examines after a flip.
//  kFrontier    - the locality region plus outside vertices whose incident
//                 sparsified edges changed presence (sound).
//  kPaperStrict - the locality region only; known to drift on some inputs
//                 (kept for divergence experiments).
enum class MaintenanceMode { kFrontier, kPaperStrict };

enum class ErrorCode {
  kDuplicateVertex,
  kVertexNotFound,
  kHasPositiveEdges,
  kSelfLoop,
  kNotPositiveAdjacent,
  kEdgeNotPositive,
  kEdgeNotNegative,
  kNotAPartition,
  kNotASingleton,
  kUnprocessedCluster,
  kTooLarge,
  kParseError,
  kUnknownVertex,
  kDuplicateEdge,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure for the text graph/ops formats; carries a 1-based line number.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Agreement threshold num/den. Exact; all comparisons cross-multiply.
// num >= 1 and den >= 1 (values above 1 are allowed and meaningful).
struct Epsilon {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  Epsilon() = default;
  Epsilon(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (n < 1 || d < 1) throw std::invalid_argument("epsilon must be >= 1/den");
  }
  friend bool operator==(const Epsilon&, const Epsilon&) = default;
};

// An exact non-negative rational, e.g. a non-agreement value.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend auto operator<=>(const Ratio& a, const Ratio& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

inline bool RatioLess(const Ratio& r, const Epsilon& eps) {
  return r.num * eps.den < eps.num * r.den;
}

// Undirected edge key, normalized so a < b.
struct EdgeKey {
  VertexId a = 0;
  VertexId b = 0;

  EdgeKey() = default;
  EdgeKey(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

}  // namespace dyncc

#endif  // DYNCC_TYPES_H_
