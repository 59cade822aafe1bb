// Copyright 2026 The symbreak Authors
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

#ifndef SYMBREAK_EXACT_SEARCH_H_
#define SYMBREAK_EXACT_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/automorphism.h"
#include "symbreak/graph.h"

namespace symbreak {

enum class LabelingKind { kVertex, kEdge };

std::string_view LabelingKindName(LabelingKind kind);
// Accepts "vertex" / "edge". Throws parse-error.
LabelingKind ParseLabelingKind(std::string_view name);

struct SearchOptions {
  // Largest r tried before giving up with not-found.
  int max_labels = 12;
  // Budget: search nodes examined (0 = unlimited) and wall clock (0 =
  // unlimited). Both are recorded in the result.
  std::uint64_t max_labelings = 0;
  std::chrono::milliseconds time_limit{0};
  // Exhaustive sweeps split the labeling prefix space across this many
  // workers. The value and the witness do not depend on it.
  int threads = 1;
  std::uint64_t seed = 0x5eedu;
  int heuristic_attempts = 64;
  // Passed to EnumerateAutomorphisms.
  std::optional<std::uint64_t> group_cap = 5'000'000;
};

struct SearchResult {
  LabelingKind kind = LabelingKind::kVertex;
  // Absent when no number of labels can work (non-trivial edge kernel).
  std::optional<int> value;
  std::vector<int> witness;
  std::string none_reason;
  // Search nodes examined: partial and complete labelings, plus heuristic
  // candidates.
  std::uint64_t labelings_tested = 0;
  std::uint64_t automorphisms_checked = 0;
  std::uint64_t group_order = 0;
  // Every r for which all r-labelings were shown to fail.
  std::vector<int> failure_proofs;
  std::int64_t elapsed_ms = 0;
  std::uint64_t budget_labelings = 0;
  std::int64_t budget_ms = 0;
};

// Smallest r admitting a distinguishing vertex labeling, with a verified
// witness and an exhaustive failure proof for every smaller r. For each r a
// few heuristic labelings are tried before the exhaustive sweep.
// Errors: timeout (budget), not-found (max_labels), group-too-large.
SearchResult ExactDistinguishingNumber(const Graph& g,
                                       const SearchOptions& options = {});

// Edge analogue. Returns an empty value with reason "edge-kernel" when some
// non-identity automorphism fixes every edge. Edgeless graphs are rejected.
SearchResult ExactDistinguishingIndex(const Graph& g,
                                      const SearchOptions& options = {});

struct ClaimReport {
  LabelingKind kind = LabelingKind::kVertex;
  int claimed = 0;
  // The witness verifies, so the true value is <= claimed.
  bool upper_bound_certified = false;
  // No labeling with claimed-1 labels works (exhaustive, within budget).
  bool lower_bound_certified = false;
  std::string detail;
  std::uint64_t labelings_tested = 0;
};

// One-sided certification of a claimed value. Throws invalid-witness if the
// witness is not distinguishing and invalid-parameter if it uses labels
// outside 1..claimed.
ClaimReport VerifyClaimedValue(const Graph& g, LabelingKind kind, int claimed,
                               std::span<const int> witness,
                               const SearchOptions& options = {});

}  // namespace symbreak

#endif  // SYMBREAK_EXACT_SEARCH_H_
