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

#include "symbreak/exact_search.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "symbreak/error.h"

namespace symbreak {
namespace {

using Clock = std::chrono::steady_clock;

// A non-identity permutation of the labeled points (vertices or edges).
struct PointPerm {
  std::vector<int> image;
  std::vector<int> moved;  // increasing
  int support_max = -1;
};

// The group acting on the points being labeled, minus the identity.
struct PointAction {
  int points = 0;
  std::vector<PointPerm> perms;
};

PointAction VertexAction(const AutGroup& group) {
  PointAction action;
  action.points = group.degree();
  for (const Permutation& p : group.elements()) {
    if (p.IsIdentity()) continue;
    PointPerm pp;
    pp.image.assign(p.image().begin(), p.image().end());
    pp.moved = p.MovedPoints();
    pp.support_max = pp.moved.back();
    action.perms.push_back(std::move(pp));
  }
  return action;
}

PointAction EdgeAction(const Graph& g, const AutGroup& group) {
  PointAction action;
  action.points = g.edge_count();
  for (const Permutation& p : group.elements()) {
    if (p.IsIdentity()) continue;
    PointPerm pp;
    pp.image = InducedEdgePermutation(g, p);
    for (int e = 0; e < action.points; ++e) {
      if (pp.image[e] != e) pp.moved.push_back(e);
    }
    // Edge-kernel elements are handled before any sweep.
    if (pp.moved.empty()) continue;
    pp.support_max = pp.moved.back();
    action.perms.push_back(std::move(pp));
  }
  return action;
}

bool Preserves(const PointPerm& p, std::span<const int> labels) {
  for (int x : p.moved) {
    if (labels[x] != labels[p.image[x]]) return false;
  }
  return true;
}

// Shared budget and counters for one search call.
class Budget {
 public:
  explicit Budget(const SearchOptions& options)
      : max_nodes_(options.max_labelings),
        limit_(options.time_limit),
        start_(Clock::now()) {}

  // Adds to the node count; returns false once the budget is exhausted.
  bool Charge(std::uint64_t nodes, std::uint64_t checks) {
    const std::uint64_t total = nodes_.fetch_add(nodes) + nodes;
    checks_.fetch_add(checks);
    if (max_nodes_ != 0 && total > max_nodes_) exhausted_ = true;
    if (limit_.count() > 0 && Clock::now() - start_ > limit_) {
      exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t checks() const { return checks_; }
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start_)
        .count();
  }

 private:
  const std::uint64_t max_nodes_;
  const std::chrono::milliseconds limit_;
  const Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> checks_{0};
  std::atomic<bool> exhausted_{false};
};

enum class SweepOutcome { kFound, kExhausted, kBudget };

// Exhaustive depth-first sweep over all r-labelings of the points, in
// lexicographic order. Two prunings, both sound:
//  * a prefix is dropped when a non-identity element whose support lies in
//    the prefix preserves it (every completion is preserved too);
//  * a prefix is dropped when some element g of a small-support subset with
//    support in the prefix makes the labeling lexicographically smaller
//    (the orbit's lexicographic leader is visited instead; being
//    distinguishing is an orbit invariant).
class Sweep {
 public:
  Sweep(const PointAction& action, int r, Budget& budget)
      : action_(action), r_(r), budget_(budget) {
    const int n = action.points;
    preserve_bucket_.resize(n);
    leader_bucket_.resize(n);
    std::vector<int> by_support(action.perms.size());
    std::iota(by_support.begin(), by_support.end(), 0);
    std::stable_sort(by_support.begin(), by_support.end(), [&](int a, int b) {
      return action.perms[a].moved.size() < action.perms[b].moved.size();
    });
    for (int idx : by_support) {
      preserve_bucket_[action.perms[idx].support_max].push_back(idx);
    }
    const size_t leaders =
        std::min(by_support.size(), static_cast<size_t>(8 * n + 8));
    for (size_t i = 0; i < leaders; ++i) {
      const int idx = by_support[i];
      leader_bucket_[action.perms[idx].support_max].push_back(idx);
    }
  }

  SweepOutcome Run(int threads, std::vector<int>& witness) {
    const int n = action_.points;
    if (n == 0) {
      witness.clear();
      return action_.perms.empty() ? SweepOutcome::kFound
                                   : SweepOutcome::kExhausted;
    }
    int depth = 0;
    std::uint64_t tasks = 1;
    if (threads > 1) {
      while (depth < n && tasks < static_cast<std::uint64_t>(8 * threads)) {
        ++depth;
        tasks *= static_cast<std::uint64_t>(r_);
      }
    }
    std::atomic<std::uint64_t> next_task{0};
    std::atomic<std::uint64_t> best_task{std::numeric_limits<std::uint64_t>::max()};
    std::mutex mu;
    std::vector<int> best_witness;

    auto worker = [&]() {
      Worker w(*this);
      for (;;) {
        const std::uint64_t t = next_task.fetch_add(1);
        if (t >= tasks || t > best_task.load() || budget_.exhausted()) break;
        std::vector<int> prefix(depth);
        std::uint64_t rest = t;
        for (int d = depth - 1; d >= 0; --d) {
          prefix[d] = static_cast<int>(rest % r_) + 1;
          rest /= r_;
        }
        if (w.Solve(prefix)) {
          std::lock_guard<std::mutex> lock(mu);
          if (t < best_task.load()) {
            best_task = t;
            best_witness = w.labels();
          }
        }
        w.Flush();
      }
      w.Flush();
    };

    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (best_task.load() != std::numeric_limits<std::uint64_t>::max()) {
      // Tasks before the winner were all completed, so this is the
      // lexicographically first witness regardless of scheduling.
      witness = std::move(best_witness);
      return SweepOutcome::kFound;
    }
    return budget_.exhausted() ? SweepOutcome::kBudget
                               : SweepOutcome::kExhausted;
  }

 private:
  class Worker {
   public:
    explicit Worker(const Sweep& sweep)
        : sweep_(sweep), labels_(sweep.action_.points, 0) {}

    bool Solve(const std::vector<int>& prefix) {
      prefix_ = &prefix;
      return Dfs(0);
    }

    const std::vector<int>& labels() const { return labels_; }

    void Flush() {
      sweep_.budget_.Charge(nodes_, checks_);
      nodes_ = checks_ = 0;
    }

   private:
    bool Dfs(int depth) {
      const int n = sweep_.action_.points;
      const bool forced = depth < static_cast<int>(prefix_->size());
      const int lo = forced ? (*prefix_)[depth] : 1;
      const int hi = forced ? (*prefix_)[depth] : sweep_.r_;
      for (int label = lo; label <= hi; ++label) {
        labels_[depth] = label;
        if (++nodes_ >= 4096) {
          const bool ok = sweep_.budget_.Charge(nodes_, checks_);
          nodes_ = checks_ = 0;
          if (!ok) return false;
        } else if (sweep_.budget_.exhausted()) {
          return false;
        }
        if (Pruned(depth)) continue;
        if (depth + 1 == n) return true;
        if (Dfs(depth + 1)) return true;
        if (sweep_.budget_.exhausted()) return false;
      }
      return false;
    }

    bool Pruned(int depth) {
      const auto& perms = sweep_.action_.perms;
      for (int idx : sweep_.leader_bucket_[depth]) {
        const PointPerm& p = perms[idx];
        for (int x : p.moved) {
          const int mine = labels_[x];
          const int theirs = labels_[p.image[x]];
          if (mine != theirs) {
            if (theirs < mine) return true;
            break;
          }
        }
      }
      for (int idx : sweep_.preserve_bucket_[depth]) {
        ++checks_;
        if (Preserves(perms[idx], labels_)) return true;
      }
      return false;
    }

    const Sweep& sweep_;
    std::vector<int> labels_;
    const std::vector<int>* prefix_ = nullptr;
    std::uint64_t nodes_ = 0;
    std::uint64_t checks_ = 0;
  };

  const PointAction& action_;
  const int r_;
  Budget& budget_;
  std::vector<std::vector<int>> preserve_bucket_;
  std::vector<std::vector<int>> leader_bucket_;
};

// Orbits of the points under the action, as a point -> orbit position map.
std::vector<int> OrbitPositions(const PointAction& action) {
  std::vector<int> parent(action.points);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const PointPerm& p : action.perms) {
    for (int x : p.moved) {
      int a = find(x), b = find(p.image[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> seen(action.points, 0);
  std::vector<int> position(action.points);
  for (int x = 0; x < action.points; ++x) position[x] = seen[find(x)]++;
  return position;
}

bool DistinguishesAll(const PointAction& action, std::span<const int> labels,
                      std::uint64_t& checks) {
  for (const PointPerm& p : action.perms) {
    ++checks;
    if (Preserves(p, labels)) return false;
  }
  return true;
}

// Cheap candidates tried before the exhaustive sweep: the orbit-separating
// labeling (position within orbit, cycled through 1..r) and seeded random
// labelings.
std::optional<std::vector<int>> TryHeuristics(const PointAction& action, int r,
                                              const SearchOptions& options,
                                              Budget& budget) {
  std::uint64_t checks = 0;
  std::uint64_t tried = 0;
  std::optional<std::vector<int>> found;
  const std::vector<int> position = OrbitPositions(action);
  std::vector<int> labels(action.points);
  for (int x = 0; x < action.points; ++x) labels[x] = position[x] % r + 1;
  ++tried;
  if (DistinguishesAll(action, labels, checks)) found = labels;

  std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(r));
  std::uniform_int_distribution<int> pick(1, r);
  for (int attempt = 0; !found && attempt < options.heuristic_attempts;
       ++attempt) {
    for (int& l : labels) l = pick(rng);
    ++tried;
    if (DistinguishesAll(action, labels, checks)) found = labels;
  }
  budget.Charge(tried, checks);
  return found;
}

SearchResult RunSearch(const PointAction& action, LabelingKind kind,
                       std::uint64_t group_order, const SearchOptions& options,
                       Budget& budget) {
  SearchResult result;
  result.kind = kind;
  result.group_order = group_order;
  result.budget_labelings = options.max_labelings;
  result.budget_ms = options.time_limit.count();
  auto finish = [&]() {
    result.labelings_tested = budget.nodes();
    result.automorphisms_checked = budget.checks();
    result.elapsed_ms = budget.elapsed_ms();
  };

  for (int r = 1; r <= options.max_labels; ++r) {
    if (std::optional<std::vector<int>> w =
            TryHeuristics(action, r, options, budget)) {
      result.value = r;
      result.witness = std::move(*w);
      finish();
      return result;
    }
    std::vector<int> witness;
    Sweep sweep(action, r, budget);
    switch (sweep.Run(std::max(1, options.threads), witness)) {
      case SweepOutcome::kFound:
        result.value = r;
        result.witness = std::move(witness);
        finish();
        return result;
      case SweepOutcome::kExhausted:
        result.failure_proofs.push_back(r);
        break;
      case SweepOutcome::kBudget:
        throw SearchTimeoutError(r, std::nullopt);
    }
  }
  throw Error(ErrorCode::kNotFound,
              "no distinguishing " + std::string(LabelingKindName(kind)) +
                  " labeling with at most " +
                  std::to_string(options.max_labels) + " labels");
}

}  // namespace

std::string_view LabelingKindName(LabelingKind kind) {
  return kind == LabelingKind::kVertex ? "vertex" : "edge";
}

LabelingKind ParseLabelingKind(std::string_view name) {
  if (name == "vertex") return LabelingKind::kVertex;
  if (name == "edge") return LabelingKind::kEdge;
  throw Error(ErrorCode::kParse, "unknown labeling kind '" +
                                     std::string(name) +
                                     "' (expected vertex or edge)");
}

SearchResult ExactDistinguishingNumber(const Graph& g,
                                       const SearchOptions& options) {
  if (g.vertex_count() < 1) ThrowInvalidParameter("empty graph");
  Budget budget(options);
  const AutGroup group = EnumerateAutomorphisms(g, options.group_cap);
  SearchResult result = RunSearch(VertexAction(group), LabelingKind::kVertex,
                                  group.order(), options, budget);
  if (!IsVertexDistinguishing(g, EnumerateAutomorphisms(g, options.group_cap),
                              VertexLabeling(result.witness))) {
    throw Error(ErrorCode::kConstructionFailure,
                "search witness failed re-verification");
  }
  return result;
}

SearchResult ExactDistinguishingIndex(const Graph& g,
                                      const SearchOptions& options) {
  if (g.edge_count() < 1) {
    ThrowInvalidParameter("distinguishing index of an edgeless graph");
  }
  Budget budget(options);
  const AutGroup group = EnumerateAutomorphisms(g, options.group_cap);
  if (EdgeKernelIsNontrivial(g, group)) {
    SearchResult result;
    result.kind = LabelingKind::kEdge;
    result.none_reason = "edge-kernel";
    result.group_order = group.order();
    result.budget_labelings = options.max_labelings;
    result.budget_ms = options.time_limit.count();
    result.elapsed_ms = budget.elapsed_ms();
    return result;
  }
  SearchResult result = RunSearch(EdgeAction(g, group), LabelingKind::kEdge,
                                  group.order(), options, budget);
  if (!IsEdgeDistinguishing(g, EnumerateAutomorphisms(g, options.group_cap),
                            EdgeLabeling(result.witness))) {
    throw Error(ErrorCode::kConstructionFailure,
                "search witness failed re-verification");
  }
  return result;
}

ClaimReport VerifyClaimedValue(const Graph& g, LabelingKind kind, int claimed,
                               std::span<const int> witness,
                               const SearchOptions& options) {
  const int expected_size =
      kind == LabelingKind::kVertex ? g.vertex_count() : g.edge_count();
  if (static_cast<int>(witness.size()) != expected_size) {
    ThrowInvalidParameter("witness has " + std::to_string(witness.size()) +
                          " labels, expected " +
                          std::to_string(expected_size));
  }
  if (claimed < 1) ThrowInvalidParameter("claimed value must be >= 1");
  for (int l : witness) {
    if (l < 1 || l > claimed) {
      ThrowInvalidParameter("witness label " + std::to_string(l) +
                            " outside 1.." + std::to_string(claimed));
    }
  }

  const AutGroup group = EnumerateAutomorphisms(g, options.group_cap);
  std::vector<int> labels(witness.begin(), witness.end());
  const bool ok =
      kind == LabelingKind::kVertex
          ? IsVertexDistinguishing(g, group, VertexLabeling(labels))
          : IsEdgeDistinguishing(g, group, EdgeLabeling(labels));
  if (!ok) {
    throw Error(ErrorCode::kInvalidWitness,
                "witness is preserved by a non-trivial automorphism");
  }

  ClaimReport report;
  report.kind = kind;
  report.claimed = claimed;
  report.upper_bound_certified = true;
  if (claimed == 1) {
    report.lower_bound_certified = true;
    report.detail = "value 1 is the minimum possible";
    return report;
  }

  Budget budget(options);
  const PointAction action =
      kind == LabelingKind::kVertex ? VertexAction(group) : EdgeAction(g, group);
  std::vector<int> smaller;
  Sweep sweep(action, claimed - 1, budget);
  switch (sweep.Run(std::max(1, options.threads), smaller)) {
    case SweepOutcome::kExhausted:
      report.lower_bound_certified = true;
      report.detail = "all labelings with " + std::to_string(claimed - 1) +
                      " labels fail";
      break;
    case SweepOutcome::kFound:
      report.detail = "a distinguishing labeling with " +
                      std::to_string(claimed - 1) + " labels exists";
      break;
    case SweepOutcome::kBudget:
      report.detail = "budget exhausted before the lower bound was settled";
      break;
  }
  report.labelings_tested = budget.nodes();
  return report;
}

}  // namespace symbreak
