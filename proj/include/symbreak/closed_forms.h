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

#ifndef SYMBREAK_CLOSED_FORMS_H_
#define SYMBREAK_CLOSED_FORMS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/error.h"

namespace symbreak {

enum class BoundKind { kExact, kUpper, kLower, kSandwich };

std::string_view BoundKindName(BoundKind kind);

struct Assumption {
  std::string name;
  bool holds = false;
};

// A closed-form value or bound. When a result has both a radical closed form
// and an integer "min{k : ...}" expression, both are evaluated and compared.
struct BoundReport {
  std::string name;
  BoundKind kind = BoundKind::kExact;
  std::int64_t formula_value = 0;
  std::optional<std::int64_t> min_expression_value;
  bool mismatch = false;
  // Certified interval. For kExact, lower == upper.
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  std::vector<Assumption> assumptions;
  std::string note;

  // True iff `value` lies in [lower, upper] (missing ends are unbounded).
  bool Admits(std::int64_t value) const;
};

// Smallest integer k near `approx` with at_or_above_root(k) and not
// at_or_above_root(k-1); only the integers ceil(approx)-1 .. ceil(approx)+1
// are examined. Throws construction-failure if none qualifies.
std::int64_t AuditedCeiling(double approx,
                            const std::function<bool(std::int64_t)>&
                                at_or_above_root);
// Largest integer k near `approx` with at_or_below_root(k) and not
// at_or_below_root(k+1).
std::int64_t AuditedFloor(double approx,
                          const std::function<bool(std::int64_t)>&
                              at_or_below_root);

// Automorphism group orders. Invalid-parameter for n < 2 or on overflow.
std::uint64_t AutOrderFriendship(int n);  // n! 2^n
std::uint64_t AutOrderBook(int n);        // 2 n!
// The product |Aut(G)| |Aut(H)| as stated for connected G != K_1.
std::uint64_t AutOrderCorona(std::uint64_t aut_g, std::uint64_t aut_h);
// The order actually realized by corona(G, H) for connected G != K_1:
// every copy of H can be permuted independently, giving |Aut(G)| |Aut(H)|^n.
std::uint64_t AutOrderCoronaWreath(std::uint64_t aut_g, std::uint64_t aut_h,
                                   int g_order);

// Exact values for the named families (n >= 2).
BoundReport DistNumberFriendship(int n);
BoundReport DistIndexFriendship(int n);
BoundReport DistNumberBook(int n);
// Edge index of K_{1,n} x P_m (n, m >= 2).
BoundReport DistIndexStarPath(int n, int m);

// Vertex distinguishing number of corona(G, H) from D(G) and D(H). The caller
// attests that G and H are connected. Gives the exact value when D(G) = 1 or
// D(G) <= D(H), the sandwich [D(H), D(H)+1] for G = K_1, and otherwise the
// result of CoronaNumberBoundSpecial.
BoundReport CoronaNumberRelation(int dg, int dh, bool g_is_k1);

// D(G) > D(H) regime: D(H) <= D(corona) <= D(H) + k. The radical closed form
// for k and the construction's min{k : (k+1)(D(H)+k) >= D(G)} are both
// reported; the min-expression is authoritative. Throws wrong-regime when
// D(G) <= D(H).
BoundReport CoronaNumberBoundSpecial(int dg, int dh);

// Hypotheses for the corona edge-index bounds. The caller attests that G and
// H are connected; everything else is explicit here and cross-checked.
struct CoronaIndexInputs {
  std::optional<int> dprime_g;  // absent when undefined (K_1, K_2)
  std::optional<int> dprime_h;
  int order_g = 0;
  int order_h = 0;
  bool g_is_k1 = false;
  bool h_is_k2 = false;
  bool g_asymmetric = false;     // |Aut(G)| = 1
  bool g_number_is_one = false;  // D(G) = 1
};

struct OmittedBound {
  std::string name;
  std::string reason;
};

struct CoronaIndexBounds {
  std::vector<BoundReport> reports;
  std::vector<OmittedBound> omitted;
};

// Every applicable edge-index bound for corona(G, H), with the reason each
// inapplicable one was skipped. Throws invalid-parameter on contradictory
// inputs (for example g_is_k1 with order_g != 1).
CoronaIndexBounds CoronaIndexBoundsFor(const CoronaIndexInputs& in);

// Middle-edge count-vector table for an H of order m.
//   x[r-1]: count vectors of length-m label sequences over r labels that use
//           every label (compositions of m into r positive parts);
//   y[r-1]: count vectors over labels 1..r that use label r.
struct CoronaEdgeBoundTable {
  int m = 0;
  int n = 0;
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;
  // min{k : y_1 + ... + y_k >= n}
  int threshold = 0;
};

class PartialTableError : public Error {
 public:
  explicit PartialTableError(CoronaEdgeBoundTable partial);
  const CoronaEdgeBoundTable& table() const { return table_; }

 private:
  CoronaEdgeBoundTable table_;
};

// Throws invalid-parameter for m < 2 or n < 1, and PartialTableError
// (not-found) if the threshold is beyond k_max.
CoronaEdgeBoundTable MakeCoronaEdgeBoundTable(int m, int n, int k_max = 64);

// x_r evaluated three ways, for cross-checking: by dynamic programming over
// compositions, by the nested sum sum_{i_{r-2}=r-1}^m ... sum_{i_1=i_2}^m
// (m - i_1) (r >= 3), and y_r by the binomial recurrence over x.
std::int64_t CompositionCount(int m, int r);
std::int64_t NestedSumCount(int m, int r);
std::int64_t BinomialCoefficient(int n, int k);

}  // namespace symbreak

#endif  // SYMBREAK_CLOSED_FORMS_H_
