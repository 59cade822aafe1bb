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


#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "symbreak/closed_forms.h"
#include "symbreak/error.h"
#include "testing/oracles.h"

namespace symbreak {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

// Smallest k for which `capacity(k)` >= n, counting by enumeration.
int SmallestK(int n, const std::function<int(int)>& capacity) {
  int k = 1;
  while (capacity(k) < n) ++k;
  return k;
}

// Unordered pairs of distinct labels from 1..k.
int DistinctPairs(int k) {
  int count = 0;
  for (int a = 1; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) ++count;
  }
  return count;
}

// Side pair {x != y} plus base label.
int SideSwapTriples(int k) { return DistinctPairs(k) * k; }

int OrderedPairs(int k) { return k * k; }

TEST(AutOrderTest, Examples) {
  EXPECT_EQ(AutOrderFriendship(3), 48u);
  EXPECT_EQ(AutOrderBook(4), 48u);
  EXPECT_EQ(AutOrderCorona(2, 2), 4u);
  EXPECT_EQ(AutOrderCoronaWreath(2, 2, 3), 16u);
  EXPECT_EQ(CodeOf([] { AutOrderFriendship(1); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(CodeOf([] { AutOrderBook(1); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(CodeOf([] { AutOrderFriendship(40); }),
            ErrorCode::kInvalidParameter);
}

TEST(FriendshipNumberTest, Examples) {
  EXPECT_EQ(DistNumberFriendship(2).formula_value, 3);
  EXPECT_EQ(DistNumberFriendship(6).formula_value, 4);
  EXPECT_EQ(DistNumberFriendship(7).formula_value, 5);
  const std::vector<int> sequence = {3, 3, 4, 4, 4, 5, 5, 5, 5};
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(DistNumberFriendship(n).formula_value, sequence[n - 2]) << n;
  }
  const BoundReport big = DistNumberFriendship(1000);
  EXPECT_EQ(big.formula_value, *big.min_expression_value);
  EXPECT_FALSE(big.mismatch);
  EXPECT_EQ(big.kind, BoundKind::kExact);
  EXPECT_EQ(CodeOf([] { DistNumberFriendship(1); }),
            ErrorCode::kInvalidParameter);
}

TEST(FriendshipIndexTest, Examples) {
  EXPECT_EQ(DistIndexFriendship(2).formula_value, 2);
  EXPECT_EQ(DistIndexFriendship(3).formula_value, 3);
  EXPECT_EQ(DistIndexFriendship(9).formula_value, 3);
  EXPECT_EQ(DistIndexFriendship(10).formula_value, 4);
  EXPECT_EQ(DistIndexFriendship(24).formula_value, 4);
  EXPECT_EQ(DistIndexFriendship(25).formula_value, 5);
  EXPECT_EQ(CodeOf([] { DistIndexFriendship(0); }),
            ErrorCode::kInvalidParameter);
}

TEST(BookNumberTest, Examples) {
  EXPECT_EQ(DistNumberBook(4).formula_value, 2);
  EXPECT_EQ(DistNumberBook(5).formula_value, 3);
  EXPECT_EQ(DistNumberBook(10).formula_value, 4);
  for (int n = 10; n <= 16; ++n) EXPECT_EQ(DistNumberBook(n).formula_value, 4);
  EXPECT_EQ(CodeOf([] { DistNumberBook(1); }), ErrorCode::kInvalidParameter);
}

TEST(StarPathIndexTest, Examples) {
  EXPECT_EQ(DistIndexStarPath(8, 2).formula_value, 3);
  EXPECT_EQ(DistIndexStarPath(2, 2).formula_value, 2);
  EXPECT_EQ(DistIndexStarPath(27, 2).formula_value, 4);
  EXPECT_EQ(DistIndexStarPath(26, 2).formula_value, 3);
  EXPECT_EQ(DistIndexStarPath(28, 2).formula_value, 4);
  // No exception away from m = 2: 2^5 = 32.
  EXPECT_EQ(DistIndexStarPath(32, 3).formula_value, 2);
  EXPECT_EQ(DistIndexStarPath(33, 3).formula_value, 3);
  EXPECT_EQ(CodeOf([] { DistIndexStarPath(1, 2); }),
            ErrorCode::kInvalidParameter);
  EXPECT_EQ(CodeOf([] { DistIndexStarPath(3, 1); }),
            ErrorCode::kInvalidParameter);
}

TEST(TwinsTest, AgreeWithEachOtherAndWithCountingUpToTenThousand) {
  for (int n = 2; n <= 10000; ++n) {
    const BoundReport f = DistNumberFriendship(n);
    const BoundReport fi = DistIndexFriendship(n);
    const BoundReport b = DistNumberBook(n);
    ASSERT_FALSE(f.mismatch) << n;
    ASSERT_FALSE(fi.mismatch) << n;
    ASSERT_FALSE(b.mismatch) << n;
    if (n <= 2000) {
      ASSERT_EQ(f.formula_value, SmallestK(n, DistinctPairs)) << n;
      ASSERT_EQ(fi.formula_value, SmallestK(n, SideSwapTriples)) << n;
      ASSERT_EQ(b.formula_value, SmallestK(n, OrderedPairs)) << n;
    }
  }
}

TEST(CoronaNumberTest, RelationExamples) {
  const BoundReport asym = CoronaNumberRelation(1, 3, false);
  EXPECT_EQ(asym.kind, BoundKind::kExact);
  EXPECT_EQ(asym.formula_value, 3);
  const BoundReport dominated = CoronaNumberRelation(2, 2, false);
  EXPECT_EQ(dominated.kind, BoundKind::kExact);
  EXPECT_EQ(dominated.formula_value, 2);
  const BoundReport apex = CoronaNumberRelation(1, 2, true);
  EXPECT_EQ(apex.kind, BoundKind::kSandwich);
  EXPECT_EQ(apex.lower, 2);
  EXPECT_EQ(apex.upper, 3);
  EXPECT_EQ(CoronaNumberRelation(5, 2, false).name, "corona-number-special");
  EXPECT_EQ(CodeOf([] { CoronaNumberRelation(2, 2, true); }),
            ErrorCode::kInvalidParameter);
}

TEST(CoronaNumberTest, SpecialRegimeExamples) {
  const BoundReport r = CoronaNumberBoundSpecial(5, 2);
  EXPECT_EQ(r.kind, BoundKind::kSandwich);
  EXPECT_EQ(r.lower, 2);
  EXPECT_EQ(r.upper, 3);
  EXPECT_EQ(r.min_expression_value, 3);
  EXPECT_EQ(r.formula_value, 2);
  EXPECT_TRUE(r.mismatch);

  const BoundReport small = CoronaNumberBoundSpecial(2, 1);
  EXPECT_EQ(small.upper, 2);

  EXPECT_EQ(CodeOf([] { CoronaNumberBoundSpecial(2, 2); }),
            ErrorCode::kWrongRegime);
}

TEST(CoronaNumberTest, SpecialRegimeMinExpressionCountsStageTypes) {
  // Stage t contributes D(H) + 2t types; the upper bound is D(H) plus the
  // first stage at which the running total reaches D(G).
  int mismatches = 0;
  for (int dh = 1; dh <= 200; ++dh) {
    for (int dg = dh + 1; dg <= 200; ++dg) {
      int total = 0, k = -1;
      while (total < dg) total += dh + 2 * ++k;
      const BoundReport r = CoronaNumberBoundSpecial(dg, dh);
      ASSERT_EQ(r.upper, dh + k) << dg << "," << dh;
      const double radical =
          (-(1.0 + dh) + std::sqrt((dh - 1.0) * (dh - 1.0) + 4.0 * dg)) / 2.0;
      ASSERT_EQ(r.formula_value, dh + static_cast<int>(std::floor(radical)))
          << dg << "," << dh;
      ASSERT_EQ(r.mismatch, r.formula_value != *r.upper);
      mismatches += r.mismatch;
    }
  }
  EXPECT_GT(mismatches, 0);
}

TEST(CoronaIndexTest, AsymmetricFactors) {
  CoronaIndexInputs in;
  in.dprime_g = 1;
  in.dprime_h = 1;
  in.order_g = 7;
  in.order_h = 6;
  in.g_asymmetric = true;
  in.g_number_is_one = true;
  const CoronaIndexBounds b = CoronaIndexBoundsFor(in);
  auto it = std::find_if(b.reports.begin(), b.reports.end(), [](const auto& r) {
    return r.name == "corona-index-asymmetric-factors";
  });
  ASSERT_NE(it, b.reports.end());
  EXPECT_EQ(it->kind, BoundKind::kExact);
  EXPECT_EQ(it->formula_value, 1);
}

TEST(CoronaIndexTest, CopiesOfK2) {
  CoronaIndexInputs in;
  in.dprime_g = 1;
  in.order_g = 7;
  in.order_h = 2;
  in.h_is_k2 = true;
  in.g_asymmetric = true;
  in.g_number_is_one = true;
  const CoronaIndexBounds b = CoronaIndexBoundsFor(in);
  auto it = std::find_if(b.reports.begin(), b.reports.end(), [](const auto& r) {
    return r.name == "corona-index-k2-copies";
  });
  ASSERT_NE(it, b.reports.end());
  EXPECT_EQ(it->kind, BoundKind::kUpper);
  EXPECT_EQ(it->upper, 2);
}

TEST(CoronaIndexTest, SpecialTable) {
  auto value = [](int order_g, int order_h) {
    CoronaIndexInputs in;
    in.order_g = order_g;
    in.order_h = order_h;
    in.g_is_k1 = order_g == 1;
    in.h_is_k2 = order_h == 2;
    in.g_asymmetric = in.g_number_is_one = order_g == 1;
    for (const BoundReport& r : CoronaIndexBoundsFor(in).reports) {
      if (r.name == "corona-index-special-table") return r.formula_value;
    }
    return std::int64_t{-1};
  };
  EXPECT_EQ(value(1, 2), 3);
  EXPECT_EQ(value(2, 1), 2);
  EXPECT_EQ(value(2, 2), 2);
  EXPECT_EQ(value(1, 1), 1);
}

TEST(CoronaIndexTest, OmittedBoundsCarryReasons) {
  CoronaIndexInputs in;
  in.dprime_g = 2;
  in.dprime_h = 3;
  in.order_g = 3;
  in.order_h = 5;
  const CoronaIndexBounds b = CoronaIndexBoundsFor(in);
  ASSERT_EQ(b.reports.size(), 1u);
  EXPECT_EQ(b.reports[0].name, "corona-index-pair-scheme");
  EXPECT_EQ(b.reports[0].upper, 2);
  EXPECT_FALSE(b.omitted.empty());
  for (const OmittedBound& o : b.omitted) EXPECT_FALSE(o.reason.empty());
}

TEST(CoronaIndexTest, ContradictoryInputsAreRejected) {
  CoronaIndexInputs base;
  base.dprime_g = 2;
  base.dprime_h = 2;
  base.order_g = 3;
  base.order_h = 3;
  CoronaIndexInputs k1 = base;
  k1.g_is_k1 = true;
  CoronaIndexInputs k2 = base;
  k2.h_is_k2 = true;
  CoronaIndexInputs asym = base;
  asym.g_asymmetric = true;
  CoronaIndexInputs tiny = base;
  tiny.order_g = 2;
  CoronaIndexInputs zero = base;
  zero.dprime_h = 0;
  CoronaIndexInputs one = base;
  one.dprime_g = 1;
  for (const auto& in : {k1, k2, asym, tiny, zero, one}) {
    EXPECT_EQ(CodeOf([&] { CoronaIndexBoundsFor(in); }),
              ErrorCode::kInvalidParameter);
  }
}

TEST(TableTest, Examples) {
  const CoronaEdgeBoundTable m3 = MakeCoronaEdgeBoundTable(3, 10);
  EXPECT_EQ(m3.x, (std::vector<std::int64_t>{1, 2, 1}));
  EXPECT_EQ(m3.y, (std::vector<std::int64_t>{1, 3, 6}));
  EXPECT_EQ(m3.threshold, 3);
  EXPECT_EQ(MakeCoronaEdgeBoundTable(3, 4).threshold, 2);
  const CoronaEdgeBoundTable m2 = MakeCoronaEdgeBoundTable(2, 3);
  EXPECT_EQ(m2.x, (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(m2.y, (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(MakeCoronaEdgeBoundTable(2, 4).threshold, 3);
}

// The first k rows, computed with n large enough that no threshold is hit.
CoronaEdgeBoundTable FirstRows(int m, int k) {
  try {
    MakeCoronaEdgeBoundTable(m, 1 << 30, k);
  } catch (const PartialTableError& e) {
    return e.table();
  }
  ADD_FAILURE() << "threshold reached unexpectedly";
  return {};
}

TEST(TableTest, RowsMatchEnumeratedCountVectors) {
  for (int m = 2; m <= 6; ++m) {
    const CoronaEdgeBoundTable t = FirstRows(m, 5);
    for (int r = 1; r <= 5; ++r) {
      std::int64_t all_used = 0, top_used = 0;
      for (const auto& v : testing::AllCountVectors(m, r)) {
        all_used += std::all_of(v.begin(), v.end(), [](int c) { return c > 0; });
        top_used += v[r - 1] > 0;
      }
      EXPECT_EQ(t.x[r - 1], all_used) << m << "," << r;
      EXPECT_EQ(t.y[r - 1], top_used) << m << "," << r;
    }
  }
}

TEST(TableTest, PartialTableWhenThresholdIsOutOfReach) {
  try {
    MakeCoronaEdgeBoundTable(3, 1000, 3);
    FAIL();
  } catch (const PartialTableError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
    EXPECT_EQ(e.table().y.size(), 3u);
    EXPECT_EQ(e.table().threshold, 0);
  }
  EXPECT_EQ(CodeOf([] { MakeCoronaEdgeBoundTable(1, 3); }),
            ErrorCode::kInvalidParameter);
}

TEST(TableTest, CumulativeCountIsBinomial) {
  for (int m = 2; m <= 8; ++m) {
    const CoronaEdgeBoundTable t = FirstRows(m, 6);
    std::int64_t sum = 0;
    for (int k = 1; k <= 6; ++k) {
      sum += t.y[k - 1];
      EXPECT_EQ(sum, BinomialCoefficient(m + k - 1, k - 1)) << m << "," << k;
    }
  }
}

TEST(TableTest, NestedSumAgreesWithCompositionCount) {
  for (int m = 1; m <= 10; ++m) {
    for (int r = 1; r <= 7; ++r) {
      EXPECT_EQ(NestedSumCount(m, r), CompositionCount(m, r)) << m << "," << r;
    }
  }
}

TEST(AuditTest, RejectsApproximationsFarFromTheRoot) {
  auto at_least_ten = [](std::int64_t k) { return k >= 10; };
  EXPECT_EQ(AuditedCeiling(9.9999999, at_least_ten), 10);
  EXPECT_EQ(AuditedCeiling(10.0000001, at_least_ten), 10);
  EXPECT_EQ(CodeOf([&] { AuditedCeiling(3.5, at_least_ten); }),
            ErrorCode::kConstructionFailure);
  auto at_most_four = [](std::int64_t k) { return k <= 4; };
  EXPECT_EQ(AuditedFloor(4.9999, at_most_four), 4);
  EXPECT_EQ(AuditedFloor(5.0000001, at_most_four), 4);
}

}  // namespace
}  // namespace symbreak
