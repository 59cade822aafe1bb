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
#include <set>

#include <gtest/gtest.h>

#include "symbreak/automorphism.h"
#include "symbreak/closed_forms.h"
#include "symbreak/constructive.h"
#include "symbreak/error.h"
#include "symbreak/exact_search.h"
#include "symbreak/families.h"
#include "testing/fixtures.h"
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

// Independent check: no non-identity automorphism preserves the labels, by
// counting label-preserving automorphisms (and, when the graph is small,
// trying every permutation).
void ExpectDistinguishing(const ConstructedLabeling& c) {
  const bool vertex = c.kind == LabelingKind::kVertex;
  const std::span<const int> labels(c.labels);
  EXPECT_EQ(CountColoredAutomorphisms(c.graph, vertex ? labels : std::span<const int>(),
                                      vertex ? std::span<const int>() : labels),
            1u)
      << c.scheme;
  if (c.graph.vertex_count() <= 9) {
    const auto autos = testing::AllAutomorphisms(c.graph);
    EXPECT_TRUE(vertex ? testing::VertexDistinguishing(c.graph, autos, c.labels)
                       : testing::EdgeDistinguishing(c.graph, autos, c.labels));
  }
  EXPECT_TRUE(Labeling(c.labels).UsesContiguousLabels()) << c.scheme;
}

VertexLabeling VertexWitness(const Graph& g) {
  return VertexLabeling(ExactDistinguishingNumber(g).witness);
}

EdgeLabeling EdgeWitness(const Graph& g) {
  return EdgeLabeling(ExactDistinguishingIndex(g).witness);
}

TEST(SchemeOrderTest, FirstTerms) {
  EXPECT_EQ(FriendshipVertexPairs(6),
            (std::vector<LabelPair>{{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 1}, {4, 2}}));
  EXPECT_EQ(FriendshipEdgeTriples(4),
            (std::vector<LabelTriple>{{1, 2, 1}, {1, 2, 2}, {1, 3, 1}, {2, 3, 1}}));
  EXPECT_EQ(BookPagePairs(10),
            (std::vector<LabelPair>{{1, 1}, {2, 1}, {2, 2}, {1, 2}, {3, 1},
                                    {3, 2}, {3, 3}, {1, 3}, {2, 3}, {4, 1}}));
  EXPECT_EQ(CoronaEdgePairs(10),
            (std::vector<LabelPair>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3},
                                    {2, 3}, {3, 3}, {3, 1}, {3, 2}, {4, 1}}));
}

// Largest label in the first `count` terms.
template <typename T>
int MaxEntry(const std::vector<T>& terms) {
  int out = 0;
  for (const T& t : terms) {
    out = std::max({out, t.x, t.y});
    if constexpr (requires { t.z; }) out = std::max(out, t.z);
  }
  return out;
}

TEST(SchemeOrderTest, DuplicateFreeAndLabelEconomical) {
  for (int k = 2; k <= 6; ++k) {
    // Everything that fits on k labels comes before label k+1 appears.
    const int pairs = k * (k - 1) / 2;
    const auto fv = FriendshipVertexPairs(pairs);
    std::set<std::pair<int, int>> unordered;
    for (const LabelPair& p : fv) {
      EXPECT_NE(p.x, p.y);
      unordered.insert(std::minmax(p.x, p.y));
    }
    EXPECT_EQ(unordered.size(), fv.size());
    EXPECT_EQ(MaxEntry(fv), k);

    const int triples = k * k * (k - 1) / 2;
    const auto ft = FriendshipEdgeTriples(triples);
    std::set<std::tuple<int, int, int>> side_swap;
    for (const LabelTriple& t : ft) {
      EXPECT_NE(t.x, t.y);
      side_swap.insert({std::min(t.x, t.y), std::max(t.x, t.y), t.z});
    }
    EXPECT_EQ(side_swap.size(), ft.size());
    EXPECT_EQ(MaxEntry(ft), k);

    for (const auto& ordered : {BookPagePairs(k * k), CoronaEdgePairs(k * k)}) {
      std::set<std::pair<int, int>> seen;
      for (const LabelPair& p : ordered) seen.insert({p.x, p.y});
      EXPECT_EQ(seen.size(), ordered.size());
      EXPECT_EQ(MaxEntry(ordered), k);
    }
  }
}

TEST(SchemeOrderTest, CountVectors) {
  EXPECT_EQ(CountVectors(3, 4),
            (std::vector<std::vector<int>>{{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  const auto ten = CountVectors(3, 10);
  ASSERT_EQ(ten.size(), 10u);
  EXPECT_EQ(ten[0], (std::vector<int>{3, 0, 0}));
  EXPECT_EQ(ten[4], (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(ten[9], (std::vector<int>{0, 0, 3}));
  // Exactly the count vectors over 3 labels, each once.
  EXPECT_EQ(std::set<std::vector<int>>(ten.begin(), ten.end()),
            testing::AllCountVectors(3, 3));
  EXPECT_EQ(CountVectors(2, 4).front().size(), 3u);
}

TEST(FriendshipVerticesTest, Examples) {
  const ConstructedLabeling two = LabelFriendshipVertices(2);
  EXPECT_EQ(two.labels, (std::vector<int>{1, 1, 2, 2, 3}));
  const ConstructedLabeling three = LabelFriendshipVertices(3);
  EXPECT_EQ(three.label_count, 3);
  ExpectDistinguishing(three);
  const ConstructedLabeling six = LabelFriendshipVertices(6);
  EXPECT_EQ(six.label_count, 4);
  const SearchResult exact = ExactDistinguishingNumber(MakeFriendship(6));
  EXPECT_EQ(exact.failure_proofs, (std::vector<int>{1, 2, 3}));
}

TEST(FriendshipVerticesTest, LabelCountsMatchFormulaUpToTwelve) {
  for (int n = 2; n <= 12; ++n) {
    const ConstructedLabeling c = LabelFriendshipVertices(n);
    EXPECT_EQ(c.label_count, DistNumberFriendship(n).formula_value) << n;
    ExpectDistinguishing(c);
  }
  EXPECT_EQ(CodeOf([] { LabelFriendshipVertices(1); }),
            ErrorCode::kInvalidParameter);
}

TEST(FriendshipEdgesTest, Examples) {
  const ConstructedLabeling two = LabelFriendshipEdges(2);
  EXPECT_EQ(two.label_count, 2);
  const RoleMap& roles = two.graph.roles();
  EXPECT_EQ(two.labels[roles.EdgeIndex("side-1-a")], 1);
  EXPECT_EQ(two.labels[roles.EdgeIndex("side-1-b")], 2);
  EXPECT_EQ(two.labels[roles.EdgeIndex("base-1")], 1);
  EXPECT_EQ(two.labels[roles.EdgeIndex("base-2")], 2);
  EXPECT_EQ(LabelFriendshipEdges(11).label_count, 4);
  EXPECT_EQ(LabelFriendshipEdges(9).label_count, 3);
}

TEST(FriendshipEdgesTest, LabelCountsMatchFormulaUpToTwelve) {
  for (int n = 2; n <= 12; ++n) {
    const ConstructedLabeling c = LabelFriendshipEdges(n);
    EXPECT_EQ(c.label_count, DistIndexFriendship(n).formula_value) << n;
    ExpectDistinguishing(c);
  }
}

TEST(BookVerticesTest, Examples) {
  const ConstructedLabeling two = LabelBookVertices(2);
  EXPECT_EQ(two.labels, (std::vector<int>{1, 2, 1, 1, 2, 1}));
  const ConstructedLabeling four = LabelBookVertices(4);
  EXPECT_EQ(four.label_count, 2);
  ExpectDistinguishing(four);
  // The page pair equal to the spine trades places with the next page.
  const ConstructedLabeling five = LabelBookVertices(5);
  EXPECT_EQ(five.labels[2 * 4], 3);
  EXPECT_EQ(five.labels[2 * 5], 1);
  EXPECT_EQ(five.labels[2 * 5 + 1], 2);
  EXPECT_EQ(LabelBookVertices(9).label_count, 3);
}

TEST(BookVerticesTest, LabelCountsMatchFormulaUpToTwelve) {
  for (int n = 2; n <= 12; ++n) {
    const ConstructedLabeling c = LabelBookVertices(n);
    EXPECT_EQ(c.label_count, DistNumberBook(n).formula_value) << n;
    ExpectDistinguishing(c);
  }
}

TEST(CoronaVerticesTest, EqualRegime) {
  const Graph p3 = MakePath(3);
  const ConstructedLabeling c = LabelCoronaVerticesEqualRegime(
      p3, p3, VertexLabeling({1, 1, 2}), VertexLabeling({1, 1, 2}));
  EXPECT_EQ(c.label_count, 2);
  ExpectDistinguishing(c);
  const Graph c6 = MakeCycle(6);
  const ConstructedLabeling with_cycle =
      LabelCoronaVerticesEqualRegime(p3, c6, VertexWitness(p3), VertexWitness(c6));
  EXPECT_EQ(with_cycle.label_count, 2);
  ExpectDistinguishing(with_cycle);

  const Graph tree = testing::AsymmetricTree();
  EXPECT_EQ(CodeOf([&] {
              LabelCoronaVerticesEqualRegime(tree, p3, VertexWitness(tree),
                                             VertexWitness(p3));
            }),
            ErrorCode::kWrongRegime);
  EXPECT_EQ(CodeOf([&] {
              LabelCoronaVerticesEqualRegime(p3, p3, VertexLabeling({1, 1, 1}),
                                             VertexLabeling({1, 1, 2}));
            }),
            ErrorCode::kInvalidWitness);
}

TEST(CoronaVerticesTest, SpecialRegime) {
  const Graph p3 = MakePath(3);
  const ConstructedLabeling f7 = LabelCoronaVerticesSpecialRegime(
      MakeFriendship(7), p3,
      VertexLabeling(LabelFriendshipVertices(7).labels), VertexLabeling({1, 1, 2}));
  EXPECT_EQ(f7.label_count, 3);
  EXPECT_EQ(f7.label_count, CoronaNumberBoundSpecial(5, 2).upper);
  ExpectDistinguishing(f7);

  const ConstructedLabeling f2 = LabelCoronaVerticesSpecialRegime(
      MakeFriendship(2), p3, VertexLabeling(LabelFriendshipVertices(2).labels),
      VertexLabeling({1, 1, 2}));
  EXPECT_EQ(f2.label_count, 3);
  ExpectDistinguishing(f2);

  EXPECT_EQ(CodeOf([&] {
              LabelCoronaVerticesSpecialRegime(p3, p3, VertexLabeling({1, 1, 2}),
                                               VertexLabeling({1, 1, 2}));
            }),
            ErrorCode::kWrongRegime);
}

TEST(CoronaVerticesTest, SpecialRegimeMeetsTheStageCountOnManyInstances) {
  // Labelings of G with d labels: complete graphs need exactly n.
  for (int dg = 2; dg <= 7; ++dg) {
    const Graph g = MakeComplete(dg);
    std::vector<int> distinct(dg);
    for (int i = 0; i < dg; ++i) distinct[i] = i + 1;
    for (const Graph& h : {MakeComplete(1), MakePath(3), MakeCycle(5)}) {
      const VertexLabeling lh = VertexWitness(h);
      if (lh.MaxLabel() >= dg) continue;
      const ConstructedLabeling c = LabelCoronaVerticesSpecialRegime(
          g, h, VertexLabeling(distinct), lh);
      EXPECT_EQ(c.label_count, CoronaNumberBoundSpecial(dg, lh.MaxLabel()).upper)
          << dg << " " << h.family_tag();
      ExpectDistinguishing(c);
    }
  }
}

TEST(CoronaVerticesTest, Apex) {
  const ConstructedLabeling p3 =
      LabelCoronaVerticesApex(MakePath(3), VertexLabeling({1, 1, 2}));
  EXPECT_EQ(p3.label_count, 3);
  ExpectDistinguishing(p3);
  const ConstructedLabeling k2 =
      LabelCoronaVerticesApex(MakeComplete(2), VertexLabeling({1, 2}));
  EXPECT_EQ(k2.label_count, 3);
  EXPECT_EQ(*ExactDistinguishingNumber(k2.graph).value, 3);
  const Graph asym = testing::AsymmetricSix();
  EXPECT_EQ(LabelCoronaVerticesApex(asym, VertexWitness(asym)).label_count, 2);
}

TEST(CoronaEdgesTest, PairScheme) {
  const Graph p3 = MakePath(3);
  const Graph star = MakeStar(4);
  ASSERT_EQ(*ExactDistinguishingIndex(star).value, 4);
  const ConstructedLabeling four =
      LabelCoronaEdgesPairScheme(p3, star, EdgeWitness(p3), EdgeWitness(star));
  EXPECT_EQ(four.label_count, 2);
  ExpectDistinguishing(four);

  const Graph c5 = MakeCycle(5);
  const ConstructedLabeling cycle =
      LabelCoronaEdgesPairScheme(p3, c5, EdgeWitness(p3), EdgeWitness(c5));
  EXPECT_EQ(cycle.graph.vertex_count(), 18);
  EXPECT_LE(cycle.label_count, 2);
  ExpectDistinguishing(cycle);

  EXPECT_EQ(CodeOf([&] {
              LabelCoronaEdgesPairScheme(p3, MakeComplete(2), EdgeWitness(p3),
                                         EdgeLabeling({1}));
            }),
            ErrorCode::kWrongRegime);
}

TEST(CoronaEdgesTest, PairSchemeRefusesToReturnAnUnverifiedLabeling) {
  // In K_3 every edge gets its own class and pairs (1,1), (1,2), (2,1); the
  // two vertices meeting class [3] both take its middle label 1, and the
  // swap of those vertices preserves everything. K_4 fails the same way.
  // The scheme must fail loudly instead of returning the labeling.
  const Graph p3 = MakePath(3);
  for (const Graph& h : {MakeComplete(3), MakeComplete(4)}) {
    EXPECT_EQ(CodeOf([&] {
                LabelCoronaEdgesPairScheme(p3, h, EdgeWitness(p3), EdgeWitness(h));
              }),
              ErrorCode::kConstructionFailure)
        << h.family_tag();
  }
  // The bound itself holds: two labels do suffice.
  EXPECT_EQ(*ExactDistinguishingIndex(Corona(p3, MakeComplete(3))).value, 2);
}

TEST(CoronaEdgesTest, AsymmetricBase) {
  const Graph tree = testing::AsymmetricTree();
  const ConstructedLabeling cycle =
      LabelCoronaEdgesAsymmetricBase(tree, MakeCycle(6));
  EXPECT_EQ(cycle.label_count, 2);
  ExpectDistinguishing(cycle);
  const ConstructedLabeling asym =
      LabelCoronaEdgesAsymmetricBase(tree, testing::AsymmetricSix());
  EXPECT_EQ(asym.label_count, 1);
  ExpectDistinguishing(asym);
  EXPECT_EQ(CodeOf([] {
              LabelCoronaEdgesAsymmetricBase(MakePath(3), MakeCycle(6));
            }),
            ErrorCode::kWrongRegime);
  EXPECT_EQ(CodeOf([&] {
              LabelCoronaEdgesAsymmetricBase(tree, MakeComplete(2));
            }),
            ErrorCode::kWrongRegime);
}

TEST(CoronaEdgesTest, Staircase) {
  const Graph asym = testing::AsymmetricSix();
  const ConstructedLabeling p3 = LabelCoronaEdgesStaircase(MakePath(3), asym);
  EXPECT_EQ(p3.label_count, 2);
  ExpectDistinguishing(p3);

  const ConstructedLabeling k2 = LabelCoronaEdgesStaircase(MakeComplete(2), asym);
  const CoronaLayout layout{2, 6};
  int twos = 0;
  for (int e = 0; e < k2.graph.edge_count(); ++e) twos += k2.labels[e] == 2;
  EXPECT_EQ(twos, 1);
  EXPECT_EQ(k2.labels[*k2.graph.EdgeIndex(1, layout.CopyVertex(1, 0))], 2);
  ExpectDistinguishing(k2);

  // |V(G)| = |V(H)| + 1 is the largest allowed.
  ExpectDistinguishing(LabelCoronaEdgesStaircase(MakeCycle(7), asym));
  EXPECT_EQ(CodeOf([&] { LabelCoronaEdgesStaircase(MakeCycle(8), asym); }),
            ErrorCode::kWrongRegime);
  EXPECT_EQ(CodeOf([] { LabelCoronaEdgesStaircase(MakePath(3), MakeCycle(6)); }),
            ErrorCode::kWrongRegime);
}

TEST(CoronaEdgesTest, CountVectors) {
  const Graph asym = testing::AsymmetricSix();
  for (int n = 3; n <= 30; n += 3) {
    const Graph g = MakeCycle(n);
    const ConstructedLabeling c = LabelCoronaEdgesCountVectors(g, asym, 64);
    EXPECT_EQ(c.label_count, MakeCoronaEdgeBoundTable(6, n).threshold) << n;
    ExpectDistinguishing(c);
  }
  EXPECT_EQ(CodeOf([&] { LabelCoronaEdgesCountVectors(MakeCycle(10), asym, 2); }),
            ErrorCode::kNotEnoughVectors);
  EXPECT_EQ(CodeOf([&] {
              LabelCoronaEdgesCountVectors(testing::AsymmetricTree(), asym, 8);
            }),
            ErrorCode::kWrongRegime);
}

TEST(CoronaEdgesTest, RepeatedCountVectorsOnACycleAreNotDistinguishing) {
  // Negative control: give two vertices of C_n the same middle-edge labels
  // and the rotation or reflection that swaps them survives.
  const Graph asym = testing::AsymmetricSix();
  const Graph g = MakeCycle(4);
  const ConstructedLabeling c = LabelCoronaEdgesCountVectors(g, asym, 8);
  std::vector<int> labels = c.labels;
  const CoronaLayout layout{4, 6};
  for (int k = 0; k < 6; ++k) {
    labels[*c.graph.EdgeIndex(2, layout.CopyVertex(2, k))] =
        labels[*c.graph.EdgeIndex(0, layout.CopyVertex(0, k))];
    labels[*c.graph.EdgeIndex(3, layout.CopyVertex(3, k))] =
        labels[*c.graph.EdgeIndex(1, layout.CopyVertex(1, k))];
  }
  EXPECT_FALSE(IsEdgeDistinguishing(c.graph, EdgeLabeling(labels)));
  labels = c.labels;
  for (int k = 0; k < 6; ++k) {
    labels[*c.graph.EdgeIndex(2, layout.CopyVertex(2, k))] =
        labels[*c.graph.EdgeIndex(0, layout.CopyVertex(0, k))];
  }
  EXPECT_FALSE(IsEdgeDistinguishing(c.graph, EdgeLabeling(labels)));
}

}  // namespace
}  // namespace symbreak
