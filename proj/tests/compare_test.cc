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
#include <string>

#include <gtest/gtest.h>

#include "symbreak/compare.h"
#include "symbreak/error.h"

namespace symbreak {
namespace {

const ComparisonRow* FindRow(const Comparison& c, const std::string& name) {
  for (const ComparisonRow& row : c.rows) {
    if (row.bound.name == name) return &row;
  }
  return nullptr;
}

bool HasNoteContaining(const Comparison& c, const std::string& text) {
  return std::any_of(c.notes.begin(), c.notes.end(), [&](const std::string& n) {
    return n.find(text) != std::string::npos;
  });
}

TEST(CompareTest, FriendshipAgrees) {
  for (int n = 2; n <= 5; ++n) {
    const Comparison c = CompareWithOracle("friendship:" + std::to_string(n));
    EXPECT_EQ(c.rows.size(), 3u);
    EXPECT_TRUE(c.all_agree()) << n;
  }
}

TEST(CompareTest, BookAgrees) {
  for (int n = 2; n <= 6; ++n) {
    const Comparison c = CompareWithOracle("book:" + std::to_string(n));
    ASSERT_EQ(c.rows.size(), 3u);
    EXPECT_TRUE(c.all_agree()) << n;
  }
}

TEST(CompareTest, SmallFamiliesAgree) {
  for (const char* spec : {"path:5", "cycle:4", "cycle:5", "cycle:7", "complete:4",
                           "biclique:4,4", "cartesian(star:3,path:3)"}) {
    const Comparison c = CompareWithOracle(spec);
    EXPECT_FALSE(c.rows.empty()) << spec;
    EXPECT_TRUE(c.all_agree()) << spec;
  }
}

TEST(CompareTest, CoronaAutOrderProductDisagrees) {
  const Comparison c = CompareWithOracle("corona(path:3,path:3)");
  const ComparisonRow* product = FindRow(c, "corona-aut-product");
  const ComparisonRow* wreath = FindRow(c, "corona-aut-wreath");
  ASSERT_NE(product, nullptr);
  ASSERT_NE(wreath, nullptr);
  EXPECT_EQ(product->bound.formula_value, 4);
  EXPECT_EQ(*product->oracle, 16);
  EXPECT_FALSE(product->agree);
  EXPECT_TRUE(wreath->agree);
  EXPECT_FALSE(c.all_agree());
}

TEST(CompareTest, CoronaBoundsAdmitTheOracle) {
  for (const char* spec : {"corona(path:2,path:2)", "corona(path:3,path:3)",
                           "corona(path:3,complete:3)", "corona(cycle:4,complete:1)"}) {
    const Comparison c = CompareWithOracle(spec);
    for (const ComparisonRow& row : c.rows) {
      if (row.bound.name == "corona-aut-product") continue;
      EXPECT_TRUE(row.agree) << spec << " " << row.bound.name;
    }
  }
}

TEST(CompareTest, OmittedBoundsBecomeNotes) {
  const Comparison c = CompareWithOracle("corona(path:3,path:3)");
  EXPECT_TRUE(HasNoteContaining(c, "omitted"));
}

TEST(CompareTest, UnknownFamiliesProduceNotes) {
  const Comparison star = CompareWithOracle("star:4");
  EXPECT_TRUE(star.rows.empty());
  EXPECT_TRUE(HasNoteContaining(star, "no formula"));
  const Comparison product = CompareWithOracle("cartesian(cycle:3,path:2)");
  EXPECT_TRUE(product.rows.empty());
  EXPECT_FALSE(product.notes.empty());
  EXPECT_THROW(CompareWithOracle("nonsense:3"), Error);
}

}  // namespace
}  // namespace symbreak
