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


#ifndef SYMBREAK_TESTS_TESTING_FIXTURES_H_
#define SYMBREAK_TESTS_TESTING_FIXTURES_H_

#include "symbreak/graph.h"

namespace symbreak::testing {

// Connected asymmetric graph on 6 vertices (the smallest order possible).
inline Graph AsymmetricSix() {
  return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {3, 5}},
               "asymmetric-6");
}

// Spider with legs of length 1, 2 and 3: the smallest asymmetric tree.
inline Graph AsymmetricTree() {
  return Graph(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}},
               "asymmetric-tree-7");
}

}  // namespace symbreak::testing

#endif  // SYMBREAK_TESTS_TESTING_FIXTURES_H_
