/*
 * Copyright 2026 The efkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "efkit/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace efk {

struct GraphPair {
    ColoredGraph g;
    ColoredGraph h;
};

inline constexpr const char* kGray = "gray";

/// Lifting construction with branching `branching` (3 gives the two-variable
/// gadget, k+1 the k-variable one). Level 1 adds a gray root adjacent to every
/// vertex of the copies; higher levels attach the gray root to the roots of
/// the copies. The root is vertex 0 of every output; level 0 returns the
/// inputs unchanged.
GraphPair lift_pair(const ColoredGraph& g0, const ColoredGraph& h0, int level, int branching = 3);

/// Lifting of a red and a blue single vertex; both trees have 3^i+(3^i-1)/2
/// vertices.
GraphPair colored_tree_pair(int level);

/// Uncolored trees for k >= 3 variables: cherry vs. rooted 3-path at the
/// base, branching k+1, roots attached by single edges.
GraphPair uncolored_tree_pair(int k, int level);

/// Returns (2G_m, 2H_m), each on 8m-4 vertices.
GraphPair ladder_pair(int rungs);

/// Single ladder halves G_m and H_m (4m-2 vertices each).
GraphPair ladder_halves(int rungs);

/// G_m: 3(2m-1)-cycle with one dandelion pendant; H_m: 6m-cycle with 2m-1
/// pendants.
GraphPair cycle_pair(int m);

/// cycle_pair(m) with G padded by a 2m-cycle and an isolated vertex so both
/// sides have 8m-1 vertices. Requires m divisible by 3.
GraphPair padded_cycle_pair(int m);

/// Base pair for the succinctness gadget: cycle_pair(m) with the dandelion
/// vertices of H turned into a clique.
GraphPair succinct_cycle_base(int m);

/// lift_pair(succinct_cycle_base(m), level, 3).
GraphPair succinct_cycle_pair(int m, int level);

enum class NamedFamily { path, cycle, star, wheel, complete, empty };

NamedFamily parse_named_family(const std::string& name);

ColoredGraph named_graph(NamedFamily family, int n);

/// Family selector used by the command line front end.
struct FamilySpec {
    enum class Family { lift, colored_tree, uncolored_tree, ladder, cycle, padded_cycle, succinct_cycle };
    Family family = Family::colored_tree;
    std::vector<int> params;
};

FamilySpec::Family parse_family(const std::string& name);

GraphPair generate(const FamilySpec& spec);

} // namespace efk
