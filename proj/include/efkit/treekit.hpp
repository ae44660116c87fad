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

// Tree utilities: centers, canonical codes of rooted colored trees,
// branching index, separators and the truncation T mod k.

#include "efkit/graph.hpp"

#include <string>
#include <vector>

namespace efk {

struct TreeCenter {
    std::vector<Vertex> centers;           // one vertex, or two adjacent ones
    std::vector<std::size_t> eccentricity; // e(v) per vertex
    std::size_t diameter = 0;
    std::size_t radius = 0;
};

/// Throws NotATree.
TreeCenter tree_center(const ColoredGraph& t);

/// Canonical code of the tree rooted at `root`: equal codes iff the rooted
/// colored trees are isomorphic.
std::string rooted_code(const ColoredGraph& t, Vertex root);

/// Largest number of pairwise isomorphic branches at a single vertex.
/// Requires at least two vertices.
std::size_t branching_index(const ColoredGraph& t);

/// Least-id vertex all of whose branches have at most n/2 vertices.
Vertex separator(const ColoredGraph& t);

struct Truncation {
    ColoredGraph tree;
    std::vector<Vertex> original; // new id -> id in the input tree
};

/// T mod k: working from the highest level down, every class of isomorphic
/// upward branches at a vertex is cut back to its k lowest-id members.
Truncation truncate(const ColoredGraph& t, int k);

} // namespace efk
