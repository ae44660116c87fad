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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace efk {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr const char* kNoColor = "none";

enum class VertexClass { isolated, universal, other };

const char* to_string(VertexClass c) noexcept;

/// Unvalidated description of a graph, as read from a file or assembled by
/// hand. `validate` turns it into a ColoredGraph.
struct RawGraph {
    struct RawVertex {
        std::int64_t id = 0;
        std::optional<std::string> color;
    };
    /// When absent, the vertex count is the number of listed vertices.
    std::optional<std::int64_t> n;
    std::vector<RawVertex> vertices;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
};

/// Finite vertex-colored simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are stored once as (min, max) in
/// lexicographic order; adjacency queries are O(1) for graphs small enough to
/// keep a dense matrix and O(log deg) otherwise.
class ColoredGraph {
public:
    ColoredGraph() = default;

    /// Throws Error on any invariant violation (same checks as `validate`).
    ColoredGraph(std::vector<std::string> colors, std::vector<Edge> edges);

    /// Uncolored graph: every vertex gets "none".
    static ColoredGraph uncolored(std::size_t n, std::vector<Edge> edges);

    std::size_t size() const noexcept { return colors_.size(); }
    bool empty() const noexcept { return colors_.empty(); }

    const std::string& color(Vertex v) const { return colors_.at(v); }
    const std::vector<std::string>& colors() const noexcept { return colors_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    bool adjacent(Vertex u, Vertex v) const;

    /// True when every vertex carries the default color.
    bool is_uncolored() const noexcept;

    friend bool operator==(const ColoredGraph& a, const ColoredGraph& b)
    {
        return a.colors_ == b.colors_ && a.edges_ == b.edges_;
    }

private:
    static constexpr std::size_t kDenseLimit = 2048;

    std::vector<std::string> colors_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> dense_;
};

ColoredGraph validate(const RawGraph& raw);

ColoredGraph complement(const ColoredGraph& g);

/// Vertices of `h` are shifted by size(g).
ColoredGraph disjoint_union(const ColoredGraph& g, const ColoredGraph& h);

VertexClass vertex_class(const ColoredGraph& g, Vertex v);

/// The 0-vertex graph counts as connected.
bool is_connected(const ColoredGraph& g);

/// Connected components as ascending vertex lists, ordered by least member.
std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g);

/// Induced subgraph on `keep`; vertex i of the result is keep[i].
ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> keep);

bool is_tree(const ColoredGraph& g);

/// Same graph with every vertex recolored to `color`.
ColoredGraph recolor_all(const ColoredGraph& g, const std::string& color);

} // namespace efk
