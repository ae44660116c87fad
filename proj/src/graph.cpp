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

#include "efkit/graph.hpp"

#include "efkit/error.hpp"

#include <algorithm>
#include <numeric>

namespace efk {

const char* to_string(VertexClass c) noexcept
{
    switch (c) {
    case VertexClass::isolated: return "isolated";
    case VertexClass::universal: return "universal";
    case VertexClass::other: return "other";
    }
    return "other";
}

ColoredGraph::ColoredGraph(std::vector<std::string> colors, std::vector<Edge> edges)
    : colors_(std::move(colors))
{
    const std::size_t n = colors_.size();
    for (auto& [u, v] : edges) {
        if (u == v)
            throw Error(Errc::SelfLoop, "edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
        if (u >= n || v >= n)
            throw Error(Errc::EndpointOutOfRange,
                        "edge [" + std::to_string(u) + "," + std::to_string(v) + "] with n=" + std::to_string(n));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(n, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());

    if (n <= kDenseLimit) {
        dense_.assign(n * n, 0);
        for (auto [u, v] : edges_) {
            dense_[u * n + v] = 1;
            dense_[v * n + u] = 1;
        }
    }
}

ColoredGraph ColoredGraph::uncolored(std::size_t n, std::vector<Edge> edges)
{
    return ColoredGraph(std::vector<std::string>(n, kNoColor), std::move(edges));
}

bool ColoredGraph::adjacent(Vertex u, Vertex v) const
{
    const std::size_t n = size();
    if (!dense_.empty() || n == 0)
        return n != 0 && dense_[std::size_t(u) * n + v] != 0;
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

bool ColoredGraph::is_uncolored() const noexcept
{
    return std::all_of(colors_.begin(), colors_.end(), [](const std::string& c) { return c == kNoColor; });
}

ColoredGraph validate(const RawGraph& raw)
{
    std::int64_t n = raw.n ? *raw.n : std::int64_t(raw.vertices.size());
    if (n < 0)
        throw Error(Errc::OutOfRange, "negative vertex count");

    std::vector<std::optional<std::string>> colors(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& rv : raw.vertices) {
        if (rv.id < 0 || rv.id >= n)
            throw Error(Errc::EndpointOutOfRange, "vertex id " + std::to_string(rv.id));
        if (seen[std::size_t(rv.id)])
            throw Error(Errc::DuplicateVertexId, "vertex id " + std::to_string(rv.id));
        seen[std::size_t(rv.id)] = true;
        colors[std::size_t(rv.id)] = rv.color.value_or(kNoColor);
    }
    // An explicit vertex list must cover every id; a bare count means all "none".
    std::vector<std::string> final_colors;
    final_colors.reserve(std::size_t(n));
    for (std::int64_t v = 0; v < n; ++v) {
        if (!colors[std::size_t(v)]) {
            if (!raw.vertices.empty())
                throw Error(Errc::MissingColor, "vertex " + std::to_string(v) + " not listed");
            final_colors.emplace_back(kNoColor);
        } else {
            final_colors.push_back(*colors[std::size_t(v)]);
        }
    }

    std::vector<Edge> edges;
    edges.reserve(raw.edges.size());
    for (auto [a, b] : raw.edges) {
        if (a == b)
            throw Error(Errc::SelfLoop, "edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw Error(Errc::EndpointOutOfRange,
                        "edge [" + std::to_string(a) + "," + std::to_string(b) + "] with n=" + std::to_string(n));
        edges.emplace_back(Vertex(a), Vertex(b));
    }
    return ColoredGraph(std::move(final_colors), std::move(edges));
}

ColoredGraph complement(const ColoredGraph& g)
{
    const auto n = Vertex(g.size());
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return ColoredGraph(g.colors(), std::move(edges));
}

ColoredGraph disjoint_union(const ColoredGraph& g, const ColoredGraph& h)
{
    auto colors = g.colors();
    colors.insert(colors.end(), h.colors().begin(), h.colors().end());
    auto edges = g.edges();
    const auto shift = Vertex(g.size());
    for (auto [u, v] : h.edges())
        edges.emplace_back(u + shift, v + shift);
    return ColoredGraph(std::move(colors), std::move(edges));
}

VertexClass vertex_class(const ColoredGraph& g, Vertex v)
{
    if (v >= g.size())
        throw Error(Errc::OutOfRange, "vertex " + std::to_string(v));
    const std::size_t d = g.degree(v);
    if (d == 0)
        return VertexClass::isolated;
    if (d + 1 == g.size())
        return VertexClass::universal;
    return VertexClass::other;
}

std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g)
{
    const std::size_t n = g.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        const int id = int(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            out.back().push_back(u);
            for (Vertex w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const ColoredGraph& g)
{
    return g.size() == 0 || connected_components(g).size() == 1;
}

ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> keep)
{
    std::vector<std::int64_t> index(g.size(), -1);
    std::vector<std::string> colors;
    colors.reserve(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        index.at(keep[i]) = std::int64_t(i);
        colors.push_back(g.color(keep[i]));
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0)
            edges.emplace_back(Vertex(index[u]), Vertex(index[v]));
    return ColoredGraph(std::move(colors), std::move(edges));
}

bool is_tree(const ColoredGraph& g)
{
    return g.size() >= 1 && g.edges().size() + 1 == g.size() && is_connected(g);
}

ColoredGraph recolor_all(const ColoredGraph& g, const std::string& color)
{
    return ColoredGraph(std::vector<std::string>(g.size(), color), g.edges());
}

} // namespace efk
