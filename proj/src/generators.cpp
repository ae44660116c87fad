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

#include "efkit/generators.hpp"

#include "efkit/error.hpp"

#include <algorithm>

namespace efk {

namespace {

struct Builder {
    std::vector<std::string> colors;
    std::vector<Edge> edges;

    Vertex add(std::string color)
    {
        colors.push_back(std::move(color));
        return Vertex(colors.size() - 1);
    }

    /// Copies `g` in; returns the id of its vertex 0.
    Vertex append(const ColoredGraph& g)
    {
        const auto offset = Vertex(colors.size());
        colors.insert(colors.end(), g.colors().begin(), g.colors().end());
        for (auto [u, v] : g.edges())
            edges.emplace_back(u + offset, v + offset);
        return offset;
    }

    void link(Vertex u, Vertex v) { edges.emplace_back(u, v); }

    ColoredGraph build() { return ColoredGraph(std::move(colors), std::move(edges)); }
};

bool uses_color(const ColoredGraph& g, const std::string& color)
{
    return std::find(g.colors().begin(), g.colors().end(), color) != g.colors().end();
}

/// `odd` is the branch that differs between the two sides; `first_odd` puts
/// it in front of the regular copies.
ColoredGraph gadget(const ColoredGraph* odd, const ColoredGraph& regular, int branching,
                    const std::string& root_color, bool universal_root, bool first_odd)
{
    Builder b;
    const Vertex root = b.add(root_color);
    std::vector<std::pair<Vertex, Vertex>> spans; // [begin, end) of each copy
    auto put = [&](const ColoredGraph& part) {
        const Vertex begin = b.append(part);
        spans.emplace_back(begin, Vertex(begin + part.size()));
    };
    const int regular_copies = odd ? branching - 1 : branching;
    if (odd && first_odd)
        put(*odd);
    for (int c = 0; c < regular_copies; ++c)
        put(regular);
    if (odd && !first_odd)
        put(*odd);
    for (auto [begin, end] : spans) {
        if (universal_root) {
            for (Vertex v = begin; v < end; ++v)
                b.link(root, v);
        } else if (end > begin) {
            b.link(root, begin);
        }
    }
    return b.build();
}

GraphPair lift_impl(const ColoredGraph& g0, const ColoredGraph& h0, int level, int branching,
                    const std::string& root_color, bool universal_base)
{
    if (level < 0)
        throw Error(Errc::InvalidParameter, "lifting level must be >= 0");
    if (branching < 3)
        throw Error(Errc::InvalidParameter, "branching must be >= 3");
    GraphPair cur{g0, h0};
    for (int lv = 1; lv <= level; ++lv) {
        GraphPair next;
        if (lv == 1) {
            next.h = gadget(nullptr, cur.h, branching, root_color, universal_base, true);
            next.g = gadget(&cur.g, cur.h, branching, root_color, universal_base, true);
        } else {
            next.h = gadget(nullptr, cur.g, branching, root_color, false, false);
            next.g = gadget(&cur.h, cur.g, branching, root_color, false, false);
        }
        cur = std::move(next);
    }
    return cur;
}

ColoredGraph single(const std::string& color)
{
    return ColoredGraph({color}, {});
}

} // namespace

GraphPair lift_pair(const ColoredGraph& g0, const ColoredGraph& h0, int level, int branching)
{
    if (uses_color(g0, kGray) || uses_color(h0, kGray))
        throw Error(Errc::GrayCollision, "base graphs already use the reserved root color");
    return lift_impl(g0, h0, level, branching, kGray, true);
}

GraphPair colored_tree_pair(int level)
{
    if (level < 1)
        throw Error(Errc::InvalidParameter, "level must be >= 1");
    return lift_pair(single("red"), single("blue"), level, 3);
}

GraphPair uncolored_tree_pair(int k, int level)
{
    if (k < 3)
        throw Error(Errc::InvalidParameter, "k must be >= 3");
    if (level < 1)
        throw Error(Errc::InvalidParameter, "level must be >= 1");
    // Rooted at vertex 0: cherry rooted at its center, path rooted at an end.
    const auto cherry = ColoredGraph::uncolored(3, {{0, 1}, {0, 2}});
    const auto path = ColoredGraph::uncolored(3, {{0, 1}, {1, 2}});
    return lift_impl(cherry, path, level, k + 1, kNoColor, false);
}

GraphPair ladder_halves(int m)
{
    if (m < 2)
        throw Error(Errc::InvalidParameter, "ladder needs m >= 2 rungs");
    // Rungs 0..2m-2, vertex 2r is the left rail, 2r+1 the right rail.
    // Rung m-1 is green; the A part rises above it and ends in red/blue, the
    // B part hangs below it and ends in apricot/cyan. Going away from the
    // green rung, the diagonals alternate: first gap joins the green left
    // vertex with the right vertex one rung further, the next gap joins the
    // right vertex with the left vertex one rung further, and so on.
    const int rungs = 2 * m - 1;
    const int green = m - 1;
    auto build = [&](bool mirror_b) {
        Builder b;
        for (int r = 0; r < rungs; ++r) {
            std::string left = kNoColor, right = kNoColor;
            if (r == green) {
                left = right = "green";
            } else if (r == rungs - 1) {
                left = "red";
                right = "blue";
            } else if (r == 0) {
                left = "apricot";
                right = "cyan";
                if (mirror_b)
                    std::swap(left, right);
            }
            b.add(left);
            b.add(right);
        }
        auto id = [](int rung, int col) { return Vertex(2 * rung + col); };
        for (int r = 0; r + 1 < rungs; ++r) {
            b.link(id(r, 0), id(r + 1, 0));
            b.link(id(r, 1), id(r + 1, 1));
        }
        for (int g = 0; g + 1 < m; ++g) {
            // Gap g counted from the green rung: near rung at distance g, far at g+1.
            const int near_col = (g % 2 == 0) ? 0 : 1;
            const int far_col = 1 - near_col;
            b.link(id(green + g, near_col), id(green + g + 1, far_col));
            const int bn = mirror_b ? 1 - near_col : near_col;
            b.link(id(green - g, bn), id(green - g - 1, 1 - bn));
        }
        return b.build();
    };
    return {build(false), build(true)};
}

GraphPair ladder_pair(int m)
{
    auto halves = ladder_halves(m);
    return {disjoint_union(halves.g, halves.g), disjoint_union(halves.h, halves.h)};
}

namespace {

/// Cycle a_0 b_0 c_0 a_1 ... of `triples` colour triples; returns ids of a_i.
std::vector<Vertex> add_colored_cycle(Builder& b, int triples)
{
    static const char* kRotation[3] = {"apricot", "blue", "cyan"};
    const auto first = Vertex(b.colors.size());
    const int len = 3 * triples;
    for (int t = 0; t < len; ++t)
        b.add(kRotation[t % 3]);
    for (int t = 0; t < len; ++t)
        b.link(first + Vertex(t), first + Vertex((t + 1) % len));
    std::vector<Vertex> apricots;
    for (int i = 0; i < triples; ++i)
        apricots.push_back(first + Vertex(3 * i));
    return apricots;
}

} // namespace

GraphPair cycle_pair(int m)
{
    if (m < 2)
        throw Error(Errc::InvalidParameter, "cycle pair needs m >= 2");
    Builder g;
    const auto ga = add_colored_cycle(g, 2 * m - 1);
    g.link(ga[0], g.add("dandelion"));

    Builder h;
    const auto ha = add_colored_cycle(h, 2 * m);
    for (int i = 0; i < 2 * m; ++i)
        if (i != m)
            h.link(ha[std::size_t(i)], h.add("dandelion"));
    return {g.build(), h.build()};
}

GraphPair padded_cycle_pair(int m)
{
    if (m < 3 || m % 3 != 0)
        throw Error(Errc::NotMultipleOfThree, "padded cycle pair needs m >= 3 divisible by 3, got " + std::to_string(m));
    auto base = cycle_pair(m);
    Builder g;
    g.append(base.g);
    // 2m vertices in apricot/blue/cyan rotation; 2m is a multiple of 3 here.
    add_colored_cycle(g, 2 * m / 3);
    g.add("apricot");
    return {g.build(), std::move(base.h)};
}

GraphPair succinct_cycle_base(int m)
{
    auto base = cycle_pair(m);
    std::vector<Vertex> dandelions;
    for (Vertex v = 0; v < base.h.size(); ++v)
        if (base.h.color(v) == "dandelion")
            dandelions.push_back(v);
    auto edges = base.h.edges();
    for (std::size_t a = 0; a < dandelions.size(); ++a)
        for (std::size_t c = a + 1; c < dandelions.size(); ++c)
            edges.emplace_back(dandelions[a], dandelions[c]);
    return {std::move(base.g), ColoredGraph(base.h.colors(), std::move(edges))};
}

GraphPair succinct_cycle_pair(int m, int level)
{
    if (level < 1)
        throw Error(Errc::InvalidParameter, "level must be >= 1");
    auto base = succinct_cycle_base(m);
    return lift_pair(base.g, base.h, level, 3);
}

NamedFamily parse_named_family(const std::string& name)
{
    if (name == "path") return NamedFamily::path;
    if (name == "cycle") return NamedFamily::cycle;
    if (name == "star") return NamedFamily::star;
    if (name == "wheel") return NamedFamily::wheel;
    if (name == "complete") return NamedFamily::complete;
    if (name == "empty") return NamedFamily::empty;
    throw Error(Errc::InvalidParameter, "unknown named graph '" + name + "'");
}

ColoredGraph named_graph(NamedFamily family, int n)
{
    const int minimum = family == NamedFamily::cycle ? 3 : family == NamedFamily::wheel ? 4 : 1;
    if (n < minimum)
        throw Error(Errc::SizeTooSmall, "size " + std::to_string(n) + " below minimum " + std::to_string(minimum));
    std::vector<Edge> edges;
    auto nv = Vertex(n);
    switch (family) {
    case NamedFamily::path:
        for (Vertex v = 0; v + 1 < nv; ++v)
            edges.emplace_back(v, v + 1);
        break;
    case NamedFamily::cycle:
        for (Vertex v = 0; v < nv; ++v)
            edges.emplace_back(v, (v + 1) % nv);
        break;
    case NamedFamily::star:
        for (Vertex v = 1; v < nv; ++v)
            edges.emplace_back(0, v);
        break;
    case NamedFamily::wheel:
        // Hub 0 over the cycle 1..n-1.
        for (Vertex v = 1; v < nv; ++v) {
            edges.emplace_back(0, v);
            edges.emplace_back(v, v + 1 < nv ? v + 1 : 1);
        }
        break;
    case NamedFamily::complete:
        for (Vertex u = 0; u < nv; ++u)
            for (Vertex v = u + 1; v < nv; ++v)
                edges.emplace_back(u, v);
        break;
    case NamedFamily::empty:
        break;
    }
    return ColoredGraph::uncolored(std::size_t(n), std::move(edges));
}

FamilySpec::Family parse_family(const std::string& name)
{
    using F = FamilySpec::Family;
    if (name == "lift") return F::lift;
    if (name == "colored_tree" || name == "colored-tree") return F::colored_tree;
    if (name == "uncolored_tree" || name == "uncolored-tree") return F::uncolored_tree;
    if (name == "ladder") return F::ladder;
    if (name == "cycle") return F::cycle;
    if (name == "padded_cycle" || name == "padded-cycle") return F::padded_cycle;
    if (name == "succinct_cycle" || name == "succinct-cycle") return F::succinct_cycle;
    throw Error(Errc::InvalidParameter, "unknown family '" + name + "'");
}

GraphPair generate(const FamilySpec& spec)
{
    using F = FamilySpec::Family;
    auto need = [&](std::size_t count) {
        if (spec.params.size() != count)
            throw Error(Errc::InvalidParameter, "family expects " + std::to_string(count) + " integer parameter(s)");
    };
    switch (spec.family) {
    case F::colored_tree: need(1); return colored_tree_pair(spec.params[0]);
    case F::uncolored_tree: need(2); return uncolored_tree_pair(spec.params[0], spec.params[1]);
    case F::ladder: need(1); return ladder_pair(spec.params[0]);
    case F::cycle: need(1); return cycle_pair(spec.params[0]);
    case F::padded_cycle: need(1); return padded_cycle_pair(spec.params[0]);
    case F::succinct_cycle: need(2); return succinct_cycle_pair(spec.params[0], spec.params[1]);
    case F::lift: break;
    }
    throw Error(Errc::InvalidParameter, "the lift family needs explicit base graphs");
}

} // namespace efk
