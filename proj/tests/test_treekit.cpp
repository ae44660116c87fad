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

#include <doctest.h>

#include "efkit/error.hpp"
#include "efkit/game.hpp"
#include "efkit/generators.hpp"
#include "efkit/reference.hpp"
#include "efkit/treekit.hpp"

#include <map>
#include <random>
#include <set>

using namespace efk;

namespace {

ColoredGraph path(int n) { return named_graph(NamedFamily::path, n); }
ColoredGraph star(int n) { return named_graph(NamedFamily::star, n); }

ColoredGraph random_tree(std::mt19937& rng, std::size_t n, int palette)
{
    std::vector<std::string> colors;
    for (std::size_t v = 0; v < n; ++v)
        colors.push_back(palette <= 1 ? std::string(kNoColor) : "c" + std::to_string(rng() % unsigned(palette)));
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(Vertex(rng() % v), v);
    return ColoredGraph(std::move(colors), std::move(edges));
}

ColoredGraph mark_root(const ColoredGraph& t, Vertex root)
{
    auto colors = t.colors();
    colors[root] += "#root";
    return ColoredGraph(std::move(colors), t.edges());
}

} // namespace

TEST_CASE("tree centers")
{
    auto c = tree_center(path(4));
    CHECK(c.centers == std::vector<Vertex>{1, 2});
    CHECK(c.diameter == 3);
    CHECK(c.radius == 2);
    c = tree_center(star(6));
    CHECK(c.centers == std::vector<Vertex>{0});
    c = tree_center(path(7));
    CHECK(c.centers == std::vector<Vertex>{3});
    CHECK(c.radius == 3);
    CHECK(c.diameter == 6);
    CHECK(c.eccentricity[0] == 6);
    CHECK(tree_center(path(1)).centers == std::vector<Vertex>{0});
    try {
        tree_center(named_graph(NamedFamily::cycle, 4));
        FAIL("expected NotATree");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotATree);
    }
}

TEST_CASE("rooted codes")
{
    CHECK(rooted_code(path(3), 1) != rooted_code(path(3), 0));
    CHECK(rooted_code(path(3), 0) == rooted_code(path(3), 2));
    auto a = colored_tree_pair(1).h, b = colored_tree_pair(1).h;
    CHECK(rooted_code(a, 0) == rooted_code(b, 0));
    const auto cherry = ColoredGraph::uncolored(3, {{0, 1}, {0, 2}});
    const auto rooted_path = ColoredGraph::uncolored(3, {{0, 1}, {1, 2}});
    CHECK(rooted_code(cherry, 0) != rooted_code(rooted_path, 0));
    // Colour names cannot run into each other.
    CHECK(rooted_code(ColoredGraph({"a", "b"}, {{0, 1}}), 0) != rooted_code(ColoredGraph({"a(1:b", "x"}, {{0, 1}}), 0));
}

TEST_CASE("rooted codes agree with brute-force isomorphism")
{
    for (int n = 1; n <= 7; ++n) {
        std::vector<ColoredGraph> rooted;
        std::vector<std::string> codes;
        for (const auto& shape : reference::trees_up_to_iso(n)) {
            const int colorings = n <= 6 ? (1 << n) : 24;
            for (int mask = 0; mask < colorings; ++mask) {
                std::vector<std::string> colors;
                const int bits = n <= 6 ? mask : mask * 5 + 3;
                for (int v = 0; v < n; ++v)
                    colors.push_back((bits >> v) & 1 ? "red" : "none");
                const ColoredGraph t(colors, shape.edges());
                for (Vertex r = 0; r < Vertex(n); ++r) {
                    rooted.push_back(mark_root(t, r));
                    codes.push_back(rooted_code(t, r));
                }
            }
        }
        std::map<std::string, std::size_t> rep;
        for (std::size_t i = 0; i < rooted.size(); ++i) {
            auto [it, fresh] = rep.try_emplace(codes[i], i);
            if (!fresh)
                CHECK(reference::isomorphic(rooted[i], rooted[it->second]));
        }
        std::vector<std::size_t> reps;
        for (auto& [code, i] : rep)
            reps.push_back(i);
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = a + 1; b < reps.size(); ++b)
                CHECK_FALSE(reference::isomorphic(rooted[reps[a]], rooted[reps[b]]));
    }
}

TEST_CASE("lift recursion via rooted codes")
{
    for (int i = 1; i <= 2; ++i) {
        const auto cur = colored_tree_pair(i), next = colored_tree_pair(i + 1);
        auto branch_codes = [](const ColoredGraph& g) {
            std::vector<Vertex> keep;
            for (Vertex v = 1; v < g.size(); ++v)
                keep.push_back(v);
            const auto rest = induced_subgraph(g, keep);
            std::multiset<std::string> out;
            for (const auto& comp : connected_components(rest))
                out.insert(rooted_code(induced_subgraph(rest, comp), 0));
            return out;
        };
        const auto gc = rooted_code(cur.g, 0), hc = rooted_code(cur.h, 0);
        CHECK(branch_codes(next.h) == std::multiset<std::string>{gc, gc, gc});
        CHECK(branch_codes(next.g) == std::multiset<std::string>{gc, gc, hc});
    }
}

TEST_CASE("branching index and separator")
{
    CHECK(branching_index(star(6)) == 5);
    CHECK(branching_index(path(4)) == 1);
    CHECK(branching_index(colored_tree_pair(1).g) == 2);
    CHECK(branching_index(path(2)) == 1);
    CHECK(separator(path(7)) == 3);
    CHECK(separator(star(6)) == 0);
    CHECK(separator(path(4)) == 1);

    std::mt19937 rng(4);
    for (int t = 0; t < 200; ++t) {
        const auto tree = random_tree(rng, 1 + rng() % 30, 2);
        const Vertex s = separator(tree);
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < tree.size(); ++v)
            if (v != s)
                rest.push_back(v);
        for (const auto& comp : connected_components(induced_subgraph(tree, rest)))
            CHECK(2 * comp.size() <= tree.size());
    }
}

TEST_CASE("truncation")
{
    auto t = truncate(star(6), 2);
    CHECK(t.tree.size() == 3);
    CHECK(reference::isomorphic(t.tree, path(3)));
    CHECK(t.original == std::vector<Vertex>{0, 1, 2});
    CHECK(truncate(path(7), 2).tree == path(7));

    std::mt19937 rng(8);
    for (int s = 0; s < 150; ++s) {
        const auto tree = random_tree(rng, 2 + rng() % 40, 1 + int(rng() % 2));
        for (int k = 2; k <= 4; ++k) {
            const auto cut = truncate(tree, k);
            if (cut.tree.size() >= 2)
                CHECK(branching_index(cut.tree) <= std::size_t(k));
            CHECK(is_tree(cut.tree));
            CHECK(truncate(cut.tree, k).tree == cut.tree);
            for (Vertex v = 0; v < cut.tree.size(); ++v)
                CHECK(cut.tree.color(v) == tree.color(cut.original[v]));
            for (auto [u, v] : cut.tree.edges())
                CHECK(tree.adjacent(cut.original[u], cut.original[v]));
        }
    }
}

TEST_CASE("truncation preserves the game value")
{
    std::mt19937 rng(12);
    for (int s = 0; s < 8; ++s) {
        const auto tree = random_tree(rng, 5 + rng() % 4, 2);
        const auto partner = random_tree(rng, 4 + rng() % 4, 2);
        const auto cut = truncate(tree, 2).tree;
        CHECK(distinguishing_depth(tree, partner, GameMode::full(2)) ==
              distinguishing_depth(cut, partner, GameMode::full(2)));
    }
}
