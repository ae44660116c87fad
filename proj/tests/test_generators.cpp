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
#include "efkit/generators.hpp"
#include "efkit/graph_io.hpp"
#include "efkit/reference.hpp"

#include <algorithm>
#include <cmath>

using namespace efk;

namespace {

std::size_t count_color(const ColoredGraph& g, const std::string& color)
{
    return std::size_t(std::count(g.colors().begin(), g.colors().end(), color));
}

std::vector<std::size_t> degree_sequence(const ColoredGraph& g)
{
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.size(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

std::size_t ipow(std::size_t b, int e)
{
    std::size_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

TEST_CASE("lift_pair level 0 and level 1 on single vertices")
{
    const ColoredGraph red({"red"}, {}), blue({"blue"}, {});
    auto zero = lift_pair(red, blue, 0);
    CHECK(zero.g == red);
    CHECK(zero.h == blue);

    auto one = lift_pair(red, blue, 1);
    REQUIRE(one.g.size() == 4);
    REQUIRE(one.h.size() == 4);
    CHECK(one.g.color(0) == kGray);
    CHECK(one.g.degree(0) == 3);
    CHECK(count_color(one.g, "red") == 1);
    CHECK(count_color(one.g, "blue") == 2);
    CHECK(count_color(one.h, "blue") == 3);
    CHECK(lift_pair(red, blue, 2).g.size() == 13);
    CHECK(lift_pair(red, blue, 2).h.size() == 13);

    CHECK_THROWS_AS(lift_pair(ColoredGraph({kGray}, {}), blue, 1), Error);
}

TEST_CASE("colored and uncolored tree pairs have the documented sizes")
{
    for (int i = 1; i <= 4; ++i) {
        auto p = colored_tree_pair(i);
        const std::size_t n = ipow(3, i) + (ipow(3, i) - 1) / 2;
        CHECK(p.g.size() == n);
        CHECK(p.h.size() == n);
        CHECK(is_tree(p.g));
        CHECK(is_tree(p.h));
    }
    for (int k = 3; k <= 5; ++k)
        for (int i = 1; i <= 2; ++i) {
            auto p = uncolored_tree_pair(k, i);
            const std::size_t b = std::size_t(k) + 1;
            const std::size_t n = 3 * ipow(b, i) + (ipow(b, i) - 1) / std::size_t(k);
            CHECK(p.g.size() == n);
            CHECK(p.h.size() == n);
            CHECK(is_tree(p.g));
            CHECK(is_tree(p.h));
            CHECK(p.g.is_uncolored());
            CHECK(p.h.is_uncolored());
            CHECK(p.g.degree(0) == b);
        }
    CHECK(uncolored_tree_pair(3, 1).g.size() == 13);
    CHECK(uncolored_tree_pair(3, 2).g.size() == 53);
    CHECK(uncolored_tree_pair(4, 1).g.size() == 16);
}

TEST_CASE("lift recursion: root removal yields the expected branches")
{
    auto p1 = colored_tree_pair(1);
    auto p2 = colored_tree_pair(2);
    auto branches = [](const ColoredGraph& g) {
        std::vector<Vertex> keep;
        for (Vertex v = 1; v < g.size(); ++v)
            keep.push_back(v);
        const auto rest = induced_subgraph(g, keep);
        std::vector<ColoredGraph> out;
        for (const auto& comp : connected_components(rest))
            out.push_back(induced_subgraph(rest, comp));
        return out;
    };
    const auto hb = branches(p2.h);
    REQUIRE(hb.size() == 3);
    for (const auto& b : hb)
        CHECK(reference::isomorphic(b, p1.g));
    const auto gb = branches(p2.g);
    REQUIRE(gb.size() == 3);
    int like_g = 0, like_h = 0;
    for (const auto& b : gb) {
        like_g += reference::isomorphic(b, p1.g);
        like_h += reference::isomorphic(b, p1.h);
    }
    CHECK(like_g == 2);
    CHECK(like_h == 1);
}

TEST_CASE("ladder pair")
{
    for (int m = 2; m <= 5; ++m) {
        auto halves = ladder_halves(m);
        auto p = ladder_pair(m);
        CHECK(p.g.size() == std::size_t(8 * m - 4));
        CHECK(p.h.size() == std::size_t(8 * m - 4));
        CHECK(halves.g.size() == std::size_t(4 * m - 2));
        CHECK(count_color(halves.g, "green") == 2);
        CHECK(count_color(halves.g, "red") == 1);
        CHECK(count_color(halves.g, "cyan") == 1);
        CHECK(halves.g.edges().size() == halves.h.edges().size());
        // The gluings differ only at the green rung: away from it the degrees agree.
        auto g_deg = degree_sequence(halves.g), h_deg = degree_sequence(halves.h);
        CHECK(g_deg != h_deg);
        CHECK(halves.g.degree(Vertex(2 * (m - 1))) == 4);
        CHECK(halves.h.degree(Vertex(2 * (m - 1))) == 3);
        CHECK(halves.h.degree(Vertex(2 * (m - 1) + 1)) == 3);
        CHECK_FALSE(reference::isomorphic(halves.g, halves.h));
        const auto comps = connected_components(p.g);
        REQUIRE(comps.size() == 2);
        CHECK(reference::isomorphic(induced_subgraph(p.g, comps[0]), induced_subgraph(p.g, comps[1])));
    }
}

TEST_CASE("cycle pairs")
{
    for (int m = 2; m <= 5; ++m) {
        auto p = cycle_pair(m);
        CHECK(p.g.size() == std::size_t(6 * m - 2));
        CHECK(p.h.size() == std::size_t(8 * m - 1));
        CHECK(count_color(p.g, "dandelion") == 1);
        CHECK(count_color(p.h, "dandelion") == std::size_t(2 * m - 1));
    }
    auto padded = padded_cycle_pair(3);
    CHECK(padded.g.size() == 23);
    CHECK(padded.h.size() == 23);
    CHECK(padded_cycle_pair(6).g.size() == 47);
    CHECK(padded_cycle_pair(6).h.size() == 47);
    try {
        padded_cycle_pair(4);
        FAIL("expected NotMultipleOfThree");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotMultipleOfThree);
    }

    auto s1 = succinct_cycle_pair(2, 1);
    CHECK(s1.g.size() == 41);
    CHECK(s1.h.size() == 46);
    CHECK(succinct_cycle_pair(2, 2).g.size() == 129);
    auto base = succinct_cycle_base(2);
    std::vector<Vertex> dand;
    for (Vertex v = 0; v < base.h.size(); ++v)
        if (base.h.color(v) == "dandelion")
            dand.push_back(v);
    REQUIRE(dand.size() == 3);
    for (auto a : dand)
        for (auto b : dand)
            if (a != b)
                CHECK(base.h.adjacent(a, b));
}

TEST_CASE("named graphs")
{
    auto p4 = named_graph(NamedFamily::path, 4);
    CHECK(p4.edges().size() == 3);
    auto w5 = named_graph(NamedFamily::wheel, 5);
    CHECK(w5.size() == 5);
    CHECK(vertex_class(w5, 0) == VertexClass::universal);
    CHECK(named_graph(NamedFamily::star, 6).degree(0) == 5);
    CHECK(named_graph(NamedFamily::complete, 5).edges().size() == 10);
    CHECK(named_graph(NamedFamily::empty, 3).edges().empty());
    try {
        named_graph(NamedFamily::cycle, 2);
        FAIL("expected SizeTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SizeTooSmall);
    }
    CHECK(parse_named_family("wheel") == NamedFamily::wheel);
    CHECK_THROWS_AS(parse_named_family("petersen"), Error);
}

TEST_CASE("generators are deterministic")
{
    CHECK(serialize_graph(ladder_pair(4).h) == serialize_graph(ladder_pair(4).h));
    CHECK(serialize_graph(succinct_cycle_pair(2, 1).g) == serialize_graph(succinct_cycle_pair(2, 1).g));
    CHECK(serialize_graph(generate({FamilySpec::Family::uncolored_tree, {3, 1}}).g) ==
          serialize_graph(uncolored_tree_pair(3, 1).g));
}
