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

#include <random>

using namespace efk;

namespace {

const ColoredGraph kRedBlue({"red", "blue", "blue"}, {});
const ColoredGraph kAllBlue({"blue", "blue", "blue"}, {});
const ColoredGraph kK2 = ColoredGraph::uncolored(2, {{0, 1}});
const ColoredGraph kTwoK1 = ColoredGraph::uncolored(2, {});

ColoredGraph random_graph(std::mt19937& rng, std::size_t n, double p, int palette)
{
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<int> pick(0, palette - 1);
    std::vector<std::string> colors;
    for (std::size_t v = 0; v < n; ++v)
        colors.push_back(palette == 1 ? std::string(kNoColor) : "c" + std::to_string(pick(rng)));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return ColoredGraph(std::move(colors), std::move(edges));
}

std::optional<unsigned> as_optional(NatInf v)
{
    return v.is_inf() ? std::nullopt : std::optional<unsigned>(unsigned(v.value()));
}

std::uint64_t round_bound(const ColoredGraph& g, const ColoredGraph& h, int k)
{
    std::uint64_t b = 1;
    for (int j = 0; j + 1 < k; ++j)
        b *= g.size() * h.size();
    return b + 1;
}

} // namespace

TEST_CASE("check_partial_iso")
{
    CHECK(check_partial_iso(kRedBlue, kAllBlue, {std::nullopt, std::nullopt}));
    CHECK_FALSE(check_partial_iso(kRedBlue, kAllBlue, {SlotPair{0, 2}, std::nullopt}));
    CHECK(check_partial_iso(kRedBlue, kAllBlue, {SlotPair{1, 2}, SlotPair{2, 0}}));
    CHECK_FALSE(check_partial_iso(kK2, kTwoK1, {SlotPair{0, 0}, SlotPair{1, 1}}));
    // Equality must be preserved both ways.
    CHECK_FALSE(check_partial_iso(kK2, kTwoK1, {SlotPair{0, 0}, SlotPair{0, 1}}));
    CHECK(check_partial_iso(kK2, kTwoK1, {SlotPair{0, 0}, SlotPair{0, 0}}));
}

TEST_CASE("mode parsing")
{
    CHECK(parse_mode("full", 2).variant == GameMode::Variant::full);
    const auto s = parse_mode("sigma:3", 2);
    CHECK(s.variant == GameMode::Variant::sigma);
    CHECK(s.alternations == 3);
    CHECK(parse_mode("pi:1", 3).str() == "pi:1");
    CHECK_THROWS_AS(parse_mode("sigma:0", 2), Error);
    CHECK_THROWS_AS(parse_mode("both", 2), Error);
}

TEST_CASE("solver on the introductory examples")
{
    CHECK(distinguishing_depth(kRedBlue, kAllBlue, GameMode::sigma(2, 1)) == NatInf(1));
    CHECK(distinguishing_depth(kRedBlue, kAllBlue, GameMode::pi(2, 1)).is_inf());
    CHECK(distinguishing_depth(kK2, kTwoK1, GameMode::full(2)) == NatInf(2));
    CHECK(reference::minimax_depth(kK2, kTwoK1, GameMode::full(2), 4) == 2u);

    const auto c5 = named_graph(NamedFamily::cycle, 5);
    CHECK(distinguishing_depth(c5, c5, GameMode::full(2)).is_inf());
    CHECK(alternation_number(c5, c5, 2).is_inf());
}

TEST_CASE("value table invariants")
{
    const auto table = solve(kK2, kTwoK1, GameMode::full(2));
    CHECK(table.root_value() == NatInf(2));
    CHECK(table.value(table.root_position()) == NatInf(2));
    std::uint64_t finite_max = 0;
    // Walk every position reachable in two rounds and check the recurrence.
    auto check = [&](const GamePosition& p) {
        const auto v = table.value(p);
        CHECK((v == NatInf(0)) == !table.is_partial_iso(p));
        if (v == NatInf(0))
            return;
        NatInf best = NatInf::inf();
        for (const auto& m : table.legal_moves(p)) {
            NatInf worst(0);
            const std::size_t replies = m.side == Side::G ? kTwoK1.size() : kK2.size();
            for (Vertex y = 0; y < replies; ++y)
                worst = std::max(worst, table.value(table.apply(p, m, y)));
            CHECK(table.move_value(p, m) == worst + NatInf(1));
            best = std::min(best, worst + NatInf(1));
        }
        CHECK(v == best);
        if (!v.is_inf())
            finite_max = std::max<std::uint64_t>(finite_max, v.value());
    };
    const auto root = table.root_position();
    check(root);
    for (const auto& m : table.legal_moves(root))
        for (Vertex y = 0; y < 2; ++y) {
            const auto p = table.apply(root, m, y);
            check(p);
            for (const auto& m2 : table.legal_moves(p))
                for (Vertex y2 = 0; y2 < 2; ++y2)
                    check(table.apply(p, m2, y2));
        }
    CHECK(finite_max <= table.position_count());
}

TEST_CASE("bounded-mode move legality")
{
    const auto table = solve(kRedBlue, kAllBlue, GameMode::sigma(2, 2));
    const auto root = table.root_position();
    for (const auto& m : table.legal_moves(root))
        CHECK(m.side == Side::G);
    const auto after = table.apply(root, {0, Side::G, 1}, 0);
    CHECK(after.jumps_left == 1);
    const auto jumped = table.apply(after, {1, Side::H, 2}, 2);
    CHECK(jumped.jumps_left == 0);
    bool any_h = false;
    for (const auto& m : table.legal_moves(jumped))
        any_h = any_h || m.side == Side::G;
    CHECK_FALSE(any_h);
}

TEST_CASE("solver matches exhaustive minimax on small graphs")
{
    std::vector<ColoredGraph> corpus;
    for (int n = 1; n <= 3; ++n)
        for (auto& g : reference::graphs_up_to_iso(n))
            corpus.push_back(g);
    const std::vector<GameMode> modes = {GameMode::full(2), GameMode::sigma(2, 1), GameMode::pi(2, 1),
                                         GameMode::sigma(2, 2), GameMode::pi(2, 2)};
    for (const auto& g : corpus)
        for (const auto& h : corpus)
            for (const auto& mode : modes) {
                const auto mine = as_optional(distinguishing_depth(g, h, mode));
                const auto theirs = reference::minimax_depth(g, h, mode, 8);
                CHECK(mine == theirs);
            }

    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
        const auto g = random_graph(rng, 3, 0.5, 2);
        const auto h = random_graph(rng, 3, 0.5, 2);
        for (auto mode : {GameMode::full(3), GameMode::sigma(3, 1), GameMode::pi(3, 2)})
            CHECK(as_optional(distinguishing_depth(g, h, mode)) == reference::minimax_depth(g, h, mode, 8));
    }

    // The continuous restriction against the same oracle.
    auto mode = GameMode::sigma(2, 1);
    mode.continuous = true;
    const auto p4 = named_graph(NamedFamily::path, 4);
    const auto star = named_graph(NamedFamily::star, 4);
    CHECK(as_optional(distinguishing_depth(p4, star, mode)) == reference::minimax_depth(p4, star, mode, 8));
}

TEST_CASE("duality, symmetry and monotonicity")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        const auto g = random_graph(rng, 2 + rng() % 4, 0.5, 1 + int(rng() % 2));
        const auto h = random_graph(rng, 2 + rng() % 4, 0.5, 1 + int(rng() % 2));
        const auto full = distinguishing_depth(g, h, GameMode::full(2));
        CHECK(full == distinguishing_depth(h, g, GameMode::full(2)));
        NatInf prev = NatInf::inf();
        for (int i = 1; i <= 3; ++i) {
            const auto s = distinguishing_depth(g, h, GameMode::sigma(2, i));
            const auto p = distinguishing_depth(g, h, GameMode::pi(2, i));
            CHECK(s == distinguishing_depth(h, g, GameMode::pi(2, i)));
            CHECK(s <= prev);
            CHECK(full <= s);
            CHECK(full <= p);
            for (auto v : {s, p})
                if (!v.is_inf())
                    CHECK(v.value() <= round_bound(g, h, 2));
            prev = s;
        }
        CHECK(distinguishing_depth(g, h, GameMode::full(3)) <= full);
        const auto a = alternation_number(g, h, 2);
        CHECK(a.is_inf() == full.is_inf());
        if (!full.is_inf())
            CHECK(a <= full);
    }
}

TEST_CASE("small-family values")
{
    auto p2 = colored_tree_pair(2);
    CHECK(distinguishing_depth(p2.g, p2.h, GameMode::sigma(2, 2)) <= NatInf(2));
    CHECK(distinguishing_depth(p2.g, p2.h, GameMode::pi(2, 2)).is_inf());
    auto ladder = ladder_pair(3);
    CHECK(alternation_number(ladder.g, ladder.h, 2) == NatInf(2));
    const auto c6 = named_graph(NamedFamily::cycle, 6);
    const auto w6 = named_graph(NamedFamily::wheel, 6);
    CHECK(alternation_number(c6, w6, 2) == NatInf(2));
}

TEST_CASE("spoiler strategy")
{
    const auto red_blue = extract_spoiler_strategy(solve(kRedBlue, kAllBlue, GameMode::sigma(2, 1)));
    const auto first = red_blue.move(red_blue.table().root_position());
    REQUIRE(first);
    CHECK(first->side == Side::G);
    CHECK(first->vertex == 0);

    const auto k2 = extract_spoiler_strategy(solve(kK2, kTwoK1, GameMode::full(2)));
    const auto root = k2.table().root_position();
    const auto m1 = k2.move(root);
    REQUIRE(m1);
    CHECK(m1->side == Side::G);
    for (Vertex y = 0; y < 2; ++y) {
        const auto p = k2.table().apply(root, *m1, y);
        const auto m2 = k2.move(p);
        REQUIRE(m2);
        CHECK(m2->side == Side::G);
        CHECK(m2->slot != m1->slot);
        CHECK(kK2.adjacent(m1->vertex, m2->vertex));
    }
    CHECK(reference::worst_case_replay(k2, 8) == 2u);

    try {
        extract_spoiler_strategy(solve(kK2, kK2, GameMode::full(2)));
        FAIL("expected NotDistinguishable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotDistinguishable);
    }
}

TEST_CASE("strategy replay wins in exactly the root value")
{
    std::mt19937 rng(3);
    int checked = 0;
    for (int t = 0; t < 60 && checked < 25; ++t) {
        const auto g = random_graph(rng, 2 + rng() % 4, 0.5, 2);
        const auto h = random_graph(rng, 2 + rng() % 4, 0.5, 2);
        const auto mode = t % 3 == 0 ? GameMode::full(2) : t % 3 == 1 ? GameMode::sigma(2, 2) : GameMode::pi(2, 1);
        const auto table = solve(g, h, mode);
        if (table.root_value().is_inf())
            continue;
        ++checked;
        const auto strategy = extract_spoiler_strategy(table);
        const auto root_value = unsigned(table.root_value().value());
        CHECK(reference::worst_case_replay(strategy, root_value + 1) == root_value);
        for (int game = 0; game < 100; ++game) {
            auto p = table.root_position();
            unsigned rounds = 0;
            while (table.is_partial_iso(p) && rounds <= root_value) {
                const auto m = strategy.move(p);
                REQUIRE(m);
                const std::size_t replies = m->side == Side::G ? h.size() : g.size();
                p = table.apply(p, *m, Vertex(rng() % replies));
                ++rounds;
            }
            CHECK(rounds <= root_value);
        }
    }
    CHECK(checked >= 10);
}

TEST_CASE("resource limits and errors")
{
    auto mode = GameMode::full(3);
    mode.position_limit = 1000;
    const auto c6 = named_graph(NamedFamily::cycle, 6);
    try {
        solve(c6, c6, mode);
        FAIL("expected PositionLimitExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PositionLimitExceeded);
    }
    CHECK(estimate_positions(6, 6, GameMode::full(3)) == 37u * 37u * 37u);
    try {
        solve(ColoredGraph({}, {}), c6, GameMode::full(2));
        FAIL("expected EmptyGraph");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EmptyGraph);
    }
}
