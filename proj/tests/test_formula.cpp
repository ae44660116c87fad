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
#include "efkit/formula.hpp"
#include "efkit/generators.hpp"
#include "efkit/reference.hpp"

#include <map>
#include <random>

using namespace efk;
using namespace efk::fml;

namespace {

// Plain recursive semantics over an explicit variable map, no sharing.
bool naive(const FormulaNode& n, const ColoredGraph& g, std::map<int, Vertex>& a)
{
    switch (n.op) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Color: return g.color(a.at(n.x)) == n.label;
    case Op::NotColor: return g.color(a.at(n.x)) != n.label;
    case Op::Adj: return g.adjacent(a.at(n.x), a.at(n.y));
    case Op::NotAdj: return !g.adjacent(a.at(n.x), a.at(n.y));
    case Op::Eq: return a.at(n.x) == a.at(n.y);
    case Op::NotEq: return a.at(n.x) != a.at(n.y);
    case Op::And:
        for (const auto& c : n.children)
            if (!naive(*c, g, a))
                return false;
        return true;
    case Op::Or:
        for (const auto& c : n.children)
            if (naive(*c, g, a))
                return true;
        return false;
    case Op::Exists:
    case Op::Forall: {
        const bool ex = n.op == Op::Exists;
        auto saved = a.find(n.x) == a.end() ? std::optional<Vertex>() : std::optional<Vertex>(a[n.x]);
        bool result = !ex;
        for (Vertex v = 0; v < g.size(); ++v) {
            a[n.x] = v;
            if (naive(*n.children[0], g, a) == ex) {
                result = ex;
                break;
            }
        }
        if (saved)
            a[n.x] = *saved;
        else
            a.erase(n.x);
        return result;
    }
    }
    return false;
}

Formula random_formula(std::mt19937& rng, int depth, int vars, const std::vector<int>& bound)
{
    std::uniform_int_distribution<int> pick(0, 9);
    const int choice = depth == 0 || bound.empty() ? pick(rng) % 4 + (bound.empty() ? 6 : 0) : pick(rng);
    auto bvar = [&] { return bound[rng() % bound.size()]; };
    if (bound.empty() && choice < 6)
        return random_formula(rng, depth, vars, bound);
    switch (choice) {
    case 0: return rng() % 2 ? adj(bvar(), bvar()) : not_adj(bvar(), bvar());
    case 1: return rng() % 2 ? eq(bvar(), bvar()) : neq(bvar(), bvar());
    case 2: return rng() % 2 ? color(bvar(), "red") : not_color(bvar(), "red");
    case 3: return rng() % 5 == 0 ? top() : adj(bvar(), bvar());
    case 4:
    case 5: {
        std::vector<Formula> parts;
        const int count = 2 + int(rng() % 2);
        for (int i = 0; i < count; ++i)
            parts.push_back(random_formula(rng, depth, vars, bound));
        return choice == 4 ? conj(std::move(parts)) : disj(std::move(parts));
    }
    default: {
        if (depth == 0)
            return bottom();
        const int x = 1 + int(rng() % unsigned(vars));
        auto nb = bound;
        nb.push_back(x);
        auto body = random_formula(rng, depth - 1, vars, nb);
        return choice % 2 ? exists(x, body) : forall(x, body);
    }
    }
}

ColoredGraph random_graph(std::mt19937& rng, std::size_t n)
{
    std::vector<std::string> colors;
    for (std::size_t v = 0; v < n; ++v)
        colors.push_back(rng() % 2 ? "red" : "none");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() % 2)
                edges.emplace_back(u, v);
    return ColoredGraph(std::move(colors), std::move(edges));
}

} // namespace

TEST_CASE("fragment metrics")
{
    const auto phi1 = forall(2, disj({adj(2, 1), eq(2, 1)}));
    auto info = fragment_info(phi1);
    CHECK(info.qdepth == 1);
    CHECK(info.altdepth == 1);
    CHECK(info.pi_level == NatInf(1));
    CHECK(info.sigma_level == NatInf(2));

    const auto chain = exists(1, forall(2, exists(1, adj(1, 2))));
    info = fragment_info(chain);
    CHECK(info.altdepth == 3);
    CHECK(info.alternations() == 2);
    CHECK(info.sigma_level == NatInf(3));
    CHECK(info.pi_level == NatInf(4));

    info = fragment_info(adj(1, 2));
    CHECK(info.qdepth == 0);
    CHECK(info.altdepth == 0);
    CHECK(info.sigma_level == NatInf(1));
    CHECK(info.pi_level == NatInf(1));

    // Like quantifiers share a block.
    info = fragment_info(exists(1, exists(2, forall(1, adj(1, 2)))));
    CHECK(info.qdepth == 3);
    CHECK(info.altdepth == 2);
    CHECK(info.sigma_level == NatInf(2));
}

TEST_CASE("negation swaps the fragment levels")
{
    std::mt19937 rng(5);
    for (int t = 0; t < 300; ++t) {
        const auto f = random_formula(rng, 4, 3, {});
        const auto a = fragment_info(f), b = fragment_info(negate(f));
        CHECK(a.sigma_level == b.pi_level);
        CHECK(a.pi_level == b.sigma_level);
        CHECK(a.qdepth == b.qdepth);
        CHECK(a.altdepth <= a.qdepth);
    }
}

TEST_CASE("evaluate basics")
{
    const auto k2 = ColoredGraph::uncolored(2, {{0, 1}});
    const auto e2 = ColoredGraph::uncolored(2, {});
    const auto edge = exists(1, exists(2, adj(1, 2)));
    CHECK(evaluate(edge, k2));
    CHECK_FALSE(evaluate(edge, e2));
    // Variable reuse rebinds.
    const auto reuse = exists(1, exists(2, conj({adj(1, 2), exists(1, conj({adj(1, 2), neq(1, 2)}))})));
    CHECK(evaluate(reuse, named_graph(NamedFamily::path, 3)));
    try {
        evaluate(adj(1, 2), k2);
        FAIL("expected UnboundVariable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnboundVariable);
    }
    CHECK(evaluate(adj(1, 2), k2, {std::nullopt, Vertex(0), Vertex(1)}));
}

TEST_CASE("evaluate agrees with naive semantics")
{
    std::mt19937 rng(9);
    std::vector<ColoredGraph> graphs;
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t < 4; ++t)
            graphs.push_back(random_graph(rng, std::size_t(n)));
    for (int t = 0; t < 400; ++t) {
        const auto f = random_formula(rng, 3, 3, {});
        REQUIRE(free_variables(f).empty());
        for (const auto& g : graphs) {
            std::map<int, Vertex> a;
            CHECK(evaluate(f, g) == naive(*f, g, a));
            CHECK(evaluate(negate(f), g) != evaluate(f, g));
        }
    }
}

TEST_CASE("text round trip")
{
    std::mt19937 rng(21);
    for (int t = 0; t < 300; ++t) {
        const auto f = random_formula(rng, 4, 3, {});
        const auto text = serialize_formula(f);
        const auto back = parse_formula(text);
        CHECK(same_formula(f, back));
        CHECK(serialize_formula(back) == text);
    }
    const auto f = parse_formula("E x1 . col(x1,\"red\")");
    CHECK(same_formula(f, exists(1, color(1, "red"))));
    CHECK(serialize_formula(f) == "E x1 . col(x1,\"red\")");
    CHECK(same_formula(parse_formula(" A x2 . ( adj(x2,x1) | x2 = x1 ) "), forall(2, disj({adj(2, 1), eq(2, 1)}))));
    CHECK(same_formula(parse_formula("~col(x3,\"a\\\"b\")"), not_color(3, "a\"b")));

    for (const char* bad : {"E x1 x2", "adj(x1)", "x1 == x2", "(T & F", "E y1 . T", "T T", "~eq(x1,x2)", ""}) {
        try {
            parse_formula(bad);
            FAIL("expected ParseError for " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::ParseError);
            CHECK(std::string(e.what()).find("offset") != std::string::npos);
        }
    }
}

TEST_CASE("formulas synthesized from strategies")
{
    const ColoredGraph red_blue({"red", "blue", "blue"}, {}), blue({"blue", "blue", "blue"}, {});
    auto check_pair = [](const ColoredGraph& g, const ColoredGraph& h, const GameMode& mode) {
        const auto table = solve(g, h, mode);
        if (table.root_value().is_inf())
            return false;
        const auto f = formula_from_strategy(g, h, table, extract_spoiler_strategy(table));
        const auto info = fragment_info(f);
        CHECK(free_variables(f).empty());
        CHECK(evaluate(f, g));
        CHECK_FALSE(evaluate(f, h));
        CHECK(info.qdepth == table.root_value().value());
        if (mode.variant == GameMode::Variant::sigma)
            CHECK(info.sigma_level <= NatInf(std::uint64_t(mode.alternations)));
        if (mode.variant == GameMode::Variant::pi)
            CHECK(info.pi_level <= NatInf(std::uint64_t(mode.alternations)));
        return true;
    };
    CHECK(check_pair(red_blue, blue, GameMode::sigma(2, 1)));
    CHECK_FALSE(check_pair(red_blue, blue, GameMode::pi(2, 1)));
    const auto k2 = ColoredGraph::uncolored(2, {{0, 1}});
    const auto e2 = ColoredGraph::uncolored(2, {});
    CHECK(check_pair(k2, e2, GameMode::full(2)));
    {
        const auto table = solve(k2, e2, GameMode::full(2));
        const auto f = formula_from_strategy(k2, e2, table, extract_spoiler_strategy(table));
        CHECK(fragment_info(f).sigma_level == NatInf(1));
    }
    auto ladder = ladder_pair(3);
    CHECK(check_pair(ladder.g, ladder.h, GameMode::sigma(2, 2)));
    auto trees = colored_tree_pair(2);
    CHECK(check_pair(trees.g, trees.h, GameMode::sigma(2, 2)));

    std::mt19937 rng(17);
    int found = 0;
    for (int t = 0; t < 80; ++t) {
        const auto g = random_graph(rng, 2 + rng() % 4), h = random_graph(rng, 2 + rng() % 4);
        for (auto mode : {GameMode::full(2), GameMode::sigma(2, 1), GameMode::pi(2, 2), GameMode::sigma(3, 1)})
            found += check_pair(g, h, mode);
    }
    CHECK(found > 50);

    try {
        const auto table = solve(k2, k2, GameMode::full(2));
        formula_from_strategy(k2, k2, table, SpoilerStrategy(table));
        FAIL("expected NotDistinguishable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotDistinguishable);
    }
}
