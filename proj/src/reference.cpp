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

#include "efkit/reference.hpp"

#include "efkit/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace efk::reference {

namespace {

struct State {
    std::vector<int> u, v; // -1 when the pebble is off the board
    int last = -1;         // -1 none, 0 G, 1 H
    int jumps = 0;
};

class Minimax {
public:
    Minimax(const ColoredGraph& g, const ColoredGraph& h, const GameMode& mode) : g_(g), h_(h), mode_(mode) {}

    bool wins_within(const State& s, unsigned rounds)
    {
        if (!consistent(s))
            return true;
        if (rounds == 0)
            return false;
        const auto key = encode(s, rounds);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        bool result = false;
        for (int j = 0; j < mode_.k && !result; ++j) {
            for (int side = 0; side < 2 && !result; ++side) {
                int jumps = 0;
                if (!allowed(s, side, jumps))
                    continue;
                const std::size_t n = side == 0 ? g_.size() : h_.size();
                const std::size_t m = side == 0 ? h_.size() : g_.size();
                for (std::size_t x = 0; x < n && !result; ++x) {
                    if (mode_.continuous && !continuous(s, j, side, int(x)))
                        continue;
                    bool all = true;
                    for (std::size_t y = 0; y < m && all; ++y) {
                        State t = s;
                        t.u[std::size_t(j)] = side == 0 ? int(x) : int(y);
                        t.v[std::size_t(j)] = side == 0 ? int(y) : int(x);
                        t.last = side;
                        t.jumps = jumps;
                        all = wins_within(t, rounds - 1);
                    }
                    result = all;
                }
            }
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    bool allowed(const State& s, int side, int& jumps) const
    {
        if (mode_.variant == GameMode::Variant::full)
            return true;
        const int start = mode_.variant == GameMode::Variant::sigma ? 0 : 1;
        if (s.last < 0) {
            jumps = mode_.alternations - 1;
            return side == start;
        }
        if (side == s.last) {
            jumps = s.jumps;
            return true;
        }
        jumps = s.jumps - 1;
        return s.jumps > 0;
    }

    bool continuous(const State& s, int j, int side, int x) const
    {
        const auto& gr = side == 0 ? g_ : h_;
        const auto& pos = side == 0 ? s.u : s.v;
        for (int t = 0; t < mode_.k; ++t)
            if (t != j && pos[std::size_t(t)] >= 0 && !gr.adjacent(Vertex(x), Vertex(pos[std::size_t(t)])))
                return false;
        return true;
    }

    bool consistent(const State& s) const
    {
        for (int a = 0; a < mode_.k; ++a) {
            if (s.u[std::size_t(a)] < 0)
                continue;
            const auto ua = Vertex(s.u[std::size_t(a)]), va = Vertex(s.v[std::size_t(a)]);
            if (g_.color(ua) != h_.color(va))
                return false;
            for (int b = 0; b < mode_.k; ++b) {
                if (b == a || s.u[std::size_t(b)] < 0)
                    continue;
                const auto ub = Vertex(s.u[std::size_t(b)]), vb = Vertex(s.v[std::size_t(b)]);
                if ((ua == ub) != (va == vb))
                    return false;
                if (ua != ub && g_.adjacent(ua, ub) != h_.adjacent(va, vb))
                    return false;
            }
        }
        return true;
    }

    std::uint64_t encode(const State& s, unsigned rounds) const
    {
        const std::uint64_t base = (g_.size() + 1) * (h_.size() + 1);
        std::uint64_t key = 0;
        for (std::size_t j = 0; j < s.u.size(); ++j)
            key = key * base + std::uint64_t((s.u[j] + 1) * int(h_.size() + 1) + s.v[j] + 1);
        key = key * 3 + std::uint64_t(s.last + 1);
        key = key * 16 + std::uint64_t(s.jumps);
        return key * 64 + rounds;
    }

    const ColoredGraph& g_;
    const ColoredGraph& h_;
    GameMode mode_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

} // namespace

std::optional<unsigned> minimax_depth(const ColoredGraph& g, const ColoredGraph& h, const GameMode& mode,
                                      unsigned cap)
{
    if (cap >= 64 || mode.k > 4 || g.size() > 15 || h.size() > 15 || mode.alternations > 15)
        throw Error(Errc::InvalidParameter, "reference minimax is limited to tiny instances");
    Minimax mm(g, h, mode);
    State root;
    root.u.assign(std::size_t(mode.k), -1);
    root.v.assign(std::size_t(mode.k), -1);
    for (unsigned r = 1; r <= cap; ++r)
        if (mm.wins_within(root, r))
            return r;
    return std::nullopt;
}

namespace {

std::optional<unsigned> replay(const SpoilerStrategy& st, const GamePosition& p, unsigned cap)
{
    const auto& table = st.table();
    if (!table.is_partial_iso(p))
        return 0u;
    if (cap == 0)
        return std::nullopt;
    const auto move = st.move(p);
    if (!move)
        return std::nullopt;
    const std::size_t replies = move->side == Side::G ? table.h().size() : table.g().size();
    unsigned worst = 0;
    for (Vertex y = 0; y < replies; ++y) {
        auto sub = replay(st, table.apply(p, *move, y), cap - 1);
        if (!sub)
            return std::nullopt;
        worst = std::max(worst, *sub + 1);
    }
    return worst;
}

std::uint64_t edge_mask(const ColoredGraph& g, const std::vector<int>& perm)
{
    const int n = int(g.size());
    std::uint64_t mask = 0;
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit)
            if (g.adjacent(Vertex(perm[std::size_t(a)]), Vertex(perm[std::size_t(b)])))
                mask |= std::uint64_t(1) << bit;
    return mask;
}

ColoredGraph from_mask(int n, std::uint64_t mask)
{
    std::vector<Edge> edges;
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit)
            if (mask & (std::uint64_t(1) << bit))
                edges.emplace_back(Vertex(a), Vertex(b));
    return ColoredGraph::uncolored(std::size_t(n), std::move(edges));
}

} // namespace

std::optional<unsigned> worst_case_replay(const SpoilerStrategy& strategy, unsigned cap)
{
    return replay(strategy, strategy.table().root_position(), cap);
}

std::vector<ColoredGraph> graphs_up_to_iso(int n)
{
    if (n < 0 || n > 7)
        throw Error(Errc::InvalidParameter, "graph enumeration supports n <= 7");
    const int pairs = n * (n - 1) / 2;
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));

    std::set<std::uint64_t> canon;
    std::vector<bool> done(std::size_t(1) << pairs, false);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
        if (done[mask])
            continue;
        const auto g = from_mask(n, mask);
        std::uint64_t best = mask;
        for (const auto& perm : perms) {
            const auto m = edge_mask(g, perm);
            done[m] = true;
            best = std::min(best, m);
        }
        canon.insert(best);
    }
    std::vector<ColoredGraph> out;
    for (auto m : canon)
        out.push_back(from_mask(n, m));
    return out;
}

std::vector<ColoredGraph> trees_up_to_iso(int n)
{
    std::vector<ColoredGraph> out;
    for (const auto& g : graphs_up_to_iso(n))
        if (is_tree(g))
            out.push_back(g);
    return out;
}

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b)
{
    if (a.size() != b.size() || a.edges().size() != b.edges().size())
        return false;
    const std::size_t n = a.size();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex(0));
    // Backtracking with colour and degree pruning.
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t v) -> bool {
        if (v == n)
            return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || a.color(Vertex(v)) != b.color(w) || a.degree(Vertex(v)) != b.degree(w))
                continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u)
                ok = a.adjacent(Vertex(u), Vertex(v)) == b.adjacent(Vertex(map[u]), w);
            if (!ok)
                continue;
            map[v] = int(w);
            used[w] = true;
            if (self(self, v + 1))
                return true;
            used[w] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace efk::reference
