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

#include "efkit/game.hpp"

#include "efkit/error.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace efk {

namespace {

constexpr std::uint32_t kUnsolved = 0xFFFFFFFFu;
constexpr int kMaxPebbles = 8;

using Codes = std::array<std::uint64_t, kMaxPebbles>;

} // namespace

std::string GameMode::str() const
{
    switch (variant) {
    case Variant::full: return "full";
    case Variant::sigma: return "sigma:" + std::to_string(alternations);
    case Variant::pi: return "pi:" + std::to_string(alternations);
    }
    return "full";
}

GameMode parse_mode(const std::string& text, int k)
{
    if (text == "full")
        return GameMode::full(k);
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(text.substr(colon + 1), &used);
            if (used != text.size() - colon - 1)
                i = 0;
        } catch (const std::exception&) {
            i = 0;
        }
        if (i >= 1 && head == "sigma")
            return GameMode::sigma(k, i);
        if (i >= 1 && head == "pi")
            return GameMode::pi(k, i);
    }
    throw Error(Errc::InvalidParameter, "mode must be full, sigma:I or pi:I (I >= 1), got '" + text + "'");
}

bool check_partial_iso(const ColoredGraph& g, const ColoredGraph& h,
                       const std::vector<std::optional<SlotPair>>& placements)
{
    for (std::size_t s = 0; s < placements.size(); ++s) {
        if (!placements[s])
            continue;
        auto [us, vs] = *placements[s];
        if (us >= g.size() || vs >= h.size())
            throw Error(Errc::OutOfRange, "placed vertex out of range");
        if (g.color(us) != h.color(vs))
            return false;
        for (std::size_t t = s + 1; t < placements.size(); ++t) {
            if (!placements[t])
                continue;
            auto [ut, vt] = *placements[t];
            if ((us == ut) != (vs == vt))
                return false;
            if (g.adjacent(us, ut) != h.adjacent(vs, vt))
                return false;
        }
    }
    return true;
}

struct ValueTable::Impl {
    GameMode mode;
    ColoredGraph g, h;
    std::uint32_t ng = 0, nh = 0, maxn = 0;
    int k = 0;
    int alts = 0; // i for sigma/pi
    int nstates = 1;
    int njl = 1;
    Side start = Side::G;
    std::array<std::uint64_t, kMaxPebbles + 1> pw{}; // powers of the slot-state count
    std::uint64_t slot_states = 0;
    std::uint64_t placements = 0;      // slot_states^k
    std::uint64_t sub_placements = 0;  // slot_states^(k-1)
    std::uint64_t total = 0;
    std::uint64_t root = 0;
    std::vector<std::uint8_t> adj_g, adj_h;
    std::vector<std::uint32_t> col_g, col_h;
    std::vector<std::uint32_t> vals;
    std::vector<std::uint32_t> dvals;

    std::uint32_t n_of(Side s) const { return s == Side::G ? ng : nh; }

    bool adjacent(Side s, Vertex a, Vertex b) const
    {
        return s == Side::G ? adj_g[std::size_t(a) * ng + b] != 0 : adj_h[std::size_t(a) * nh + b] != 0;
    }

    std::uint64_t code(Vertex u, Vertex v) const { return 1 + std::uint64_t(u) * nh + v; }
    SlotPair decode_code(std::uint64_t c) const
    {
        --c;
        return {Vertex(c / nh), Vertex(c % nh)};
    }

    void decode(std::uint64_t p, Codes& out) const
    {
        for (int j = 0; j < k; ++j) {
            out[std::size_t(j)] = p % slot_states;
            p /= slot_states;
        }
    }

    std::uint64_t remove_slot(std::uint64_t p, int j) const
    {
        return p % pw[std::size_t(j)] + (p / pw[std::size_t(j) + 1]) * pw[std::size_t(j)];
    }

    std::uint64_t insert_slot(std::uint64_t q, int j, std::uint64_t c) const
    {
        return q % pw[std::size_t(j)] + c * pw[std::size_t(j)] + (q / pw[std::size_t(j)]) * pw[std::size_t(j) + 1];
    }

    int state(Side s, int jl) const { return mode.bounded() ? int(s) * alts + jl : 0; }

    std::uint64_t dindex(int j, std::uint64_t q, Side s, Vertex x, int jl) const
    {
        return (((std::uint64_t(j) * sub_placements + q) * 2 + std::uint64_t(s)) * maxn + x) * std::uint64_t(njl)
               + std::uint64_t(jl);
    }

    bool iso(std::uint64_t p) const
    {
        Codes c;
        decode(p, c);
        for (int s = 0; s < k; ++s) {
            if (c[std::size_t(s)] == 0)
                continue;
            auto [us, vs] = decode_code(c[std::size_t(s)]);
            if (col_g[us] != col_h[vs])
                return false;
            for (int t = s + 1; t < k; ++t) {
                if (c[std::size_t(t)] == 0)
                    continue;
                auto [ut, vt] = decode_code(c[std::size_t(t)]);
                if ((us == ut) != (vs == vt))
                    return false;
                if (adj_g[std::size_t(us) * ng + ut] != adj_h[std::size_t(vs) * nh + vt])
                    return false;
            }
        }
        return true;
    }

    /// Continuity: the new pebble must sit next to every other pebble on its side.
    bool continuous_ok(std::uint64_t q, Side s, Vertex x) const
    {
        if (!mode.continuous)
            return true;
        for (int t = 0; t + 1 < k; ++t) {
            const std::uint64_t c = (q / pw[std::size_t(t)]) % slot_states;
            if (c == 0)
                continue;
            auto [u, v] = decode_code(c);
            const Vertex w = s == Side::G ? u : v;
            if (!adjacent(s, x, w))
                return false;
        }
        return true;
    }

    /// Jump budget after moving to `to` from (last, jl); nullopt if illegal.
    std::optional<int> jumps_after(std::optional<Side> last, int jl, Side to) const
    {
        if (!mode.bounded())
            return 0;
        if (!last)
            return to == start ? std::optional<int>(alts - 1) : std::nullopt;
        if (*last == to)
            return jl;
        if (jl > 0)
            return jl - 1;
        return std::nullopt;
    }

    std::uint64_t index_of(const GamePosition& pos) const;
};

std::uint64_t estimate_positions(std::size_t ng, std::size_t nh, const GameMode& mode)
{
    if (mode.k < 1 || mode.k > kMaxPebbles)
        throw Error(Errc::InvalidParameter, "pebble count must be in 1.." + std::to_string(kMaxPebbles));
    if (mode.bounded() && mode.alternations < 1)
        throw Error(Errc::InvalidParameter, "sigma/pi modes need i >= 1");
    const long double s = 1.0L + (long double)ng * (long double)nh;
    long double total = 1.0L;
    for (int j = 0; j < mode.k; ++j)
        total *= s;
    if (mode.bounded())
        total = total * 2.0L * mode.alternations + 1.0L;
    if (total > 1.0e18L)
        throw Error(Errc::PositionLimitExceeded, "position count exceeds 1e18");
    return std::uint64_t(total);
}

std::uint64_t ValueTable::Impl::index_of(const GamePosition& pos) const
{
    if (int(pos.slots.size()) != k)
        throw Error(Errc::InvalidParameter, "position has wrong number of slots");
    std::uint64_t p = 0;
    bool any = false;
    for (int j = k - 1; j >= 0; --j) {
        p *= slot_states;
        if (const auto& s = pos.slots[std::size_t(j)]) {
            if (s->first >= ng || s->second >= nh)
                throw Error(Errc::OutOfRange, "placed vertex out of range");
            p += code(s->first, s->second);
            any = true;
        }
    }
    if (!pos.last_side) {
        if (any)
            throw Error(Errc::InvalidParameter, "position with pebbles must record the last side");
        return mode.bounded() ? root : 0;
    }
    if (mode.bounded() && (pos.jumps_left < 0 || pos.jumps_left >= alts))
        throw Error(Errc::InvalidParameter, "jumps_left out of range");
    return p * std::uint64_t(nstates) + std::uint64_t(state(*pos.last_side, pos.jumps_left));
}

ValueTable solve(const ColoredGraph& g, const ColoredGraph& h, const GameMode& mode)
{
    if (g.empty() || h.empty())
        throw Error(Errc::EmptyGraph, "both graphs need at least one vertex");
    const std::uint64_t need = estimate_positions(g.size(), h.size(), mode);
    if (need > mode.position_limit)
        throw Error(Errc::PositionLimitExceeded,
                    "need " + std::to_string(need) + " positions, limit " + std::to_string(mode.position_limit));

    auto impl = std::make_shared<ValueTable::Impl>();
    auto& t = *impl;
    t.mode = mode;
    t.g = g;
    t.h = h;
    t.ng = std::uint32_t(g.size());
    t.nh = std::uint32_t(h.size());
    t.maxn = std::max(t.ng, t.nh);
    t.k = mode.k;
    t.alts = mode.bounded() ? mode.alternations : 0;
    t.nstates = mode.bounded() ? 2 * t.alts : 1;
    t.njl = mode.bounded() ? t.alts : 1;
    t.start = mode.variant == GameMode::Variant::pi ? Side::H : Side::G;
    t.slot_states = 1 + std::uint64_t(t.ng) * t.nh;
    t.pw[0] = 1;
    for (int j = 1; j <= t.k; ++j)
        t.pw[std::size_t(j)] = t.pw[std::size_t(j) - 1] * t.slot_states;
    t.placements = t.pw[std::size_t(t.k)];
    t.sub_placements = t.pw[std::size_t(t.k) - 1];
    t.total = t.placements * std::uint64_t(t.nstates) + (mode.bounded() ? 1 : 0);
    t.root = mode.bounded() ? t.total - 1 : 0;

    std::map<std::string, std::uint32_t> color_ids;
    auto color_id = [&](const std::string& c) {
        return color_ids.emplace(c, std::uint32_t(color_ids.size())).first->second;
    };
    for (Vertex v = 0; v < t.ng; ++v)
        t.col_g.push_back(color_id(g.color(v)));
    for (Vertex v = 0; v < t.nh; ++v)
        t.col_h.push_back(color_id(h.color(v)));
    t.adj_g.assign(std::size_t(t.ng) * t.ng, 0);
    t.adj_h.assign(std::size_t(t.nh) * t.nh, 0);
    for (auto [u, v] : g.edges())
        t.adj_g[std::size_t(u) * t.ng + v] = t.adj_g[std::size_t(v) * t.ng + u] = 1;
    for (auto [u, v] : h.edges())
        t.adj_h[std::size_t(u) * t.nh + v] = t.adj_h[std::size_t(v) * t.nh + u] = 1;

    const std::uint64_t dcount = std::uint64_t(t.k) * t.sub_placements * 2 * t.maxn * std::uint64_t(t.njl);
    t.vals.assign(t.total, kUnsolved);
    t.dvals.assign(dcount, kUnsolved);
    // Replies still able to escape, per Duplicator node.
    std::vector<std::uint32_t> open(dcount);
    for (std::uint64_t d = 0; d < dcount; ++d) {
        const auto s = Side((d / (std::uint64_t(t.njl) * t.maxn)) % 2);
        open[d] = t.n_of(other(s));
    }
    // (slot, remaining placement, state) already reached by some winning move.
    std::vector<std::uint8_t> reached(std::uint64_t(t.k) * t.sub_placements * std::uint64_t(t.nstates), 0);

    std::vector<std::uint64_t> next;

    auto won_duplicator_node = [&](int j, std::uint64_t q, Side s, Vertex x, int jl, std::uint32_t val) {
        if (!t.continuous_ok(q, s, x))
            return;
        std::array<int, 2> states{};
        int nst = 0;
        if (!mode.bounded()) {
            states[std::size_t(nst++)] = 0;
        } else {
            states[std::size_t(nst++)] = t.state(s, jl);
            if (jl + 1 <= t.alts - 1)
                states[std::size_t(nst++)] = t.state(other(s), jl + 1);
            if (q == 0 && s == t.start && jl == t.alts - 1 && t.vals[t.root] == kUnsolved)
                t.vals[t.root] = val;
        }
        for (int a = 0; a < nst; ++a) {
            const int st = states[std::size_t(a)];
            const std::uint64_t b = (std::uint64_t(j) * t.sub_placements + q) * std::uint64_t(t.nstates) + std::uint64_t(st);
            if (reached[b])
                continue;
            reached[b] = 1;
            for (std::uint64_t c = 0; c < t.slot_states; ++c) {
                const std::uint64_t idx = t.insert_slot(q, j, c) * std::uint64_t(t.nstates) + std::uint64_t(st);
                if (t.vals[idx] == kUnsolved) {
                    t.vals[idx] = val;
                    next.push_back(idx);
                }
            }
        }
    };

    auto process = [&](std::uint64_t idx, std::uint32_t val) {
        if (mode.bounded() && idx == t.root)
            return;
        const std::uint64_t p = idx / std::uint64_t(t.nstates);
        const int st = int(idx % std::uint64_t(t.nstates));
        Codes c;
        t.decode(p, c);
        std::array<Side, 2> sides{Side::G, Side::H};
        int nsides = 2;
        int jl = 0;
        if (mode.bounded()) {
            sides[0] = Side(st / t.alts);
            nsides = 1;
            jl = st % t.alts;
        }
        for (int j = 0; j < t.k; ++j) {
            if (c[std::size_t(j)] == 0)
                continue;
            auto [u, v] = t.decode_code(c[std::size_t(j)]);
            const std::uint64_t q = t.remove_slot(p, j);
            for (int a = 0; a < nsides; ++a) {
                const Side s = sides[std::size_t(a)];
                const Vertex x = s == Side::G ? u : v;
                const std::uint64_t d = t.dindex(j, q, s, x, jl);
                if (--open[d] == 0) {
                    t.dvals[d] = val + 1;
                    won_duplicator_node(j, q, s, x, jl, val + 1);
                }
            }
        }
    };

    for (std::uint64_t p = 0; p < t.placements; ++p)
        if (!t.iso(p))
            for (int st = 0; st < t.nstates; ++st)
                t.vals[p * std::uint64_t(t.nstates) + std::uint64_t(st)] = 0;
    for (std::uint64_t idx = 0; idx < t.total; ++idx)
        if (t.vals[idx] == 0)
            process(idx, 0);

    std::uint32_t level = 1;
    std::vector<std::uint64_t> frontier;
    while (!next.empty()) {
        frontier.swap(next);
        next.clear();
        for (std::uint64_t idx : frontier)
            process(idx, level);
        ++level;
    }

    ValueTable out;
    out.impl_ = std::move(impl);
    return out;
}

const GameMode& ValueTable::mode() const noexcept { return impl_->mode; }
const ColoredGraph& ValueTable::g() const noexcept { return impl_->g; }
const ColoredGraph& ValueTable::h() const noexcept { return impl_->h; }
std::uint64_t ValueTable::position_count() const noexcept { return impl_->total; }

namespace {
NatInf to_natinf(std::uint32_t v) { return v == kUnsolved ? NatInf::inf() : NatInf(v); }
} // namespace

NatInf ValueTable::root_value() const { return to_natinf(impl_->vals[impl_->root]); }

NatInf ValueTable::value(const GamePosition& p) const { return to_natinf(impl_->vals[impl_->index_of(p)]); }

std::uint64_t ValueTable::index_of(const GamePosition& p) const { return impl_->index_of(p); }

GamePosition ValueTable::root_position() const
{
    GamePosition p;
    p.slots.assign(std::size_t(impl_->k), std::nullopt);
    p.jumps_left = impl_->mode.bounded() ? impl_->alts - 1 : 0;
    return p;
}

bool ValueTable::is_partial_iso(const GamePosition& p) const { return check_partial_iso(g(), h(), p.slots); }

namespace {

std::uint64_t remaining_placement(const ValueTable::Impl& t, const GamePosition& p, int slot)
{
    std::uint64_t q = 0;
    for (int j = t.k - 1; j >= 0; --j) {
        if (j == slot)
            continue;
        q *= t.slot_states;
        if (const auto& s = p.slots[std::size_t(j)])
            q += t.code(s->first, s->second);
    }
    return q;
}

} // namespace

std::vector<Move> ValueTable::legal_moves(const GamePosition& p) const
{
    const auto& t = *impl_;
    t.index_of(p); // validates
    std::vector<Move> moves;
    for (int j = 0; j < t.k; ++j) {
        const std::uint64_t q = remaining_placement(t, p, j);
        for (Side s : {Side::G, Side::H}) {
            if (!t.jumps_after(p.last_side, p.jumps_left, s))
                continue;
            for (Vertex x = 0; x < t.n_of(s); ++x)
                if (t.continuous_ok(q, s, x))
                    moves.push_back({j, s, x});
        }
    }
    return moves;
}

NatInf ValueTable::move_value(const GamePosition& p, const Move& m) const
{
    const auto& t = *impl_;
    const auto jl = t.jumps_after(p.last_side, p.jumps_left, m.side);
    if (!jl || m.slot < 0 || m.slot >= t.k || m.vertex >= t.n_of(m.side))
        throw Error(Errc::InvalidParameter, "illegal move");
    const std::uint64_t q = remaining_placement(t, p, m.slot);
    if (!t.continuous_ok(q, m.side, m.vertex))
        throw Error(Errc::InvalidParameter, "move breaks continuity");
    return to_natinf(t.dvals[t.dindex(m.slot, q, m.side, m.vertex, *jl)]);
}

GamePosition ValueTable::apply(const GamePosition& p, const Move& m, Vertex reply) const
{
    const auto& t = *impl_;
    const auto jl = t.jumps_after(p.last_side, p.jumps_left, m.side);
    if (!jl)
        throw Error(Errc::InvalidParameter, "illegal move");
    if (reply >= t.n_of(other(m.side)))
        throw Error(Errc::OutOfRange, "reply vertex out of range");
    GamePosition out = p;
    out.slots[std::size_t(m.slot)] = m.side == Side::G ? SlotPair{m.vertex, reply} : SlotPair{reply, m.vertex};
    out.last_side = m.side;
    out.jumps_left = *jl;
    return out;
}

NatInf distinguishing_depth(const ColoredGraph& g, const ColoredGraph& h, const GameMode& mode)
{
    return solve(g, h, mode).root_value();
}

NatInf alternation_search(int k, std::uint64_t position_limit, const std::function<NatInf(const GameMode&)>& depth_of)
{
    auto mode = GameMode::full(k);
    mode.position_limit = position_limit;
    const NatInf depth = depth_of(mode);
    if (depth.is_inf())
        return depth;
    for (std::uint64_t i = 1; i <= depth.value(); ++i) {
        for (auto variant : {GameMode::Variant::sigma, GameMode::Variant::pi}) {
            GameMode m{k, variant, int(i), position_limit};
            if (depth_of(m).finite())
                return NatInf(i);
        }
    }
    // Unreachable: a depth-d win uses at most d-1 changes of graph.
    throw Error(Errc::InvalidParameter, "alternation search exhausted");
}

NatInf alternation_number(const ColoredGraph& g, const ColoredGraph& h, int k, std::uint64_t position_limit)
{
    return alternation_search(k, position_limit,
                              [&](const GameMode& m) { return distinguishing_depth(g, h, m); });
}

std::optional<Move> SpoilerStrategy::move(const GamePosition& p) const
{
    const NatInf v = table_.value(p);
    if (v.is_inf() || v.value() == 0)
        return std::nullopt;
    for (const Move& m : table_.legal_moves(p))
        if (table_.move_value(p, m) == v)
            return m;
    return std::nullopt;
}

SpoilerStrategy extract_spoiler_strategy(const ValueTable& table)
{
    if (table.root_value().is_inf())
        throw Error(Errc::NotDistinguishable, "Duplicator survives forever from the root");
    return SpoilerStrategy(table);
}

} // namespace efk
