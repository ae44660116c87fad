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

#include "efkit/graph.hpp"
#include "efkit/natinf.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace efk {

enum class Side : std::uint8_t { G = 0, H = 1 };

inline Side other(Side s) noexcept { return s == Side::G ? Side::H : Side::G; }

/// Parameters of a k-pebble game. `sigma(i)` starts in G, `pi(i)` starts in
/// H; both allow fewer than i changes of graph. `continuous` restricts
/// Spoiler to moves that put the new pebble next to every other pebble on the
/// same side (used to measure continuous strategies in the two-pebble game).
struct GameMode {
    enum class Variant : std::uint8_t { full, sigma, pi };

    int k = 2;
    Variant variant = Variant::full;
    int alternations = 0; // i for sigma/pi, 0 for full
    std::uint64_t position_limit = 50'000'000;
    bool continuous = false;

    static GameMode full(int k) { return {k, Variant::full, 0}; }
    static GameMode sigma(int k, int i) { return {k, Variant::sigma, i}; }
    static GameMode pi(int k, int i) { return {k, Variant::pi, i}; }

    bool bounded() const noexcept { return variant != Variant::full; }

    /// "full", "sigma:I" or "pi:I".
    std::string str() const;
};

/// Parses "full", "sigma:I" or "pi:I".
GameMode parse_mode(const std::string& text, int k);

using SlotPair = std::pair<Vertex, Vertex>; // (vertex in G, vertex in H)

struct GamePosition {
    std::vector<std::optional<SlotPair>> slots;
    std::optional<Side> last_side; // empty until the first move
    int jumps_left = 0;            // unused in full mode

    friend bool operator==(const GamePosition&, const GamePosition&) = default;
};

struct Move {
    int slot = 0;
    Side side = Side::G;
    Vertex vertex = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

/// True iff the placed slots induce a partial isomorphism: colours agree,
/// equality and adjacency are preserved in both directions.
bool check_partial_iso(const ColoredGraph& g, const ColoredGraph& h,
                       const std::vector<std::optional<SlotPair>>& placements);

/// Solved game: for every position, the least number of rounds in which
/// Spoiler forces a win (infinity when Duplicator survives forever).
///
/// A cheap handle on immutable shared data; copies share the table.
class ValueTable {
public:
    const GameMode& mode() const noexcept;
    const ColoredGraph& g() const noexcept;
    const ColoredGraph& h() const noexcept;

    NatInf root_value() const;
    NatInf value(const GamePosition& p) const;
    std::uint64_t position_count() const noexcept;

    GamePosition root_position() const;
    bool is_partial_iso(const GamePosition& p) const;

    /// Legal Spoiler moves at `p` in lexicographic (slot, side, vertex) order.
    std::vector<Move> legal_moves(const GamePosition& p) const;
    /// Value of the Duplicator node reached by `m`: one plus the worst reply.
    NatInf move_value(const GamePosition& p, const Move& m) const;
    /// Position after Spoiler's `m` and Duplicator's `reply` in the other graph.
    GamePosition apply(const GamePosition& p, const Move& m, Vertex reply) const;

    /// Dense position index (stable for one table).
    std::uint64_t index_of(const GamePosition& p) const;

    struct Impl;

private:
    friend ValueTable solve(const ColoredGraph&, const ColoredGraph&, const GameMode&);
    std::shared_ptr<const Impl> impl_;
};

/// Exact retrograde solution of the game. Throws EmptyGraph or
/// PositionLimitExceeded.
ValueTable solve(const ColoredGraph& g, const ColoredGraph& h, const GameMode& mode);

/// Number of positions solve() would allocate; throws on overflow past the limit.
std::uint64_t estimate_positions(std::size_t ng, std::size_t nh, const GameMode& mode);

NatInf distinguishing_depth(const ColoredGraph& g, const ColoredGraph& h, const GameMode& mode);

/// Least i with the sigma(i) or pi(i) game won by Spoiler; infinity when the
/// full game is not.
NatInf alternation_number(const ColoredGraph& g, const ColoredGraph& h, int k,
                          std::uint64_t position_limit = GameMode{}.position_limit);

/// The search behind alternation_number with a caller-supplied depth oracle
/// (used to route solves through a cache or a log).
NatInf alternation_search(int k, std::uint64_t position_limit,
                          const std::function<NatInf(const GameMode&)>& depth_of);

/// Optimal Spoiler policy read off a solved table. Moves are the
/// lexicographically least ones attaining each position's value.
class SpoilerStrategy {
public:
    explicit SpoilerStrategy(ValueTable table) : table_(std::move(table)) {}

    const ValueTable& table() const noexcept { return table_; }
    /// Empty when the position is already won (value 0) or not winnable.
    std::optional<Move> move(const GamePosition& p) const;

private:
    ValueTable table_;
};

/// Throws NotDistinguishable when the root value is infinite.
SpoilerStrategy extract_spoiler_strategy(const ValueTable& table);

} // namespace efk
