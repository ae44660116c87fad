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

// Slow, independent reference implementations used to cross-check the
// attractor solver and the model checker. Nothing here shares code with
// game.cpp or formula.cpp beyond the graph type.

#include "efkit/game.hpp"
#include "efkit/graph.hpp"

#include <optional>
#include <vector>

namespace efk::reference {

/// Depth-capped forward minimax over the explicit game tree. Returns the
/// least r <= cap such that Spoiler wins within r rounds, or nullopt.
/// Limited to k <= 4, at most 15 vertices per side and cap < 64.
std::optional<unsigned> minimax_depth(const ColoredGraph& g, const ColoredGraph& h, const GameMode& mode,
                                      unsigned cap);

/// Plays `strategy` from the root against every Duplicator reply sequence and
/// returns the longest game length, or nullopt if some line never ends within
/// `cap` rounds.
std::optional<unsigned> worst_case_replay(const SpoilerStrategy& strategy, unsigned cap);

/// All graphs on n vertices up to isomorphism (n <= 7), each in a canonical
/// labelling, ordered by edge bitmask.
std::vector<ColoredGraph> graphs_up_to_iso(int n);

/// All trees on n vertices up to isomorphism (brute force over Pruefer codes).
std::vector<ColoredGraph> trees_up_to_iso(int n);

/// Brute-force isomorphism test by permutation search (small graphs only).
bool isomorphic(const ColoredGraph& a, const ColoredGraph& b);

} // namespace efk::reference
