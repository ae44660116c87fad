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

// Classification of uncolored graphs up to two-variable equivalence by
// peeling isolated and universal vertices.

#include "efkit/formula.hpp"
#include "efkit/graph.hpp"

#include <string>
#include <vector>

namespace efk {

enum class PeelKind : std::uint8_t { isolated, universal };
enum class HeadType : std::uint8_t { empty, compl_, norma };
enum class Connectivity : std::uint8_t { conn, disc };
enum class Width : std::uint8_t { thin, thick };

const char* to_string(PeelKind k) noexcept;
const char* to_string(HeadType h) noexcept;
const char* to_string(Connectivity c) noexcept;
const char* to_string(Width w) noexcept;

struct RankDecomposition {
    std::vector<std::vector<Vertex>> layers; // layer t holds the vertices of rank t+1
    std::vector<PeelKind> peel_kind;         // one per layer
    std::vector<Vertex> kernel;
    std::vector<int> vertex_rank;
    int graph_rank = 1;
};

/// Requires an uncolored graph with at least two vertices (Colored, TooSmall).
RankDecomposition rank_decomposition(const ColoredGraph& g);

struct TailType {
    Connectivity t0 = Connectivity::conn;
    std::vector<Width> widths; // t_1 .. t_m

    friend bool operator==(const TailType&, const TailType&) = default;
};

struct Fo2Type {
    enum class Kind : std::uint8_t { singleton, ranked };

    Kind kind = Kind::singleton;
    int rank = 0;
    HeadType head = HeadType::empty;
    /// For rank 1 only t0 is recorded; it takes no part in comparisons.
    TailType tail;

    friend bool operator==(const Fo2Type& a, const Fo2Type& b);

    /// e.g. "rank 3, conn, thin thick, head norma".
    std::string str() const;
};

Fo2Type graph_type(const ColoredGraph& g);

/// (t0, ..., t_m). Throws RankTooLow unless rank > m.
TailType tail_type(const ColoredGraph& g, int m);

bool fo2_equivalent(const ColoredGraph& g, const ColoredGraph& h);

/// Schemas over the variables x1 (x) and x2 (y), connected case.
enum class Schema : std::uint8_t { phi, psi, t_thick, t_thin };

/// phi: Phi_s with free variable x1; psi: the sentence Psi_s; t_thick /
/// t_thin: the sentence T_s.
Formula phi_psi_t(int s, Schema which);

/// Phi_s with free variable `free_var` (1 or 2); the other one is bound.
Formula phi_formula(int s, int free_var = 1);

/// Rewrites adjacency as adjacency in the complement graph, so that
/// evaluate(swap_adjacency(f), G) == evaluate(f, complement(G)).
Formula swap_adjacency(const Formula& f);

/// Two-variable sentence with one alternation that defines the type exactly.
Formula type_sentence(const Fo2Type& t);

} // namespace efk
