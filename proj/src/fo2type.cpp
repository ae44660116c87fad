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

#include "efkit/fo2type.hpp"

#include "efkit/error.hpp"

#include <functional>
#include <unordered_map>

namespace efk {

const char* to_string(PeelKind k) noexcept
{
    return k == PeelKind::isolated ? "isolated" : "universal";
}

const char* to_string(HeadType h) noexcept
{
    switch (h) {
    case HeadType::empty: return "empty";
    case HeadType::compl_: return "compl";
    case HeadType::norma: return "norma";
    }
    return "?";
}

const char* to_string(Connectivity c) noexcept
{
    return c == Connectivity::conn ? "conn" : "disc";
}

const char* to_string(Width w) noexcept
{
    return w == Width::thin ? "thin" : "thick";
}

namespace {

void require_uncolored(const ColoredGraph& g)
{
    if (!g.is_uncolored())
        throw Error(Errc::Colored, "classification is defined for uncolored graphs only");
}

} // namespace

RankDecomposition rank_decomposition(const ColoredGraph& g)
{
    require_uncolored(g);
    const std::size_t n = g.size();
    if (n < 2)
        throw Error(Errc::TooSmall, "rank needs at least two vertices");
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    std::size_t left = n;

    RankDecomposition d;
    for (;;) {
        bool any_isolated = false, any_universal = false, all_isolated = true, all_universal = true;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v])
                continue;
            const bool iso = deg[v] == 0, uni = deg[v] == left - 1;
            any_isolated |= iso;
            any_universal |= uni;
            all_isolated &= iso;
            all_universal &= uni;
        }
        if (all_isolated || all_universal || (!any_isolated && !any_universal))
            break;
        // Both kinds at once is impossible with two or more vertices.
        const PeelKind kind = any_isolated ? PeelKind::isolated : PeelKind::universal;
        std::vector<Vertex> layer;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && (kind == PeelKind::isolated ? deg[v] == 0 : deg[v] == left - 1))
                layer.push_back(v);
        for (Vertex v : layer) {
            alive[v] = false;
            for (Vertex w : g.neighbors(v))
                if (alive[w])
                    --deg[w];
        }
        left -= layer.size();
        d.layers.push_back(std::move(layer));
        d.peel_kind.push_back(kind);
    }
    d.graph_rank = int(d.layers.size()) + 1;
    d.vertex_rank.assign(n, d.graph_rank);
    for (std::size_t t = 0; t < d.layers.size(); ++t)
        for (Vertex v : d.layers[t])
            d.vertex_rank[v] = int(t) + 1;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v])
            d.kernel.push_back(v);
    return d;
}

bool operator==(const Fo2Type& a, const Fo2Type& b)
{
    if (a.kind != b.kind)
        return false;
    if (a.kind == Fo2Type::Kind::singleton)
        return true;
    if (a.rank != b.rank || a.head != b.head)
        return false;
    return a.rank == 1 || a.tail == b.tail;
}

std::string Fo2Type::str() const
{
    if (kind == Kind::singleton)
        return "singleton";
    std::string s = "rank " + std::to_string(rank);
    if (rank > 1) {
        s += std::string(", ") + to_string(tail.t0) + ",";
        for (auto w : tail.widths)
            s += std::string(" ") + to_string(w);
    }
    return s + ", head " + to_string(head);
}

namespace {

HeadType kernel_head(const ColoredGraph& g, const std::vector<Vertex>& kernel)
{
    const auto sub = induced_subgraph(g, kernel);
    const std::size_t e = sub.edges().size(), n = sub.size();
    if (e == 0)
        return HeadType::empty;
    if (e == n * (n - 1) / 2)
        return HeadType::compl_;
    return HeadType::norma;
}

} // namespace

Fo2Type graph_type(const ColoredGraph& g)
{
    require_uncolored(g);
    if (g.size() == 0)
        throw Error(Errc::TooSmall, "the empty graph has no type");
    Fo2Type t;
    if (g.size() == 1)
        return t;
    const auto d = rank_decomposition(g);
    t.kind = Fo2Type::Kind::ranked;
    t.rank = d.graph_rank;
    t.head = kernel_head(g, d.kernel);
    t.tail.t0 = is_connected(g) ? Connectivity::conn : Connectivity::disc;
    for (const auto& layer : d.layers)
        t.tail.widths.push_back(layer.size() == 1 ? Width::thin : Width::thick);
    return t;
}

TailType tail_type(const ColoredGraph& g, int m)
{
    if (m < 1)
        throw Error(Errc::InvalidParameter, "tail length must be >= 1");
    const auto t = graph_type(g);
    if (t.kind == Fo2Type::Kind::singleton || t.rank <= m)
        throw Error(Errc::RankTooLow, "graph rank " + std::to_string(t.rank) + " is not above " + std::to_string(m));
    TailType out = t.tail;
    out.widths.resize(std::size_t(m));
    return out;
}

bool fo2_equivalent(const ColoredGraph& g, const ColoredGraph& h)
{
    return graph_type(g) == graph_type(h);
}

using namespace fml;

Formula phi_formula(int s, int free_var)
{
    if (s < 1)
        throw Error(Errc::InvalidParameter, "schema index must be >= 1");
    if (free_var != 1 && free_var != 2)
        throw Error(Errc::InvalidParameter, "free variable must be x1 or x2");
    const int x = free_var, y = 3 - free_var;
    if (s == 1)
        return forall(y, disj({adj(y, x), eq(y, x)}));
    if (s % 2 == 0)
        return forall(y, disj({phi_formula(s - 1, y), not_adj(y, x)}));
    return forall(y, disj({phi_formula(s - 1, y), adj(y, x), eq(y, x)}));
}

namespace {

Formula not_phi(int s, int free_var)
{
    return negate(phi_formula(s, free_var));
}

Formula psi(int s)
{
    if (s < 1)
        throw Error(Errc::InvalidParameter, "schema index must be >= 1");
    if (s == 1)
        return conj({exists(1, phi_formula(1)), exists(1, not_phi(1, 1))});
    std::vector<Formula> parts{exists(1, phi_formula(1)), exists(1, phi_formula(2))};
    for (int i = 3; i <= s; ++i)
        parts.push_back(exists(1, conj({phi_formula(i), not_phi(i - 2, 1)})));
    parts.push_back(exists(1, conj({not_phi(s - 1, 1), not_phi(s, 1)})));
    return conj(std::move(parts));
}

Formula tail_part(int i, bool thick)
{
    if (i < 1)
        throw Error(Errc::InvalidParameter, "schema index must be >= 1");
    if (thick) {
        std::vector<Formula> parts{neq(1, 2), phi_formula(i, 1)};
        if (i > 2)
            parts.push_back(not_phi(i - 2, 1));
        parts.push_back(phi_formula(i, 2));
        if (i > 2)
            parts.push_back(not_phi(i - 2, 2));
        return exists(1, exists(2, conj(std::move(parts))));
    }
    std::vector<Formula> parts{not_phi(i, 1), not_phi(i, 2)};
    if (i > 2) {
        parts.push_back(phi_formula(i - 2, 1));
        parts.push_back(phi_formula(i - 2, 2));
    }
    parts.push_back(eq(1, 2));
    return forall(1, forall(2, disj(std::move(parts))));
}

} // namespace

Formula phi_psi_t(int s, Schema which)
{
    switch (which) {
    case Schema::phi: return phi_formula(s, 1);
    case Schema::psi: return psi(s);
    case Schema::t_thick: return tail_part(s, true);
    case Schema::t_thin: return tail_part(s, false);
    }
    throw Error(Errc::InvalidParameter, "unknown schema");
}

Formula swap_adjacency(const Formula& f)
{
    std::unordered_map<const FormulaNode*, Formula> memo;
    std::function<Formula(const Formula&)> rec = [&](const Formula& n) -> Formula {
        if (auto it = memo.find(n.get()); it != memo.end())
            return it->second;
        Formula out;
        switch (n->op) {
        // Complement adjacency is irreflexive, so equality has to be kept apart.
        case Op::Adj: out = conj({not_adj(n->x, n->y), neq(n->x, n->y)}); break;
        case Op::NotAdj: out = disj({adj(n->x, n->y), eq(n->x, n->y)}); break;
        case Op::And:
        case Op::Or: {
            std::vector<Formula> cs;
            for (const auto& c : n->children)
                cs.push_back(rec(c));
            out = n->op == Op::And ? conj(std::move(cs)) : disj(std::move(cs));
            break;
        }
        case Op::Exists: out = exists(n->x, rec(n->children.front())); break;
        case Op::Forall: out = forall(n->x, rec(n->children.front())); break;
        default: out = n;
        }
        memo.emplace(n.get(), out);
        return out;
    };
    return rec(f);
}

Formula type_sentence(const Fo2Type& t)
{
    if (t.kind == Fo2Type::Kind::singleton)
        return forall(1, forall(2, eq(1, 2)));
    if (t.rank < 1 || (t.rank > 1 && int(t.tail.widths.size()) != t.rank - 1))
        throw Error(Errc::InvalidParameter, "malformed type");
    if (t.rank == 1) {
        const auto two = exists(1, exists(2, neq(1, 2)));
        switch (t.head) {
        case HeadType::empty: return conj({two, forall(1, forall(2, not_adj(1, 2)))});
        case HeadType::compl_: return conj({two, forall(1, forall(2, disj({eq(1, 2), adj(1, 2)})))});
        case HeadType::norma:
            return conj({forall(1, exists(2, adj(1, 2))), forall(1, exists(2, conj({neq(1, 2), not_adj(1, 2)})))});
        }
    }
    // A disconnected type is the complement of a connected one with the
    // kernel complemented as well.
    HeadType head = t.head;
    if (t.tail.t0 == Connectivity::disc && head != HeadType::norma)
        head = head == HeadType::empty ? HeadType::compl_ : HeadType::empty;
    const int m = t.rank - 1;
    std::vector<Formula> parts{psi(m)};
    for (int i = 1; i <= m; ++i)
        parts.push_back(tail_part(i, t.tail.widths[std::size_t(i - 1)] == Width::thick));
    // The head clause ranges over the kernel only; Phi_{m-1} or Phi_m picks
    // out exactly the tail vertices once the tail type is fixed.
    std::vector<Formula> head_clause;
    if (m >= 2)
        head_clause.push_back(phi_formula(m - 1));
    head_clause.push_back(phi_formula(m));
    head_clause.push_back(head == HeadType::norma ? not_phi(m + 1, 1) : phi_formula(m + 1));
    parts.push_back(forall(1, disj(std::move(head_clause))));
    auto f = conj(std::move(parts));
    return t.tail.t0 == Connectivity::disc ? swap_adjacency(f) : f;
}

} // namespace efk
