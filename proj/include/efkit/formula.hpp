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

#include "efkit/game.hpp"
#include "efkit/graph.hpp"
#include "efkit/natinf.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace efk {

/// Node kinds of a negation-normal-form formula.
enum class Op : std::uint8_t {
    True,
    False,
    Color,
    NotColor,
    Adj,
    NotAdj,
    Eq,
    NotEq,
    And,
    Or,
    Exists,
    Forall,
};

struct FormulaNode;

/// Immutable, shareable formula. Sub-formulas may be shared (a DAG); the
/// meaning is that of the expanded tree.
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
    Op op = Op::True;
    int x = 0;                     // variable of atoms and quantifiers (1-based)
    int y = 0;                     // second variable of binary atoms
    std::string label;             // colour of Color/NotColor
    std::vector<Formula> children; // And/Or operands, or the quantified body
};

namespace fml {

Formula top();
Formula bottom();
Formula color(int x, std::string label);
Formula not_color(int x, std::string label);
Formula adj(int x, int y);
Formula not_adj(int x, int y);
Formula eq(int x, int y);
Formula neq(int x, int y);
/// Empty conjunction is T, a single operand is returned as is.
Formula conj(std::vector<Formula> parts);
/// Empty disjunction is F, a single operand is returned as is.
Formula disj(std::vector<Formula> parts);
Formula exists(int x, Formula body);
Formula forall(int x, Formula body);

} // namespace fml

struct FragmentInfo {
    unsigned qdepth = 0;
    /// Longest chain of nested quantifier blocks (consecutive like
    /// quantifiers form one block).
    unsigned altdepth = 0;
    /// Least i >= 1 with the formula in Sigma_i / Pi_i.
    NatInf sigma_level = 1;
    NatInf pi_level = 1;

    /// Number of quantifier alternations, altdepth - 1 (0 for no quantifiers).
    unsigned alternations() const noexcept { return altdepth == 0 ? 0 : altdepth - 1; }
};

FragmentInfo fragment_info(const Formula& f);

/// Number of distinct nodes in the DAG.
std::size_t dag_size(const Formula& f);

/// Node count of the expanded tree, saturating at `cap`.
std::uint64_t tree_size(const Formula& f, std::uint64_t cap = UINT64_MAX);

/// Largest variable index used (0 for a formula without variables).
int max_variable(const Formula& f);

/// Free variables in increasing order.
std::vector<int> free_variables(const Formula& f);

/// Variable assignment: index x holds the vertex bound to x (index 0 unused).
using Assignment = std::vector<std::optional<Vertex>>;

/// Model checking over `g`. Throws UnboundVariable if a free variable is not
/// assigned.
bool evaluate(const Formula& f, const ColoredGraph& g, const Assignment& assignment = {});

/// Negation pushed down to the atoms.
Formula negate(const Formula& f);

/// Structural equality of the expanded trees.
bool same_formula(const Formula& a, const Formula& b);

/// Back-and-forth translation of a winning strategy into a sentence true on G
/// and false on H whose quantifier depth equals the root value.
Formula formula_from_strategy(const ColoredGraph& g, const ColoredGraph& h, const ValueTable& table,
                              const SpoilerStrategy& strategy);

/// Text form: `E x1 . (...)`, `A x2 . (...)`, `&`, `|`, `adj(x1,x2)`,
/// `~adj(..)`, `col(x1,"red")`, `~col(..)`, `x1 = x2`, `x1 ~= x2`, `T`, `F`.
std::string serialize_formula(const Formula& f);

/// Throws ParseError with the offending position.
Formula parse_formula(std::string_view text);

} // namespace efk
