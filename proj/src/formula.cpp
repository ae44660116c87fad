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

#include "efkit/formula.hpp"

#include "efkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace efk {

namespace fml {

namespace {

Formula make(Op op, int x = 0, int y = 0, std::string label = {}, std::vector<Formula> children = {})
{
    auto n = std::make_shared<FormulaNode>();
    n->op = op;
    n->x = x;
    n->y = y;
    n->label = std::move(label);
    n->children = std::move(children);
    return n;
}

void check_var(int x)
{
    if (x < 1)
        throw Error(Errc::InvalidParameter, "variable indices start at 1");
}

} // namespace

Formula top()
{
    static const Formula t = make(Op::True);
    return t;
}

Formula bottom()
{
    static const Formula f = make(Op::False);
    return f;
}

Formula color(int x, std::string label)
{
    check_var(x);
    return make(Op::Color, x, 0, std::move(label));
}

Formula not_color(int x, std::string label)
{
    check_var(x);
    return make(Op::NotColor, x, 0, std::move(label));
}

Formula adj(int x, int y)
{
    check_var(x);
    check_var(y);
    return make(Op::Adj, x, y);
}

Formula not_adj(int x, int y)
{
    check_var(x);
    check_var(y);
    return make(Op::NotAdj, x, y);
}

Formula eq(int x, int y)
{
    check_var(x);
    check_var(y);
    return make(Op::Eq, x, y);
}

Formula neq(int x, int y)
{
    check_var(x);
    check_var(y);
    return make(Op::NotEq, x, y);
}

Formula conj(std::vector<Formula> parts)
{
    if (parts.empty())
        return top();
    if (parts.size() == 1)
        return parts.front();
    return make(Op::And, 0, 0, {}, std::move(parts));
}

Formula disj(std::vector<Formula> parts)
{
    if (parts.empty())
        return bottom();
    if (parts.size() == 1)
        return parts.front();
    return make(Op::Or, 0, 0, {}, std::move(parts));
}

Formula exists(int x, Formula body)
{
    check_var(x);
    return make(Op::Exists, x, 0, {}, {std::move(body)});
}

Formula forall(int x, Formula body)
{
    check_var(x);
    return make(Op::Forall, x, 0, {}, {std::move(body)});
}

} // namespace fml

namespace {

bool is_quantifier(Op op) { return op == Op::Exists || op == Op::Forall; }
bool is_junction(Op op) { return op == Op::And || op == Op::Or; }

struct Chains {
    unsigned qdepth = 0;
    unsigned start_e = 0; // blocks in the longest maximal chain that opens with an existential
    unsigned start_a = 0; // same for universal
};

Chains chains(const FormulaNode* n, std::unordered_map<const FormulaNode*, Chains>& memo)
{
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    Chains c;
    if (is_junction(n->op)) {
        for (const auto& ch : n->children) {
            const auto s = chains(ch.get(), memo);
            c.qdepth = std::max(c.qdepth, s.qdepth);
            c.start_e = std::max(c.start_e, s.start_e);
            c.start_a = std::max(c.start_a, s.start_a);
        }
    } else if (is_quantifier(n->op)) {
        const auto s = chains(n->children.front().get(), memo);
        c.qdepth = s.qdepth + 1;
        const bool ex = n->op == Op::Exists;
        const unsigned same = ex ? s.start_e : s.start_a;
        const unsigned flip = ex ? s.start_a : s.start_e;
        const unsigned len = std::max({1u, same, flip == 0 ? 0u : flip + 1});
        (ex ? c.start_e : c.start_a) = len;
    }
    memo.emplace(n, c);
    return c;
}

} // namespace

FragmentInfo fragment_info(const Formula& f)
{
    std::unordered_map<const FormulaNode*, Chains> memo;
    const auto c = chains(f.get(), memo);
    FragmentInfo info;
    info.qdepth = c.qdepth;
    info.altdepth = std::max(c.start_e, c.start_a);
    // A chain opening with the other quantifier needs one extra level.
    info.sigma_level = std::max({1u, c.start_e, c.start_a == 0 ? 0u : c.start_a + 1});
    info.pi_level = std::max({1u, c.start_a, c.start_e == 0 ? 0u : c.start_e + 1});
    return info;
}

std::size_t dag_size(const Formula& f)
{
    std::set<const FormulaNode*> seen;
    std::vector<const FormulaNode*> stack{f.get()};
    while (!stack.empty()) {
        const auto* n = stack.back();
        stack.pop_back();
        if (!seen.insert(n).second)
            continue;
        for (const auto& c : n->children)
            stack.push_back(c.get());
    }
    return seen.size();
}

std::uint64_t tree_size(const Formula& f, std::uint64_t cap)
{
    std::unordered_map<const FormulaNode*, std::uint64_t> memo;
    std::function<std::uint64_t(const FormulaNode*)> rec = [&](const FormulaNode* n) -> std::uint64_t {
        if (auto it = memo.find(n); it != memo.end())
            return it->second;
        std::uint64_t total = 1;
        for (const auto& c : n->children) {
            const auto s = rec(c.get());
            total = (s >= cap - std::min(cap, total)) ? cap : total + s;
        }
        total = std::min(total, cap);
        memo.emplace(n, total);
        return total;
    };
    return rec(f.get());
}

int max_variable(const Formula& f)
{
    std::unordered_map<const FormulaNode*, int> memo;
    std::function<int(const FormulaNode*)> rec = [&](const FormulaNode* n) {
        if (auto it = memo.find(n); it != memo.end())
            return it->second;
        int m = std::max(n->x, n->y);
        for (const auto& c : n->children)
            m = std::max(m, rec(c.get()));
        memo.emplace(n, m);
        return m;
    };
    return rec(f.get());
}

std::vector<int> free_variables(const Formula& f)
{
    // Bitmask of free variables per node; at most 64 variables are tracked.
    std::unordered_map<const FormulaNode*, std::uint64_t> memo;
    std::function<std::uint64_t(const FormulaNode*)> rec = [&](const FormulaNode* n) -> std::uint64_t {
        if (auto it = memo.find(n); it != memo.end())
            return it->second;
        std::uint64_t m = 0;
        auto bit = [](int x) { return x >= 1 && x <= 64 ? std::uint64_t(1) << (x - 1) : 0; };
        switch (n->op) {
        case Op::True:
        case Op::False:
            break;
        case Op::Color:
        case Op::NotColor:
            m = bit(n->x);
            break;
        case Op::Exists:
        case Op::Forall:
            m = rec(n->children.front().get()) & ~bit(n->x);
            break;
        case Op::And:
        case Op::Or:
            for (const auto& c : n->children)
                m |= rec(c.get());
            break;
        default:
            m = bit(n->x) | bit(n->y);
        }
        memo.emplace(n, m);
        return m;
    };
    const auto mask = rec(f.get());
    std::vector<int> out;
    for (int x = 1; x <= 64; ++x)
        if (mask & (std::uint64_t(1) << (x - 1)))
            out.push_back(x);
    return out;
}

namespace {

class Evaluator {
public:
    Evaluator(const ColoredGraph& g, int vars) : g_(g), vars_(vars)
    {
        // Pack assignments into one integer when (n+1)^vars fits.
        long double space = 1.0L;
        for (int i = 0; i < vars; ++i)
            space *= (long double)(g.size() + 1);
        packable_ = space < 1.8e19L;
    }

    bool eval(const FormulaNode* n, std::vector<std::int64_t>& a)
    {
        switch (n->op) {
        case Op::True:
            return true;
        case Op::False:
            return false;
        case Op::Color:
            return g_.color(Vertex(a[std::size_t(n->x)])) == n->label;
        case Op::NotColor:
            return g_.color(Vertex(a[std::size_t(n->x)])) != n->label;
        case Op::Adj:
            return g_.adjacent(Vertex(a[std::size_t(n->x)]), Vertex(a[std::size_t(n->y)]));
        case Op::NotAdj:
            return !g_.adjacent(Vertex(a[std::size_t(n->x)]), Vertex(a[std::size_t(n->y)]));
        case Op::Eq:
            return a[std::size_t(n->x)] == a[std::size_t(n->y)];
        case Op::NotEq:
            return a[std::size_t(n->x)] != a[std::size_t(n->y)];
        default:
            break;
        }
        std::uint64_t key = 0;
        if (packable_) {
            for (int x = vars_; x >= 1; --x)
                key = key * (g_.size() + 1) + std::uint64_t(a[std::size_t(x)] + 1);
            if (auto it = memo_.find({n, key}); it != memo_.end())
                return it->second;
        }
        bool result = false;
        switch (n->op) {
        case Op::And:
            result = std::all_of(n->children.begin(), n->children.end(),
                                 [&](const Formula& c) { return eval(c.get(), a); });
            break;
        case Op::Or:
            result = std::any_of(n->children.begin(), n->children.end(),
                                 [&](const Formula& c) { return eval(c.get(), a); });
            break;
        case Op::Exists:
        case Op::Forall: {
            const bool ex = n->op == Op::Exists;
            const auto saved = a[std::size_t(n->x)];
            result = !ex;
            for (Vertex v = 0; v < g_.size(); ++v) {
                a[std::size_t(n->x)] = v;
                if (eval(n->children.front().get(), a) == ex) {
                    result = ex;
                    break;
                }
            }
            a[std::size_t(n->x)] = saved;
            break;
        }
        default:
            break;
        }
        if (packable_)
            memo_.emplace(std::make_pair(n, key), result);
        return result;
    }

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<const FormulaNode*, std::uint64_t>& k) const noexcept
        {
            return std::hash<const void*>()(k.first) ^ (std::hash<std::uint64_t>()(k.second) * 0x9e3779b97f4a7c15ull);
        }
    };

    const ColoredGraph& g_;
    int vars_;
    bool packable_ = false;
    std::unordered_map<std::pair<const FormulaNode*, std::uint64_t>, bool, KeyHash> memo_;
};

} // namespace

bool evaluate(const Formula& f, const ColoredGraph& g, const Assignment& assignment)
{
    const int vars = std::max<int>(max_variable(f), int(assignment.size()) - 1);
    std::vector<std::int64_t> a(std::size_t(vars) + 1, -1);
    for (std::size_t x = 1; x < assignment.size(); ++x)
        if (assignment[x]) {
            if (*assignment[x] >= g.size())
                throw Error(Errc::OutOfRange, "assigned vertex out of range");
            a[x] = *assignment[x];
        }
    for (int x : free_variables(f))
        if (a[std::size_t(x)] < 0)
            throw Error(Errc::UnboundVariable, "variable x" + std::to_string(x) + " is free and unassigned");
    Evaluator ev(g, vars);
    return ev.eval(f.get(), a);
}

Formula negate(const Formula& f)
{
    std::unordered_map<const FormulaNode*, Formula> memo;
    std::function<Formula(const Formula&)> rec = [&](const Formula& n) -> Formula {
        if (auto it = memo.find(n.get()); it != memo.end())
            return it->second;
        Formula out;
        auto children = [&] {
            std::vector<Formula> cs;
            for (const auto& c : n->children)
                cs.push_back(rec(c));
            return cs;
        };
        switch (n->op) {
        case Op::True: out = fml::bottom(); break;
        case Op::False: out = fml::top(); break;
        case Op::Color: out = fml::not_color(n->x, n->label); break;
        case Op::NotColor: out = fml::color(n->x, n->label); break;
        case Op::Adj: out = fml::not_adj(n->x, n->y); break;
        case Op::NotAdj: out = fml::adj(n->x, n->y); break;
        case Op::Eq: out = fml::neq(n->x, n->y); break;
        case Op::NotEq: out = fml::eq(n->x, n->y); break;
        case Op::And: out = fml::disj(children()); break;
        case Op::Or: out = fml::conj(children()); break;
        case Op::Exists: out = fml::forall(n->x, rec(n->children.front())); break;
        case Op::Forall: out = fml::exists(n->x, rec(n->children.front())); break;
        }
        memo.emplace(n.get(), out);
        return out;
    };
    return rec(f);
}

bool same_formula(const Formula& a, const Formula& b)
{
    std::set<std::pair<const FormulaNode*, const FormulaNode*>> equal;
    std::function<bool(const FormulaNode*, const FormulaNode*)> rec = [&](const FormulaNode* p,
                                                                          const FormulaNode* q) {
        if (p == q || equal.count({p, q}))
            return true;
        if (p->op != q->op || p->x != q->x || p->y != q->y || p->label != q->label ||
            p->children.size() != q->children.size())
            return false;
        for (std::size_t i = 0; i < p->children.size(); ++i)
            if (!rec(p->children[i].get(), q->children[i].get()))
                return false;
        equal.insert({p, q});
        return true;
    };
    return rec(a.get(), b.get());
}

namespace {

/// The first literal, in slot order, that holds for the G placement and fails
/// for the H placement.
Formula violated_literal(const ColoredGraph& g, const ColoredGraph& h, const GamePosition& p)
{
    const auto& s = p.slots;
    for (std::size_t a = 0; a < s.size(); ++a) {
        if (!s[a])
            continue;
        const int xa = int(a) + 1;
        if (g.color(s[a]->first) != h.color(s[a]->second))
            return fml::color(xa, g.color(s[a]->first));
        for (std::size_t b = 0; b < a; ++b) {
            if (!s[b])
                continue;
            const int xb = int(b) + 1;
            const bool eg = s[a]->first == s[b]->first, eh = s[a]->second == s[b]->second;
            if (eg && !eh)
                return fml::eq(xb, xa);
            if (!eg && eh)
                return fml::neq(xb, xa);
            if (eg)
                continue;
            const bool ag = g.adjacent(s[a]->first, s[b]->first), ah = h.adjacent(s[a]->second, s[b]->second);
            if (ag && !ah)
                return fml::adj(xb, xa);
            if (!ag && ah)
                return fml::not_adj(xb, xa);
        }
    }
    throw Error(Errc::InvalidParameter, "position is a partial isomorphism");
}

} // namespace

Formula formula_from_strategy(const ColoredGraph& g, const ColoredGraph& h, const ValueTable& table,
                              const SpoilerStrategy& strategy)
{
    if (table.root_value().is_inf())
        throw Error(Errc::NotDistinguishable, "Duplicator survives forever from the root");
    std::unordered_map<std::uint64_t, Formula> memo;
    std::function<Formula(const GamePosition&)> rec = [&](const GamePosition& p) -> Formula {
        const auto idx = table.index_of(p);
        if (auto it = memo.find(idx); it != memo.end())
            return it->second;
        Formula out;
        if (!table.is_partial_iso(p)) {
            out = violated_literal(g, h, p);
        } else {
            const auto m = strategy.move(p);
            if (!m)
                throw Error(Errc::InvalidParameter, "strategy has no move at a reachable position");
            const std::size_t replies = m->side == Side::G ? h.size() : g.size();
            std::vector<Formula> parts;
            std::set<const FormulaNode*> seen;
            std::vector<const FormulaNode*> atoms;
            for (Vertex y = 0; y < replies; ++y) {
                auto sub = rec(table.apply(p, *m, y));
                if (!seen.insert(sub.get()).second)
                    continue;
                // Equal literals from different replies are built separately.
                if (sub->children.empty()) {
                    const auto same = [&](const FormulaNode* a) {
                        return a->op == sub->op && a->x == sub->x && a->y == sub->y && a->label == sub->label;
                    };
                    if (std::any_of(atoms.begin(), atoms.end(), same))
                        continue;
                    atoms.push_back(sub.get());
                }
                parts.push_back(std::move(sub));
            }
            const int x = m->slot + 1;
            out = m->side == Side::G ? fml::exists(x, fml::conj(std::move(parts)))
                                     : fml::forall(x, fml::disj(std::move(parts)));
        }
        memo.emplace(idx, out);
        return out;
    };
    return rec(table.root_position());
}

namespace {

void write(const FormulaNode* n, std::string& out)
{
    auto var = [](int x) { return "x" + std::to_string(x); };
    auto quoted = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                q += '\\';
            q += c;
        }
        return q + "\"";
    };
    switch (n->op) {
    case Op::True: out += "T"; return;
    case Op::False: out += "F"; return;
    case Op::Color: out += "col(" + var(n->x) + "," + quoted(n->label) + ")"; return;
    case Op::NotColor: out += "~col(" + var(n->x) + "," + quoted(n->label) + ")"; return;
    case Op::Adj: out += "adj(" + var(n->x) + "," + var(n->y) + ")"; return;
    case Op::NotAdj: out += "~adj(" + var(n->x) + "," + var(n->y) + ")"; return;
    case Op::Eq: out += var(n->x) + " = " + var(n->y); return;
    case Op::NotEq: out += var(n->x) + " ~= " + var(n->y); return;
    case Op::And:
    case Op::Or: {
        const char* sep = n->op == Op::And ? " & " : " | ";
        out += "(";
        for (std::size_t i = 0; i < n->children.size(); ++i) {
            if (i)
                out += sep;
            write(n->children[i].get(), out);
        }
        out += ")";
        return;
    }
    case Op::Exists:
    case Op::Forall:
        out += n->op == Op::Exists ? "E " : "A ";
        out += var(n->x) + " . ";
        write(n->children.front().get(), out);
        return;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Formula parse()
    {
        auto f = formula();
        skip();
        if (pos_ != s_.size())
            fail("unexpected trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(Errc::ParseError, "offset " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(std::string_view tok)
    {
        skip();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok)
    {
        if (!accept(tok))
            fail("expected '" + std::string(tok) + "'");
    }

    int variable()
    {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != 'x')
            fail("expected a variable");
        ++pos_;
        const std::size_t begin = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (begin == pos_)
            fail("expected digits after 'x'");
        const int x = std::stoi(std::string(s_.substr(begin, pos_ - begin)));
        if (x < 1)
            fail("variable indices start at 1");
        return x;
    }

    std::string label()
    {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != '"')
            fail("expected a quoted colour");
        ++pos_;
        std::string out;
        while (pos_ < s_.size() && s_[pos_] != '"') {
            if (s_[pos_] == '\\' && pos_ + 1 < s_.size())
                ++pos_;
            out += s_[pos_++];
        }
        if (pos_ >= s_.size())
            fail("unterminated string");
        ++pos_;
        return out;
    }

    Formula formula()
    {
        std::vector<Formula> parts{conjunction()};
        while (accept("|"))
            parts.push_back(conjunction());
        return parts.size() == 1 ? parts.front() : fml::disj(std::move(parts));
    }

    Formula conjunction()
    {
        std::vector<Formula> parts{unary()};
        while (accept("&"))
            parts.push_back(unary());
        return parts.size() == 1 ? parts.front() : fml::conj(std::move(parts));
    }

    bool keyword(char c)
    {
        // A single-letter keyword must not run into an identifier.
        skip();
        if (pos_ < s_.size() && s_[pos_] == c &&
            (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
            return true;
        }
        return false;
    }

    Formula unary()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        for (char q : {'E', 'A'}) {
            if (keyword(q)) {
                const int x = variable();
                expect(".");
                auto body = unary();
                return q == 'E' ? fml::exists(x, body) : fml::forall(x, body);
            }
        }
        if (keyword('T'))
            return fml::top();
        if (keyword('F'))
            return fml::bottom();
        if (accept("(")) {
            auto f = formula();
            expect(")");
            return f;
        }
        const bool negated = accept("~");
        if (accept("adj")) {
            expect("(");
            const int x = variable();
            expect(",");
            const int y = variable();
            expect(")");
            return negated ? fml::not_adj(x, y) : fml::adj(x, y);
        }
        if (accept("col")) {
            expect("(");
            const int x = variable();
            expect(",");
            auto l = label();
            expect(")");
            return negated ? fml::not_color(x, std::move(l)) : fml::color(x, std::move(l));
        }
        if (negated)
            fail("expected 'adj' or 'col' after '~'");
        const int x = variable();
        if (accept("~=")) {
            const int y = variable();
            return fml::neq(x, y);
        }
        if (accept("=")) {
            const int y = variable();
            return fml::eq(x, y);
        }
        fail("expected '=' or '~='");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

std::string serialize_formula(const Formula& f)
{
    std::string out;
    write(f.get(), out);
    return out;
}

Formula parse_formula(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace efk
