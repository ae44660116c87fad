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

#include "efkit/verify.hpp"

#include "efkit/error.hpp"
#include "efkit/fo2type.hpp"
#include "efkit/formula.hpp"
#include "efkit/generators.hpp"
#include "efkit/graph_io.hpp"
#include "efkit/reference.hpp"
#include "efkit/treekit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace efk::verify {

using json = nlohmann::ordered_json;

const char* to_string(RowStatus s) noexcept
{
    switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "fail";
    case RowStatus::skipped: return "skipped";
    }
    return "?";
}

namespace {

struct Entry {
    std::string id;
    std::string title;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries = {
        {"thm1-colored-trees", "colored lifted trees: Sigma_i wins within i rounds, Pi_i never; A = i"},
        {"thm2-uncolored-trees", "uncolored lifted trees, k = 3: Sigma_1 within 6 rounds, Pi_1 never"},
        {"thm3-tree-log-bound", "random colored trees, k = 3: finite D < 6 log2 n"},
        {"claim1-truncation", "truncation T mod k preserves D^k(T, G)"},
        {"thm4-ladder", "ladder pairs need exactly m-1 quantifier blocks"},
        {"thm5-cycle", "cycle pairs: Sigma_1 depth within [6m^2-15m+8, 6m^2-3m+2]"},
        {"lemma2-lifting", "lifting inequalities on the cycle base pairs"},
        {"thm8-bound", "every finite Sigma_i/Pi_i value <= (v(G)v(H))^(k-1)+1"},
        {"thm9-collapse", "uncolored graphs on <= 6 vertices: type equality iff D^2 infinite; one alternation suffices"},
        {"lemma4-sentences", "type sentences are exact with one alternation"},
        {"remark-wheel", "cycle vs wheel: A^2 = 2 and neither one-sided game is won"},
        {"formula-soundness", "synthesized formulas separate G from H with the solver's depth and fragment"},
        {"oracle-equivalence", "solver agrees with exhaustive minimax on tiny graphs"},
    };
    return entries;
}

json nat(NatInf v)
{
    return v.is_inf() ? json("inf") : json(v.value());
}

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

/// Runs `body` on a fresh row; a position-limit hit becomes a skipped row.
template <class F>
void add_row(Report& rep, json params, F&& body, bool required = true)
{
    Row row;
    row.params = std::move(params);
    row.required = required;
    try {
        body(row);
    } catch (const Error& e) {
        if (e.code() != Errc::PositionLimitExceeded)
            throw;
        row.status = RowStatus::skipped;
        row.note = e.what();
        if (required)
            rep.resource_limited = true;
    }
    rep.rows.push_back(std::move(row));
}

void skip_row(Report& rep, json params, std::string note)
{
    Row row;
    row.params = std::move(params);
    row.status = RowStatus::skipped;
    row.required = false;
    row.note = std::move(note);
    rep.rows.push_back(std::move(row));
}

RowStatus verdict(bool ok)
{
    return ok ? RowStatus::pass : RowStatus::fail;
}

ColoredGraph random_tree(std::mt19937& rng, std::size_t n, unsigned red_percent)
{
    std::vector<std::string> colors;
    for (std::size_t v = 0; v < n; ++v)
        colors.push_back(rng() % 100 < red_percent ? "red" : std::string(kNoColor));
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(Vertex(rng() % v), v);
    return ColoredGraph(std::move(colors), std::move(edges));
}

/// A tree with repeated isomorphic branches so that truncation bites.
ColoredGraph branchy_tree(std::mt19937& rng, int k, std::size_t max_n)
{
    auto base = random_tree(rng, 2 + rng() % 3, 30);
    std::vector<std::string> colors = base.colors();
    std::vector<Edge> edges = base.edges();
    for (int attempt = 0; attempt < 6; ++attempt) {
        const std::size_t gadget = 1 + rng() % 2;
        const std::size_t copies = std::size_t(k) + rng() % 2;
        if (colors.size() + gadget * copies > max_n)
            continue;
        const auto at = Vertex(rng() % colors.size());
        std::vector<std::string> pattern;
        for (std::size_t i = 0; i < gadget; ++i)
            pattern.push_back(rng() % 3 == 0 ? "red" : std::string(kNoColor));
        for (std::size_t c = 0; c < copies; ++c) {
            Vertex prev = at;
            for (std::size_t i = 0; i < gadget; ++i) {
                const auto v = Vertex(colors.size());
                colors.push_back(pattern[i]);
                edges.emplace_back(prev, v);
                prev = v;
            }
        }
    }
    return ColoredGraph(std::move(colors), std::move(edges));
}

ColoredGraph random_colored_graph(std::mt19937& rng, std::size_t n)
{
    std::vector<std::string> colors;
    for (std::size_t v = 0; v < n; ++v)
        colors.push_back(rng() % 3 == 0 ? "red" : std::string(kNoColor));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() % 2)
                edges.emplace_back(u, v);
    return ColoredGraph(std::move(colors), std::move(edges));
}

std::vector<ColoredGraph> small_graphs(int max_n)
{
    std::vector<ColoredGraph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : reference::graphs_up_to_iso(n))
            out.push_back(std::move(g));
    return out;
}

std::uint64_t round_bound(std::size_t ng, std::size_t nh, int k)
{
    long double b = 1.0L;
    for (int j = 0; j + 1 < k; ++j)
        b *= (long double)ng * (long double)nh;
    return b > 1.8e19L ? UINT64_MAX : std::uint64_t(b) + 1;
}

} // namespace

const std::vector<std::string>& criterion_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& e : registry())
            out.push_back(e.id);
        return out;
    }();
    return ids;
}

const std::string& criterion_title(const std::string& id)
{
    for (const auto& e : registry())
        if (e.id == id)
            return e.title;
    throw Error(Errc::InvalidParameter, "unknown criterion '" + id + "'");
}

Harness::Harness(Options options) : options_(std::move(options)) {}

NatInf Harness::depth(const ColoredGraph& g, const ColoredGraph& h, const GameMode& requested)
{
    GameMode mode = requested;
    mode.position_limit = options_.position_limit;
    const std::string key = serialize_graph(g) + "|" + serialize_graph(h) + "|" + std::to_string(mode.k) + ":" +
                            mode.str() + (mode.continuous ? ":cont" : "");
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;

    const auto table = solve(g, h, mode);
    SolveRecord rec;
    rec.criterion = current_;
    rec.ng = g.size();
    rec.nh = h.size();
    rec.mode = mode;
    rec.value = table.root_value();
    if (rec.value.finite()) {
        rec.formula_checked = true;
        try {
            const auto f = formula_from_strategy(g, h, table, extract_spoiler_strategy(table));
            const auto info = fragment_info(f);
            const bool on_g = evaluate(f, g), on_h = evaluate(f, h);
            const bool depth_ok = info.qdepth == rec.value.value();
            bool fragment_ok = true;
            if (mode.variant == GameMode::Variant::sigma)
                fragment_ok = info.sigma_level <= NatInf(std::uint64_t(mode.alternations));
            if (mode.variant == GameMode::Variant::pi)
                fragment_ok = info.pi_level <= NatInf(std::uint64_t(mode.alternations));
            rec.formula_ok = on_g && !on_h && depth_ok && fragment_ok;
            if (!rec.formula_ok) {
                std::ostringstream os;
                os << "true on G " << on_g << ", true on H " << on_h << ", qdepth " << info.qdepth
                   << ", sigma level " << info.sigma_level << ", pi level " << info.pi_level;
                rec.formula_note = os.str();
            }
        } catch (const Error& e) {
            rec.formula_ok = false;
            rec.formula_note = e.what();
        }
    }
    log_.push_back(rec);
    cache_.emplace(key, rec.value);
    return rec.value;
}

NatInf Harness::alternation(const ColoredGraph& g, const ColoredGraph& h, int k)
{
    return alternation_search(k, options_.position_limit, [&](const GameMode& m) { return depth(g, h, m); });
}

Report Harness::run(const std::string& id)
{
    criterion_title(id); // validates the id
    const auto t0 = std::chrono::steady_clock::now();
    const std::string saved = current_;
    current_ = id;
    if (options_.progress)
        options_.progress("running " + id);
    Report r;
    if (id == "thm1-colored-trees") r = thm1();
    else if (id == "thm2-uncolored-trees") r = thm2();
    else if (id == "thm3-tree-log-bound") r = thm3();
    else if (id == "claim1-truncation") r = claim1();
    else if (id == "thm4-ladder") r = thm4();
    else if (id == "thm5-cycle") r = thm5();
    else if (id == "lemma2-lifting") r = lemma2();
    else if (id == "thm8-bound") r = thm8();
    else if (id == "thm9-collapse") r = thm9();
    else if (id == "lemma4-sentences") r = lemma4();
    else if (id == "remark-wheel") r = wheel();
    else if (id == "formula-soundness") r = soundness();
    else r = oracle();
    current_ = saved;
    r.id = id;
    r.title = criterion_title(id);
    r.pass = std::all_of(r.rows.begin(), r.rows.end(), [](const Row& row) {
        return row.status == RowStatus::pass || (row.status == RowStatus::skipped && !row.required);
    });
    r.elapsed_ms = ms_since(t0);
    return r;
}

std::vector<Report> Harness::run_all()
{
    std::map<std::string, Report> done;
    for (const auto& id : criterion_ids())
        if (id != "thm8-bound" && id != "formula-soundness")
            done[id] = run(id);
    done["thm8-bound"] = run("thm8-bound");
    done["formula-soundness"] = run("formula-soundness");
    std::vector<Report> out;
    for (const auto& id : criterion_ids())
        out.push_back(std::move(done[id]));
    return out;
}

void Harness::warm_up_log()
{
    // A standalone run of a log-based criterion first solves a quick corpus.
    for (const char* id : {"remark-wheel", "thm1-colored-trees", "thm4-ladder", "thm5-cycle"})
        run(id);
}

Report Harness::thm1()
{
    Report rep;
    for (int i = 1; i <= 3; ++i) {
        add_row(rep, {{"i", i}}, [&](Row& row) {
            const auto p = colored_tree_pair(i);
            const auto s = depth(p.g, p.h, GameMode::sigma(2, i));
            const auto q = depth(p.g, p.h, GameMode::pi(2, i));
            const auto a = alternation(p.g, p.h, 2);
            row.computed = {{"n", p.g.size()}, {"D_sigma", nat(s)}, {"D_pi", nat(q)}, {"A", nat(a)}};
            row.bound = {{"D_sigma_max", i}, {"D_pi", "inf"}, {"A", i}};
            row.status = verdict(s <= NatInf(std::uint64_t(i)) && q.is_inf() && a == NatInf(std::uint64_t(i)));
        });
    }
    return rep;
}

Report Harness::thm2()
{
    Report rep;
    add_row(rep, {{"k", 3}, {"i", 1}}, [&](Row& row) {
        const auto p = uncolored_tree_pair(3, 1);
        const auto s = depth(p.g, p.h, GameMode::sigma(3, 1));
        const auto q = depth(p.g, p.h, GameMode::pi(3, 1));
        row.computed = {{"n", p.g.size()}, {"D_sigma", nat(s)}, {"D_pi", nat(q)}};
        row.bound = {{"D_sigma_max", 6}, {"D_pi", "inf"}};
        row.status = verdict(s <= NatInf(6) && q.is_inf());
    });
    const auto n2 = uncolored_tree_pair(3, 2).g.size();
    skip_row(rep, {{"k", 3}, {"i", 2}},
             "documented limit: " + std::to_string(n2) + " vertices need about " +
                 std::to_string(estimate_positions(n2, n2, GameMode::sigma(3, 2))) + " positions");
    return rep;
}

Report Harness::thm3()
{
    Report rep;
    for (int s = 0; s < 50; ++s) {
        std::mt19937 rng(std::uint32_t(3000 + s));
        const std::size_t n = 6 + rng() % 11;
        const auto t = random_tree(rng, n, 30);
        const auto u = random_tree(rng, n, 30);
        add_row(rep, {{"sample", s}, {"n", n}}, [&](Row& row) {
            const auto d = depth(t, u, GameMode::full(3));
            const double bound = 6.0 * std::log2(double(n));
            row.computed = {{"D", nat(d)}};
            row.bound = {{"D_below", bound}};
            row.status = verdict(d.is_inf() || double(d.value()) < bound);
            if (d.is_inf())
                row.note = "indistinguishable pair; bound vacuous";
        });
    }
    return rep;
}

Report Harness::claim1()
{
    Report rep;
    for (int s = 0; s < 30; ++s) {
        const int k = s < 15 ? 2 : 3;
        std::mt19937 rng(std::uint32_t(4000 + s));
        const auto t = branchy_tree(rng, k, 12);
        const auto cut = truncate(t, k).tree;
        ColoredGraph partner = random_tree(rng, 4 + rng() % 7, 30);
        if (s % 2 == 1) {
            const auto thinner = truncate(t, k - 1).tree;
            if (thinner.size() <= 10)
                partner = thinner;
        }
        add_row(rep, {{"sample", s}, {"k", k}, {"n_T", t.size()}, {"n_T_mod_k", cut.size()}, {"n_G", partner.size()}},
                [&](Row& row) {
                    const auto a = depth(t, partner, GameMode::full(k));
                    const auto b = depth(cut, partner, GameMode::full(k));
                    row.computed = {{"D_T", nat(a)}, {"D_T_mod_k", nat(b)}};
                    row.bound = {{"equal", true}};
                    row.status = verdict(a == b);
                });
    }
    return rep;
}

Report Harness::thm4()
{
    Report rep;
    for (int m = 2; m <= 4; ++m) {
        if (m > options_.max_m) {
            skip_row(rep, {{"m", m}}, "above --max-m");
            continue;
        }
        add_row(rep, {{"m", m}}, [&](Row& row) {
            const auto p = ladder_pair(m);
            const auto a = alternation(p.g, p.h, 2);
            row.computed = {{"n", p.g.size()}, {"A", nat(a)}};
            row.bound = {{"A", m - 1}};
            row.status = verdict(a == NatInf(std::uint64_t(m - 1)));
        });
    }
    return rep;
}

Report Harness::thm5()
{
    Report rep;
    auto interval_row = [&](const std::string& family, int m, const GraphPair& p, bool equal_sizes) {
        add_row(rep, {{"family", family}, {"m", m}}, [&](Row& row) {
            const auto d = depth(p.g, p.h, GameMode::sigma(2, 1));
            const long lo = 6L * m * m - 15L * m + 8, hi = 6L * m * m - 3L * m + 2;
            row.computed = {{"n_G", p.g.size()}, {"n_H", p.h.size()}, {"D_sigma1", nat(d)}};
            row.bound = {{"low", lo}, {"high", hi}};
            bool ok = d.finite() && long(d.value()) >= lo && long(d.value()) <= hi;
            if (equal_sizes) {
                row.bound["n"] = 8 * m - 1;
                ok = ok && p.g.size() == std::size_t(8 * m - 1) && p.h.size() == p.g.size();
            }
            row.status = verdict(ok);
        });
    };
    for (int m = 2; m <= 4; ++m) {
        if (m > options_.max_m) {
            skip_row(rep, {{"family", "cycle"}, {"m", m}}, "above --max-m");
            continue;
        }
        interval_row("cycle", m, cycle_pair(m), false);
    }
    if (options_.max_m >= 3)
        interval_row("padded_cycle", 3, padded_cycle_pair(3), true);
    else
        skip_row(rep, {{"family", "padded_cycle"}, {"m", 3}}, "above --max-m");
    return rep;
}

Report Harness::lemma2()
{
    Report rep;
    for (const bool succinct : {false, true}) {
        add_row(rep, {{"base", succinct ? "succinct_cycle(2)" : "cycle(2)"}, {"i", 1}}, [&](Row& row) {
            const auto base = succinct ? succinct_cycle_base(2) : cycle_pair(2);
            const auto lifted = lift_pair(base.g, base.h, 1, 3);
            auto cont1 = GameMode::sigma(2, 1);
            cont1.continuous = true;
            auto cont2 = GameMode::sigma(2, 2);
            cont2.continuous = true;
            const auto d_exists = depth(base.g, base.h, GameMode::sigma(2, 1));
            const auto r = depth(base.g, base.h, cont1);
            const auto s = depth(base.g, base.h, cont2);
            const auto sigma1 = depth(lifted.g, lifted.h, GameMode::sigma(2, 1));
            const auto pi1 = depth(lifted.g, lifted.h, GameMode::pi(2, 1));
            const auto pi2 = depth(lifted.g, lifted.h, GameMode::pi(2, 2));
            row.computed = {{"n_G1", lifted.g.size()}, {"n_H1", lifted.h.size()}, {"D_exists_base", nat(d_exists)},
                            {"r", nat(r)}, {"s", nat(s)}, {"D_sigma1", nat(sigma1)}, {"D_pi1", nat(pi1)},
                            {"D_pi2", nat(pi2)}};
            row.bound = {{"D_sigma1_below", nat(r + NatInf(1))}, {"D_pi2_at_least", nat(d_exists)}, {"D_pi1", "inf"}};
            bool ok = r.finite() && sigma1 < r + NatInf(1) && pi2 >= d_exists && pi1.is_inf();
            if (succinct) {
                const auto sigma2 = depth(lifted.g, lifted.h, GameMode::sigma(2, 2));
                row.computed["D_sigma2"] = nat(sigma2);
                row.bound["D_sigma2_max"] = nat(s + NatInf(1));
                ok = ok && s.finite() && sigma2 <= s + NatInf(1);
            }
            row.status = verdict(ok);
        });
    }
    return rep;
}

Report Harness::thm8()
{
    if (log_.empty())
        warm_up_log();
    Report rep;
    std::map<std::string, std::vector<const SolveRecord*>> by_source;
    for (const auto& rec : log_)
        by_source[rec.criterion].push_back(&rec);
    for (const auto& [source, recs] : by_source) {
        add_row(rep, {{"source", source}}, [&](Row& row) {
            std::size_t checked = 0, violations = 0;
            double worst_ratio = 0;
            for (const auto* rec : recs) {
                if (!rec->mode.bounded() || rec->value.is_inf())
                    continue;
                ++checked;
                const auto bound = round_bound(rec->ng, rec->nh, rec->mode.k);
                worst_ratio = std::max(worst_ratio, double(rec->value.value()) / double(bound));
                if (rec->value.value() > bound)
                    ++violations;
            }
            row.computed = {{"finite_bounded_values", checked}, {"violations", violations}, {"max_value_over_bound", worst_ratio}};
            row.bound = {{"violations", 0}};
            row.status = verdict(violations == 0);
        });
    }
    return rep;
}

Report Harness::thm9()
{
    Report rep;
    const auto graphs = small_graphs(6);
    std::size_t pairs = 0, mismatches = 0, distinguishable = 0, collapse_failures = 0;
    std::vector<std::string> examples;
    add_row(rep, {{"max_vertices", 6}, {"graphs", graphs.size()}, {"k", 2}}, [&](Row& row) {
        for (std::size_t a = 0; a < graphs.size(); ++a) {
            for (std::size_t b = a + 1; b < graphs.size(); ++b) {
                ++pairs;
                const auto& g = graphs[a];
                const auto& h = graphs[b];
                const auto d = depth(g, h, GameMode::full(2));
                if (fo2_equivalent(g, h) != d.is_inf()) {
                    ++mismatches;
                    if (examples.size() < 5)
                        examples.push_back(serialize_graph(g) + " vs " + serialize_graph(h));
                }
                if (d.finite()) {
                    ++distinguishable;
                    if (depth(g, h, GameMode::sigma(2, 2)).is_inf() && depth(g, h, GameMode::pi(2, 2)).is_inf())
                        ++collapse_failures;
                }
            }
            if (options_.progress && a % 50 == 49)
                options_.progress("thm9: " + std::to_string(a + 1) + "/" + std::to_string(graphs.size()) + " graphs");
        }
        row.computed = {{"pairs", pairs},
                        {"distinguishable", distinguishable},
                        {"type_vs_solver_mismatches", mismatches},
                        {"one_alternation_failures", collapse_failures}};
        row.bound = {{"mismatches", 0}, {"one_alternation_failures", 0}};
        row.status = verdict(mismatches == 0 && collapse_failures == 0);
        for (const auto& e : examples)
            row.note += e + "; ";
    });
    return rep;
}

Report Harness::lemma4()
{
    Report rep;
    const auto graphs = small_graphs(6);
    std::vector<Fo2Type> types;
    std::vector<Fo2Type> of_graph;
    for (const auto& g : graphs) {
        of_graph.push_back(graph_type(g));
        if (std::find(types.begin(), types.end(), of_graph.back()) == types.end())
            types.push_back(of_graph.back());
    }
    for (const auto& t : types) {
        add_row(rep, {{"type", t.str()}}, [&](Row& row) {
            const auto f = type_sentence(t);
            const auto info = fragment_info(f);
            std::size_t members = 0, wrong = 0;
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                const bool member = of_graph[i] == t;
                members += member;
                wrong += evaluate(f, graphs[i]) != member;
            }
            row.computed = {{"members", members}, {"misclassified", wrong}, {"altdepth", info.altdepth},
                            {"variables", max_variable(f)}};
            row.bound = {{"misclassified", 0}, {"altdepth_max", 2}};
            row.status = verdict(wrong == 0 && info.altdepth <= 2 && max_variable(f) <= 2);
        });
    }
    return rep;
}

Report Harness::wheel()
{
    Report rep;
    for (int n = 5; n <= 7; ++n) {
        add_row(rep, {{"n", n}}, [&](Row& row) {
            const auto c = named_graph(NamedFamily::cycle, n);
            const auto w = named_graph(NamedFamily::wheel, n);
            const auto a = alternation(c, w, 2);
            const auto s = depth(c, w, GameMode::sigma(2, 1));
            const auto p = depth(c, w, GameMode::pi(2, 1));
            row.computed = {{"A", nat(a)}, {"D_sigma1", nat(s)}, {"D_pi1", nat(p)}};
            row.bound = {{"A", 2}, {"D_sigma1", "inf"}, {"D_pi1", "inf"}};
            row.status = verdict(a == NatInf(2) && s.is_inf() && p.is_inf());
        });
    }
    return rep;
}

Report Harness::soundness()
{
    if (log_.empty())
        warm_up_log();
    Report rep;
    std::map<std::string, std::vector<const SolveRecord*>> by_source;
    for (const auto& rec : log_)
        by_source[rec.criterion].push_back(&rec);
    for (const auto& [source, recs] : by_source) {
        add_row(rep, {{"source", source}}, [&](Row& row) {
            std::size_t checked = 0, failed = 0;
            for (const auto* rec : recs) {
                if (!rec->formula_checked)
                    continue;
                ++checked;
                if (!rec->formula_ok) {
                    ++failed;
                    if (row.note.size() < 400)
                        row.note += rec->mode.str() + ": " + rec->formula_note + "; ";
                }
            }
            row.computed = {{"formulas_checked", checked}, {"failures", failed}};
            row.bound = {{"failures", 0}};
            row.status = verdict(failed == 0);
        });
    }
    return rep;
}

Report Harness::oracle()
{
    Report rep;
    auto compare = [&](const ColoredGraph& g, const ColoredGraph& h, const GameMode& mode, std::size_t& bad,
                       std::string& note) {
        const auto mine = depth(g, h, mode);
        const auto theirs = reference::minimax_depth(g, h, mode, 8);
        const bool agree = theirs ? mine == NatInf(*theirs) : (mine.is_inf() || mine.value() > 8);
        if (!agree) {
            ++bad;
            if (note.size() < 400)
                note += serialize_graph(g) + " vs " + serialize_graph(h) + " " + mode.str() + "; ";
        }
    };
    add_row(rep, {{"k", 2}, {"graphs", "all uncolored with <= 4 vertices"}}, [&](Row& row) {
        const auto graphs = small_graphs(4);
        const std::vector<GameMode> modes = {GameMode::full(2), GameMode::sigma(2, 1), GameMode::pi(2, 1),
                                             GameMode::sigma(2, 2), GameMode::pi(2, 2)};
        std::size_t runs = 0, bad = 0;
        for (const auto& g : graphs)
            for (const auto& h : graphs)
                for (const auto& mode : modes) {
                    ++runs;
                    compare(g, h, mode, bad, row.note);
                }
        row.computed = {{"graphs", graphs.size()}, {"comparisons", runs}, {"disagreements", bad}};
        row.bound = {{"disagreements", 0}};
        row.status = verdict(bad == 0);
    });
    add_row(rep, {{"k", 3}, {"graphs", "20 seeded colored pairs, 2..4 vertices"}}, [&](Row& row) {
        const std::vector<GameMode> modes = {GameMode::full(3), GameMode::sigma(3, 1), GameMode::pi(3, 1),
                                             GameMode::sigma(3, 2)};
        std::size_t runs = 0, bad = 0;
        for (int s = 0; s < 20; ++s) {
            std::mt19937 rng(std::uint32_t(1300 + s));
            const auto g = random_colored_graph(rng, 2 + rng() % 3);
            const auto h = random_colored_graph(rng, 2 + rng() % 3);
            for (const auto& mode : modes) {
                ++runs;
                compare(g, h, mode, bad, row.note);
            }
        }
        row.computed = {{"pairs", 20}, {"comparisons", runs}, {"disagreements", bad}};
        row.bound = {{"disagreements", 0}};
        row.status = verdict(bad == 0);
    });
    return rep;
}

json report_to_json(const Report& r)
{
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"params", row.params},
                        {"computed", row.computed},
                        {"bound", row.bound},
                        {"status", to_string(row.status)},
                        {"required", row.required},
                        {"note", row.note}});
    return {{"id", r.id},
            {"title", r.title},
            {"pass", r.pass},
            {"resource_limited", r.resource_limited},
            {"elapsed_ms", std::llround(r.elapsed_ms)},
            {"rows", rows}};
}

json reports_to_json(const std::vector<Report>& rs)
{
    json out = json::array();
    for (const auto& r : rs)
        out.push_back(report_to_json(r));
    return out;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

} // namespace

std::string reports_to_csv(const std::vector<Report>& rs)
{
    std::string out = "criterion,row,status,required,params,computed,bound,note\n";
    for (const auto& r : rs)
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            const auto& row = r.rows[i];
            out += csv_field(r.id) + "," + std::to_string(i) + "," + to_string(row.status) + "," +
                   (row.required ? "true" : "false") + "," + csv_field(row.params.dump()) + "," +
                   csv_field(row.computed.dump()) + "," + csv_field(row.bound.dump()) + "," + csv_field(row.note) + "\n";
        }
    return out;
}

std::string summary_line(const Report& r)
{
    std::size_t skipped = 0;
    for (const auto& row : r.rows)
        skipped += row.status == RowStatus::skipped;
    std::string line = std::string(r.pass ? "PASS " : "FAIL ") + r.id + " (" + std::to_string(r.rows.size()) + " rows";
    if (skipped)
        line += ", " + std::to_string(skipped) + " skipped";
    line += ", " + std::to_string(std::llround(r.elapsed_ms)) + " ms)";
    return line;
}

} // namespace efk::verify
