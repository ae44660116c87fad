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

// efkit command-line interface.
// Exit status: 0 success, 1 failed check, 2 bad input, 3 position limit.

#include "efkit/error.hpp"
#include "efkit/fo2type.hpp"
#include "efkit/formula.hpp"
#include "efkit/game.hpp"
#include "efkit/generators.hpp"
#include "efkit/graph_io.hpp"
#include "efkit/treekit.hpp"
#include "efkit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

json nat(efk::NatInf v)
{
    return v.is_inf() ? json("inf") : json(v.value());
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw efk::Error(efk::Errc::InvalidParameter, "cannot write '" + path + "'");
    out << text;
}

json type_json(const efk::Fo2Type& t)
{
    json j;
    j["kind"] = t.kind == efk::Fo2Type::Kind::singleton ? "singleton" : "ranked";
    j["rank"] = t.rank;
    j["head"] = efk::to_string(t.head);
    json tail = json::array();
    if (t.kind == efk::Fo2Type::Kind::ranked) {
        tail.push_back(efk::to_string(t.tail.t0));
        for (auto w : t.tail.widths)
            tail.push_back(efk::to_string(w));
    }
    j["tail"] = tail;
    return j;
}

struct SolveArgs {
    std::string g, h, mode = "full";
    int k = 2;
    std::uint64_t limit = efk::GameMode{}.position_limit;

    void attach(CLI::App* cmd, bool with_mode)
    {
        cmd->set_help_flag("--help", "print this help message and exit");
        cmd->add_option("--g", g, "graph G")->required()->check(CLI::ExistingFile);
        cmd->add_option("--h", h, "graph H")->required()->check(CLI::ExistingFile);
        cmd->add_option("-k", k, "pebbles")->check(CLI::PositiveNumber);
        if (with_mode)
            cmd->add_option("--mode", mode, "full | sigma:I | pi:I");
        cmd->add_option("--limit", limit, "position limit");
    }

    efk::GameMode game_mode() const
    {
        auto m = efk::parse_mode(mode, k);
        m.position_limit = limit;
        return m;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ehrenfeucht-Fraisse game toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph pair or a named graph");
    std::string family, out_g, out_h, base_g, base_h;
    std::vector<int> params;
    gen->add_option("family", family, "colored_tree | uncolored_tree | ladder | cycle | padded_cycle | succinct_cycle | lift");
    gen->add_option("params", params, "integer parameters");
    gen->add_option("--out-g", out_g, "output file for G");
    gen->add_option("--out-h", out_h, "output file for H");
    gen->add_option("--base-g", base_g, "lift: base graph G0")->check(CLI::ExistingFile);
    gen->add_option("--base-h", base_h, "lift: base graph H0")->check(CLI::ExistingFile);
    auto* named = gen->add_subcommand("named", "single named graph");
    std::string named_family, named_out;
    int named_n = 0;
    named->add_option("name", named_family, "path | cycle | star | wheel | complete | empty")->required();
    named->add_option("n", named_n, "vertex count")->required();
    named->add_option("--out", named_out, "output file (default stdout)");

    // solve / alt / formula
    auto* solve_cmd = app.add_subcommand("solve", "distinguishing depth of one game");
    SolveArgs solve_args;
    solve_args.attach(solve_cmd, true);

    auto* alt_cmd = app.add_subcommand("alt", "alternation number");
    SolveArgs alt_args;
    alt_args.attach(alt_cmd, false);

    auto* formula_cmd = app.add_subcommand("formula", "synthesize a separating formula");
    SolveArgs formula_args;
    std::string formula_out;
    std::uint64_t max_tree = 1'000'000;
    formula_args.attach(formula_cmd, true);
    formula_cmd->add_option("--out", formula_out, "write the formula text here");
    formula_cmd->add_option("--max-tree-size", max_tree, "refuse to print larger unfolded formulas");

    // classify / equiv
    auto* classify_cmd = app.add_subcommand("classify", "two-variable type of an uncolored graph");
    std::string classify_file;
    classify_cmd->add_option("file", classify_file)->required()->check(CLI::ExistingFile);

    auto* equiv_cmd = app.add_subcommand("equiv", "two-variable equivalence of two graphs");
    std::string equiv_a, equiv_b;
    bool equiv_oracle = false;
    equiv_cmd->add_option("a", equiv_a)->required()->check(CLI::ExistingFile);
    equiv_cmd->add_option("b", equiv_b)->required()->check(CLI::ExistingFile);
    equiv_cmd->add_flag("--oracle", equiv_oracle, "cross-check with the 2-pebble game");

    // truncate / treeinfo
    auto* truncate_cmd = app.add_subcommand("truncate", "keep at most k isomorphic branches per class");
    std::string truncate_in, truncate_out;
    int truncate_k = 2;
    truncate_cmd->add_option("file", truncate_in)->required()->check(CLI::ExistingFile);
    truncate_cmd->add_option("-k", truncate_k)->required();
    truncate_cmd->add_option("--out", truncate_out)->required();

    auto* treeinfo_cmd = app.add_subcommand("treeinfo", "center, radius, diameter, branching index, separator");
    std::string treeinfo_file;
    treeinfo_cmd->add_option("file", treeinfo_file)->required()->check(CLI::ExistingFile);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run acceptance criteria");
    std::string verify_id = "all", verify_csv, verify_json;
    int max_m = 4;
    bool quiet = false;
    verify_cmd->add_option("id", verify_id, "criterion id or 'all'");
    verify_cmd->add_option("--max-m", max_m, "largest ladder/cycle parameter");
    verify_cmd->add_option("--csv", verify_csv, "write rows as CSV");
    verify_cmd->add_option("--json", verify_json, "write reports as JSON");
    verify_cmd->add_flag("-q,--quiet", quiet, "no progress on stderr");
    auto* list_cmd = app.add_subcommand("list", "list criterion ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (named->parsed()) {
            const auto g = efk::named_graph(efk::parse_named_family(named_family), named_n);
            if (named_out.empty())
                std::cout << efk::serialize_graph(g);
            else
                efk::write_graph_file(named_out, g);
            return 0;
        }
        if (gen->parsed()) {
            if (family.empty())
                throw efk::Error(efk::Errc::InvalidParameter, "gen needs a family");
            efk::FamilySpec spec{efk::parse_family(family), params};
            efk::GraphPair p;
            if (spec.family == efk::FamilySpec::Family::lift) {
                if (base_g.empty() || base_h.empty() || params.empty() || params.size() > 2)
                    throw efk::Error(efk::Errc::InvalidParameter, "lift needs --base-g, --base-h, level [branching]");
                p = efk::lift_pair(efk::read_graph_file(base_g), efk::read_graph_file(base_h), params[0],
                                   params.size() > 1 ? params[1] : 3);
            } else {
                p = efk::generate(spec);
            }
            if (out_g.empty() || out_h.empty()) {
                json j{{"g", efk::graph_to_json(p.g)}, {"h", efk::graph_to_json(p.h)}};
                std::cout << j.dump(2) << '\n';
            } else {
                efk::write_graph_file(out_g, p.g);
                efk::write_graph_file(out_h, p.h);
            }
            return 0;
        }
        if (solve_cmd->parsed()) {
            const auto g = efk::read_graph_file(solve_args.g);
            const auto h = efk::read_graph_file(solve_args.h);
            const auto mode = solve_args.game_mode();
            const auto t0 = std::chrono::steady_clock::now();
            const auto table = efk::solve(g, h, mode);
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            json j{{"mode", mode.str()},
                   {"k", mode.k},
                   {"value", nat(table.root_value())},
                   {"positions_explored", table.position_count()},
                   {"elapsed_ms", ms}};
            std::cout << j.dump() << '\n';
            return 0;
        }
        if (alt_cmd->parsed()) {
            const auto g = efk::read_graph_file(alt_args.g);
            const auto h = efk::read_graph_file(alt_args.h);
            const auto a = efk::alternation_number(g, h, alt_args.k, alt_args.limit);
            std::cout << json{{"k", alt_args.k}, {"alternation_number", nat(a)}}.dump() << '\n';
            return 0;
        }
        if (formula_cmd->parsed()) {
            const auto g = efk::read_graph_file(formula_args.g);
            const auto h = efk::read_graph_file(formula_args.h);
            const auto mode = formula_args.game_mode();
            const auto table = efk::solve(g, h, mode);
            if (table.root_value().is_inf())
                throw efk::Error(efk::Errc::NotDistinguishable, "Duplicator wins; no separating formula");
            const auto f = efk::formula_from_strategy(g, h, table, efk::extract_spoiler_strategy(table));
            const auto info = efk::fragment_info(f);
            const bool verified = efk::evaluate(f, g) && !efk::evaluate(f, h);
            const auto size = efk::tree_size(f, max_tree + 1);
            json j{{"qdepth", info.qdepth},
                   {"altdepth", info.altdepth},
                   {"sigma_level", nat(info.sigma_level)},
                   {"pi_level", nat(info.pi_level)},
                   {"dag_size", efk::dag_size(f)},
                   {"verified", verified}};
            if (size > max_tree) {
                j["tree_size"] = "> " + std::to_string(max_tree);
                std::cerr << "formula text omitted: unfolded size exceeds --max-tree-size\n";
            } else {
                j["tree_size"] = size;
                const auto text = efk::serialize_formula(f);
                if (formula_out.empty())
                    std::cout << text << '\n';
                else
                    write_text(formula_out, text + "\n");
            }
            std::cout << j.dump() << '\n';
            return verified ? 0 : kExitFail;
        }
        if (classify_cmd->parsed()) {
            const auto t = efk::graph_type(efk::read_graph_file(classify_file));
            std::cout << type_json(t).dump() << '\n';
            return 0;
        }
        if (equiv_cmd->parsed()) {
            const auto a = efk::read_graph_file(equiv_a);
            const auto b = efk::read_graph_file(equiv_b);
            const bool same = efk::fo2_equivalent(a, b);
            json j{{"equivalent", same}, {"type_a", type_json(efk::graph_type(a))}, {"type_b", type_json(efk::graph_type(b))}};
            int rc = 0;
            if (equiv_oracle) {
                const auto d = efk::distinguishing_depth(a, b, efk::GameMode::full(2));
                j["game_depth"] = nat(d);
                j["oracle_agrees"] = d.is_inf() == same;
                rc = d.is_inf() == same ? 0 : kExitFail;
            }
            std::cout << j.dump() << '\n';
            return rc;
        }
        if (truncate_cmd->parsed()) {
            const auto t = efk::read_graph_file(truncate_in);
            const auto r = efk::truncate(t, truncate_k);
            efk::write_graph_file(truncate_out, r.tree);
            json mapping = json::object();
            for (std::size_t v = 0; v < r.original.size(); ++v)
                mapping[std::to_string(v)] = r.original[v];
            write_text(truncate_out + ".map.json",
                       json{{"k", truncate_k}, {"new_to_original", mapping}}.dump(2) + "\n");
            std::cout << json{{"vertices_before", t.size()}, {"vertices_after", r.tree.size()}}.dump() << '\n';
            return 0;
        }
        if (treeinfo_cmd->parsed()) {
            const auto t = efk::read_graph_file(treeinfo_file);
            const auto c = efk::tree_center(t);
            json j{{"center", c.centers}, {"radius", c.radius}, {"diameter", c.diameter}};
            if (t.size() >= 2) {
                j["branching_index"] = efk::branching_index(t);
                j["separator"] = efk::separator(t);
            }
            std::cout << j.dump() << '\n';
            return 0;
        }
        if (list_cmd->parsed()) {
            for (const auto& id : efk::verify::criterion_ids())
                std::cout << id << "  " << efk::verify::criterion_title(id) << '\n';
            return 0;
        }
        if (verify_cmd->parsed()) {
            efk::verify::Options opts;
            opts.max_m = max_m;
            if (!quiet)
                opts.progress = [](const std::string& msg) { std::cerr << msg << '\n'; };
            efk::verify::Harness harness(opts);
            std::vector<efk::verify::Report> reports;
            if (verify_id == "all")
                reports = harness.run_all();
            else
                reports.push_back(harness.run(verify_id));
            bool pass = true, limited = false;
            for (const auto& r : reports) {
                std::cout << efk::verify::summary_line(r) << '\n';
                pass = pass && r.pass;
                limited = limited || r.resource_limited;
            }
            if (!verify_csv.empty())
                write_text(verify_csv, efk::verify::reports_to_csv(reports));
            if (!verify_json.empty())
                write_text(verify_json, efk::verify::reports_to_json(reports).dump(2) + "\n");
            if (limited)
                return kExitLimit;
            return pass ? 0 : kExitFail;
        }
    } catch (const efk::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == efk::Errc::PositionLimitExceeded ? kExitLimit : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
