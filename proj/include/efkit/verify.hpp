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

// Experiment harness: reproduces the finite instances behind each claim,
// checks the computed values against closed-form bounds and reports rows.

#include "efkit/game.hpp"
#include "efkit/graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace efk::verify {

enum class RowStatus : std::uint8_t { pass, fail, skipped };

const char* to_string(RowStatus s) noexcept;

struct Row {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json computed = nlohmann::ordered_json::object();
    nlohmann::ordered_json bound = nlohmann::ordered_json::object();
    RowStatus status = RowStatus::pass;
    /// Skipped rows that are not required (documented limits) do not fail
    /// the report.
    bool required = true;
    std::string note;
};

struct Report {
    std::string id;
    std::string title;
    std::vector<Row> rows;
    bool pass = true;
    /// A required row hit the position limit.
    bool resource_limited = false;
    double elapsed_ms = 0;
};

struct Options {
    int max_m = 4;
    std::uint64_t position_limit = GameMode{}.position_limit;
    /// Called with short progress messages; may be empty.
    std::function<void(const std::string&)> progress;
};

/// One solver call made by any criterion.
struct SolveRecord {
    std::string criterion;
    std::size_t ng = 0, nh = 0;
    GameMode mode;
    NatInf value;
    bool formula_checked = false;
    bool formula_ok = false;
    std::string formula_note;
};

/// Criterion ids in reporting order.
const std::vector<std::string>& criterion_ids();

/// Throws InvalidParameter for an unknown id.
const std::string& criterion_title(const std::string& id);

class Harness {
public:
    explicit Harness(Options options = {});

    /// Runs one criterion. Throws InvalidParameter for an unknown id.
    Report run(const std::string& id);

    /// Runs every criterion; the two that summarise the solve log run last
    /// but are reported in id order.
    std::vector<Report> run_all();

    const std::vector<SolveRecord>& log() const noexcept { return log_; }

    /// Solver call routed through the cache and the log; finite values get
    /// their synthesized formula model-checked.
    NatInf depth(const ColoredGraph& g, const ColoredGraph& h, const GameMode& mode);
    NatInf alternation(const ColoredGraph& g, const ColoredGraph& h, int k);

private:
    Report thm1();
    Report thm2();
    Report thm3();
    Report claim1();
    Report thm4();
    Report thm5();
    Report lemma2();
    Report thm8();
    Report thm9();
    Report lemma4();
    Report wheel();
    Report soundness();
    Report oracle();

    void warm_up_log();

    Options options_;
    std::string current_;
    std::vector<SolveRecord> log_;
    std::map<std::string, NatInf> cache_;
};

nlohmann::ordered_json report_to_json(const Report& r);
nlohmann::ordered_json reports_to_json(const std::vector<Report>& rs);

/// One line per row: criterion,row,status,required,params,computed,bound,note.
std::string reports_to_csv(const std::vector<Report>& rs);

/// "PASS thm4-ladder (3 rows, 1021 ms)" style summary line.
std::string summary_line(const Report& r);

} // namespace efk::verify
