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

#include "efkit/graph_io.hpp"

#include "efkit/error.hpp"

#include <fstream>
#include <sstream>

namespace efk {

nlohmann::ordered_json graph_to_json(const ColoredGraph& g)
{
    nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
    for (Vertex v = 0; v < g.size(); ++v) {
        nlohmann::ordered_json entry;
        entry["id"] = v;
        entry["color"] = g.color(v);
        vertices.push_back(std::move(entry));
    }
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    nlohmann::ordered_json out;
    out["vertices"] = std::move(vertices);
    out["edges"] = std::move(edges);
    return out;
}

ColoredGraph graph_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw Error(Errc::Malformed, "graph must be a JSON object");
    RawGraph raw;
    try {
        if (j.contains("n"))
            raw.n = j.at("n").get<std::int64_t>();
        if (j.contains("vertices")) {
            for (const auto& entry : j.at("vertices")) {
                RawGraph::RawVertex rv;
                rv.id = entry.at("id").get<std::int64_t>();
                if (entry.contains("color") && !entry.at("color").is_null())
                    rv.color = entry.at("color").get<std::string>();
                raw.vertices.push_back(std::move(rv));
            }
        }
        if (j.contains("edges")) {
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2)
                    throw Error(Errc::Malformed, "edge must be a pair");
                raw.edges.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
            }
        }
    } catch (const nlohmann::json::exception& ex) {
        throw Error(Errc::Malformed, ex.what());
    }
    return validate(raw);
}

std::string serialize_graph(const ColoredGraph& g)
{
    return graph_to_json(g).dump();
}

ColoredGraph parse_graph(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw Error(Errc::Malformed, ex.what());
    }
    return graph_from_json(j);
}

ColoredGraph read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::Malformed, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void write_graph_file(const std::filesystem::path& path, const ColoredGraph& g)
{
    std::ofstream out(path);
    if (!out)
        throw Error(Errc::Malformed, "cannot write " + path.string());
    out << serialize_graph(g) << '\n';
}

} // namespace efk
