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

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

namespace efk {

/// Canonical interchange form:
///   {"vertices":[{"id":0,"color":"red"},...],"edges":[[0,1],...]}
/// Vertices ascending, each edge once as [min,max], edges sorted.
nlohmann::ordered_json graph_to_json(const ColoredGraph& g);

/// Accepts the canonical form; "color" may be omitted (means "none") and a
/// bare {"n":N,"edges":[...]} is also accepted.
ColoredGraph graph_from_json(const nlohmann::json& j);

std::string serialize_graph(const ColoredGraph& g);
ColoredGraph parse_graph(std::string_view text);

ColoredGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const ColoredGraph& g);

} // namespace efk
