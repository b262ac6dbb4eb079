#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "permbound/graph.hpp"

namespace permbound {

// Edge-list text:
//   first line   n
//   other lines  "u v" meaning u -> v (sigma_u > sigma_v), 1-based
// Blank lines and lines starting with '#' are skipped. Text whose first
// non-blank character is '{' is read as {"n": int, "edges": [[u, v], ...]}.
// n = 0, out-of-range vertices and self-loops are ParseErrors.
RestrictionGraph parse_graph(std::string_view text);
RestrictionGraph read_graph_file(const std::filesystem::path& path);

std::string format_edge_list(const RestrictionGraph& g);
nlohmann::json graph_to_json(const RestrictionGraph& g);

}  // namespace permbound
