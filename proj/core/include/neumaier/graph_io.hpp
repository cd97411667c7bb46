#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "neumaier/graph.hpp"

namespace neumaier {

// graph6 as described in the nauty/gtools format notes (no header, no
// trailing newline). Parse errors throw ParseError.
std::string to_graph6(const DenseGraph& g);
DenseGraph from_graph6(std::string_view text);

// {"vertices": n, "adjacency": [[neighbours of 0], ...]}
nlohmann::ordered_json to_adjacency_json(const DenseGraph& g);
DenseGraph from_adjacency_json(const nlohmann::json& j);

// "n m" on the first line, then one "u v" line per edge with u < v.
std::string to_edge_list(const DenseGraph& g);
DenseGraph from_edge_list(std::string_view text);

}  // namespace neumaier
