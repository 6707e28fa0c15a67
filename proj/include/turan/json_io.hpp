#ifndef TURAN_JSON_IO_HPP
#define TURAN_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "turan/graph.hpp"
#include "turan/toolkit_types.hpp"

namespace turan {

// Repo-wide graph format: {"n": <int>, "edges": [[u,v],...], "roots": [r,...]}
// with 0-based vertices. Parsing rejects loops, duplicate edges and
// out-of-range ids; "roots" may be omitted and defaults to empty.
RootedGraph rooted_graph_from_json(const nlohmann::json& j);
RootedGraph rooted_graph_from_json_text(const std::string& text);
nlohmann::json rooted_graph_to_json(const RootedGraph& g);

// Bipartite format: {"left": <int>, "right": <int>, "edges": [[u,w],...]}
// where u indexes the left part and w the right part, both 0-based.
BipartiteGraph bipartite_from_json(const nlohmann::json& j);
BipartiteGraph bipartite_from_json_text(const std::string& text);
nlohmann::json bipartite_to_json(const BipartiteGraph& g);

// Sequence systems: {"k": 2, "sequences": [[1,2],[1,3]]}
SequenceSystem sequence_system_from_json(const nlohmann::json& j);
SequenceSystem sequence_system_from_json_text(const std::string& text);

// Partial assignment as a list of [pattern_vertex, host_vertex] pairs.
std::vector<std::pair<int, int>> assignment_pairs_from_json_text(const std::string& text);

} // namespace turan

#endif
