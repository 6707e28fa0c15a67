#include "turan/json_io.hpp"

#include <stdexcept>

namespace turan {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

std::vector<std::pair<int, int>> read_pairs(const json& j, const char* key) {
    std::vector<std::pair<int, int>> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw std::invalid_argument(std::string("field '") + key + "' must be an array");
    for (const auto& e : j[key]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument(std::string("entries of '") + key + "' must be [int,int] pairs");
        out.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

} // namespace

RootedGraph rooted_graph_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph JSON must be an object");
    int n = require_int(j, "n");
    std::vector<Edge> edges;
    for (auto [u, v] : read_pairs(j, "edges")) edges.push_back({u, v});
    std::vector<int> roots;
    if (j.contains("roots")) {
        if (!j["roots"].is_array()) throw std::invalid_argument("'roots' must be an array");
        for (const auto& r : j["roots"]) {
            if (!r.is_number_integer()) throw std::invalid_argument("'roots' entries must be integers");
            roots.push_back(r.get<int>());
        }
    }
    return RootedGraph(Graph(n, std::move(edges)), std::move(roots));
}

RootedGraph rooted_graph_from_json_text(const std::string& text) {
    return rooted_graph_from_json(parse_text(text));
}

json rooted_graph_to_json(const RootedGraph& g) {
    json j;
    j["n"] = g.n();
    j["edges"] = json::array();
    for (const auto& [u, v] : g.graph().edges()) j["edges"].push_back({u, v});
    j["roots"] = g.roots();
    return j;
}

BipartiteGraph bipartite_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("bipartite JSON must be an object");
    int left = require_int(j, "left");
    int right = require_int(j, "right");
    return BipartiteGraph(left, right, read_pairs(j, "edges"));
}

BipartiteGraph bipartite_from_json_text(const std::string& text) {
    return bipartite_from_json(parse_text(text));
}

json bipartite_to_json(const BipartiteGraph& g) {
    json j;
    j["left"] = g.left_size();
    j["right"] = g.right_size();
    j["edges"] = json::array();
    for (int u = 0; u < g.left_size(); ++u)
        for (int w : g.left_neighbors(u)) j["edges"].push_back({u, w});
    return j;
}

SequenceSystem sequence_system_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("sequence system JSON must be an object");
    SequenceSystem sys;
    sys.k = require_int(j, "k");
    if (!j.contains("sequences") || !j["sequences"].is_array())
        throw std::invalid_argument("missing 'sequences' array");
    for (const auto& seq : j["sequences"]) {
        if (!seq.is_array()) throw std::invalid_argument("sequences must be arrays");
        std::vector<std::int64_t> tuple;
        for (const auto& x : seq) {
            if (!x.is_number_integer()) throw std::invalid_argument("sequence entries must be integers");
            tuple.push_back(x.get<std::int64_t>());
        }
        sys.sequences.push_back(std::move(tuple));
    }
    sys.validate();
    return sys;
}

SequenceSystem sequence_system_from_json_text(const std::string& text) {
    return sequence_system_from_json(parse_text(text));
}

std::vector<std::pair<int, int>> assignment_pairs_from_json_text(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_array()) throw std::invalid_argument("assignment JSON must be an array of pairs");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("assignment entries must be [vertex, image] pairs");
        out.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

} // namespace turan
