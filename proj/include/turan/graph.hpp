#ifndef TURAN_GRAPH_HPP
#define TURAN_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace turan {

using Edge = std::pair<int, int>; // stored with first < second

// Immutable simple graph on vertices 0..n-1. Construction validates the
// edge list (no loops, no duplicates, endpoints in range) and throws
// std::invalid_argument on violations.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v]; }

    bool is_connected() const;
    bool is_tree() const { return n_ > 0 && edge_count() == n_ - 1 && is_connected(); }
    std::vector<int> leaves() const; // vertices of degree exactly 1

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted, unique, first < second
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    std::vector<char> matrix_;           // n*n adjacency flags
};

// Graph with a designated root set (sorted, unique, in range).
class RootedGraph {
public:
    RootedGraph() = default;
    RootedGraph(Graph graph, std::vector<int> roots);

    const Graph& graph() const { return graph_; }
    const std::vector<int>& roots() const { return roots_; }
    int root_count() const { return static_cast<int>(roots_.size()); }
    bool is_root(int v) const { return root_flag_[v]; }
    int n() const { return graph_.n(); }
    int edge_count() const { return graph_.edge_count(); }
    int non_root_count() const { return n() - root_count(); }
    std::vector<int> non_roots() const;

    // True when the underlying graph is a tree whose leaf set equals the roots.
    bool is_tree_rooted_at_leaves() const;

private:
    Graph graph_;
    std::vector<int> roots_;
    std::vector<char> root_flag_;
};

// Exact isomorphism tests by backtracking with degree pruning (exhaustive).
bool isomorphic(const Graph& a, const Graph& b);
// Rooted version additionally requires roots to map onto roots.
bool isomorphic(const RootedGraph& a, const RootedGraph& b);

// Small standard graphs, used by tests and the CLI's named-graph table.
Graph make_empty_graph(int n);
Graph make_path_graph(int n);        // path on n vertices
Graph make_cycle_graph(int n);       // n >= 3
Graph make_complete_graph(int n);
Graph make_complete_bipartite_graph(int a, int b);

} // namespace turan

#endif
