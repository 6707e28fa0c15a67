#include "turan/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace turan {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
        if (u < 0 || v >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
        matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

std::vector<int> Graph::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

RootedGraph::RootedGraph(Graph graph, std::vector<int> roots) : graph_(std::move(graph)) {
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (int r : roots)
        if (r < 0 || r >= graph_.n())
            throw std::invalid_argument("RootedGraph: root out of range");
    roots_ = std::move(roots);
    root_flag_.assign(graph_.n(), 0);
    for (int r : roots_) root_flag_[r] = 1;
}

std::vector<int> RootedGraph::non_roots() const {
    std::vector<int> out;
    for (int v = 0; v < n(); ++v)
        if (!root_flag_[v]) out.push_back(v);
    return out;
}

bool RootedGraph::is_tree_rooted_at_leaves() const {
    if (!graph_.is_tree()) return false;
    return roots_ == graph_.leaves();
}

namespace {

// Backtracking isomorphism: map vertices of a onto b, respecting degrees,
// adjacency and (optionally) root membership on both sides.
bool iso_search(const Graph& a, const Graph& b,
                const std::vector<char>* roots_a, const std::vector<char>* roots_b) {
    int n = a.n();
    if (n != b.n() || a.edge_count() != b.edge_count()) return false;

    std::vector<int> deg_a(n), deg_b(n);
    for (int v = 0; v < n; ++v) { deg_a[v] = a.degree(v); deg_b[v] = b.degree(v); }
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    // Place high-degree vertices first; preferring vertices with placed
    // neighbors keeps the candidate lists short.
    std::vector<int> order;
    {
        std::vector<char> placed(n, 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            bool best_attached = false;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                bool attached = false;
                for (int w : a.neighbors(v))
                    if (placed[w]) { attached = true; break; }
                if (best == -1 || (attached && !best_attached) ||
                    (attached == best_attached && deg_a[v] > deg_a[best])) {
                    best = v;
                    best_attached = attached;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || deg_a[v] != deg_b[w]) continue;
            if (roots_a && (*roots_a)[v] != (*roots_b)[w]) continue;
            bool ok = true;
            for (int x : a.neighbors(v)) {
                if (map[x] == -1) continue;
                if (!b.has_edge(w, map[x])) { ok = false; break; }
            }
            if (ok) {
                // non-neighbors must stay non-adjacent
                for (int u = 0; u < n && ok; ++u)
                    if (map[u] != -1 && !a.has_edge(v, u) && u != v && b.has_edge(w, map[u]))
                        ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (rec(idx + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    return rec(0);
}

} // namespace

bool isomorphic(const Graph& a, const Graph& b) { return iso_search(a, b, nullptr, nullptr); }

bool isomorphic(const RootedGraph& a, const RootedGraph& b) {
    if (a.root_count() != b.root_count()) return false;
    std::vector<char> ra(a.n(), 0), rb(b.n(), 0);
    for (int r : a.roots()) ra[r] = 1;
    for (int r : b.roots()) rb[r] = 1;
    return iso_search(a.graph(), b.graph(), &ra, &rb);
}

Graph make_empty_graph(int n) { return Graph(n, {}); }

Graph make_path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

Graph make_cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return Graph(n, std::move(e));
}

Graph make_complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, std::move(e));
}

Graph make_complete_bipartite_graph(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph(a + b, std::move(e));
}

} // namespace turan
