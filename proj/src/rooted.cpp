#include "turan/rooted.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace turan {

FamilyParams::FamilyParams(int s_, int t_, int s_prime_) : s(s_), t(t_), s_prime(s_prime_) {
    if (s < 1 || t < 1 || s_prime < 0)
        throw std::invalid_argument("FamilyParams: need s >= 1, t >= 1, s' >= 0");
}

Rational FamilyParams::rho() const {
    return Rational(static_cast<std::int64_t>(s) * t + t + s_prime, t + 1);
}

RootedGraph make_T(const FamilyParams& params) {
    const int s = params.s, t = params.t, sp = params.s_prime;
    const int n = 1 + t + s * t + sp;
    std::vector<Edge> edges;
    std::vector<int> roots;
    edges.reserve(n - 1);
    for (int i = 1; i <= t; ++i) edges.push_back({0, i});
    int next = t + 1;
    for (int i = 1; i <= t; ++i)
        for (int j = 0; j < s; ++j) {
            edges.push_back({i, next});
            roots.push_back(next);
            ++next;
        }
    for (int j = 0; j < sp; ++j) {
        edges.push_back({0, next});
        roots.push_back(next);
        ++next;
    }
    return RootedGraph(Graph(n, std::move(edges)), std::move(roots));
}

RootedGraph make_star(int m) {
    if (m < 1) throw std::invalid_argument("make_star: m >= 1 required");
    std::vector<Edge> edges;
    std::vector<int> roots;
    for (int i = 1; i <= m; ++i) {
        edges.push_back({0, i});
        roots.push_back(i);
    }
    return RootedGraph(Graph(m + 1, std::move(edges)), std::move(roots));
}

CatalogKind catalog_kind_from_string(const std::string& kind) {
    if (kind == "K" || kind == "k") return CatalogKind::SubdividedStar;
    if (kind == "P" || kind == "p") return CatalogKind::Path;
    if (kind == "Q" || kind == "q") return CatalogKind::Broom;
    if (kind == "S" || kind == "s") return CatalogKind::Spider;
    throw std::invalid_argument("unknown catalog tree kind '" + kind + "'");
}

namespace {

// Spider with legs[i] internal vertices followed by one rooted leaf each.
RootedGraph make_spider(const std::vector<int>& legs) {
    std::vector<Edge> edges;
    std::vector<int> roots;
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, next});
        roots.push_back(next++);
    }
    return RootedGraph(Graph(next, std::move(edges)), std::move(roots));
}

} // namespace

RootedGraph make_catalog_tree(CatalogKind kind, int p1, int p2, int p3) {
    switch (kind) {
    case CatalogKind::SubdividedStar: {
        const int s = p1, t = p2;
        if (s < 1 || t < 0) throw std::invalid_argument("K_s^(t): need s >= 1, t >= 0");
        return make_spider(std::vector<int>(s, t));
    }
    case CatalogKind::Path: {
        const int t = p1;
        if (t < 1) throw std::invalid_argument("P_t: need t >= 1");
        return RootedGraph(make_path_graph(t + 2), {0, t + 1});
    }
    case CatalogKind::Broom: {
        const int s = p1, t = p2;
        if (s < 1 || t < 1) throw std::invalid_argument("Q_{s,t}: need s >= 1, t >= 1");
        return make_T(FamilyParams(s, t, s));
    }
    case CatalogKind::Spider: {
        const int s = p1, t = p2, tp = p3;
        if (s < 1 || t < 0 || tp < 0) throw std::invalid_argument("S_{s,t,t'}: need s >= 1, t,t' >= 0");
        std::vector<int> legs(s, t);
        legs.push_back(tp);
        return make_spider(legs);
    }
    }
    throw std::invalid_argument("unknown catalog tree kind");
}

Rational density(const RootedGraph& f) {
    const int free_vertices = f.non_root_count();
    if (free_vertices <= 0)
        throw std::domain_error("density undefined: every vertex is rooted");
    return Rational(f.edge_count(), free_vertices);
}

bool is_balanced(const RootedGraph& f) {
    const Rational rho = density(f); // throws when undefined
    if (!(rho > Rational(1))) return false;

    const std::vector<int> free_vertices = f.non_roots();
    const int m = static_cast<int>(free_vertices.size());
    if (m > 30) throw std::invalid_argument("is_balanced: too many non-root vertices for exhaustive check");

    // Bit position of each non-root vertex; roots get none.
    std::vector<int> bit(f.n(), -1);
    for (int i = 0; i < m; ++i) bit[free_vertices[i]] = i;

    // For every edge, the mask of non-root endpoints it touches.
    std::vector<std::uint32_t> edge_mask;
    edge_mask.reserve(f.edge_count());
    for (const auto& [u, v] : f.graph().edges()) {
        std::uint32_t mask = 0;
        if (bit[u] >= 0) mask |= 1u << bit[u];
        if (bit[v] >= 0) mask |= 1u << bit[v];
        edge_mask.push_back(mask);
    }

    for (std::uint32_t subset = 1; subset < (1u << m); ++subset) {
        int touched = 0;
        for (std::uint32_t em : edge_mask)
            if (em & subset) ++touched;
        const int size = __builtin_popcount(subset);
        if (Rational(touched) < rho * Rational(size)) return false;
    }
    return true;
}

bool balance_closed_form(const FamilyParams& params) {
    if (params.t == 1 && params.s_prime == 0) return false;
    return params.s_prime - 1 <= params.s && params.s <= params.t + params.s_prime;
}

RootedGraph power(const RootedGraph& f, int p) {
    if (p < 1) throw std::invalid_argument("power: p >= 1 required");
    const int n = f.n();
    const std::vector<int> free_vertices = f.non_roots();
    const int m = static_cast<int>(free_vertices.size());

    // Result layout: copy c's non-roots at c*m + index, shared roots after.
    std::vector<int> free_index(n, -1), root_index(n, -1);
    for (int i = 0; i < m; ++i) free_index[free_vertices[i]] = i;
    for (int i = 0; i < f.root_count(); ++i) root_index[f.roots()[i]] = i;

    const int result_n = p * m + f.root_count();
    std::set<Edge> edges;
    for (int c = 0; c < p; ++c) {
        auto map_vertex = [&](int v) {
            return f.is_root(v) ? p * m + root_index[v] : c * m + free_index[v];
        };
        for (const auto& [u, v] : f.graph().edges()) {
            int a = map_vertex(u), b = map_vertex(v);
            if (a > b) std::swap(a, b);
            edges.insert({a, b}); // collapses duplicated root-root edges
        }
    }
    std::vector<int> roots;
    for (int i = 0; i < f.root_count(); ++i) roots.push_back(p * m + i);
    return RootedGraph(Graph(result_n, std::vector<Edge>(edges.begin(), edges.end())),
                       std::move(roots));
}

} // namespace turan
