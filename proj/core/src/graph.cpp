#include "uppertail/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace uppertail {

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> edges) : n_(n_vertices) {
    if (n_vertices < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

void require_params(const GraphSpec& spec, size_t count) {
    if (spec.params.size() != count)
        throw parse_error("preset '" + spec.preset + "' expects " + std::to_string(count) +
                          " parameter(s)");
}

long long tree_size(long long b, long long h) {
    long long n = 0, level = 1;
    for (long long d = 0; d < h; ++d) {
        n += level;
        level *= b;
        if (n > 1'000'000) throw parse_error("tree preset too large");
    }
    return n;
}

Graph build_tree(long long b, long long h) {
    // breadth-first labels: children of i are b*i+1 .. b*i+b
    long long n = tree_size(b, h);
    std::vector<std::pair<int, int>> edges;
    for (long long v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>((v - 1) / b), static_cast<int>(v));
    return Graph(static_cast<int>(n), std::move(edges));
}

} // namespace

Graph build_graph(const GraphSpec& spec) {
    if (spec.edge_list) {
        int n = 0;
        for (auto [u, v] : *spec.edge_list) n = std::max({n, u + 1, v + 1});
        if (spec.n_vertices) {
            if (*spec.n_vertices < n)
                throw parse_error("declared vertex count smaller than largest endpoint");
            n = *spec.n_vertices;
        }
        return Graph(n, *spec.edge_list);
    }

    const std::string& name = spec.preset;
    auto p = [&](size_t i) { return spec.params[i]; };

    if (name == "cycle") {
        require_params(spec, 1);
        long long k = p(0);
        if (k < 3) throw parse_error("cycle: need k >= 3");
        std::vector<std::pair<int, int>> edges;
        for (long long i = 0; i < k; ++i)
            edges.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % k));
        return Graph(static_cast<int>(k), std::move(edges));
    }
    if (name == "clique") {
        require_params(spec, 1);
        long long k = p(0);
        if (k < 1 || k > 1000) throw parse_error("clique: need 1 <= k <= 1000");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
        return Graph(static_cast<int>(k), std::move(edges));
    }
    if (name == "complete_bipartite") {
        require_params(spec, 2);
        long long k = p(0), l = p(1);
        if (k < 1 || l < 1 || k * l > 1'000'000) throw parse_error("complete_bipartite: bad sizes");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < l; ++j) edges.emplace_back(i, static_cast<int>(k) + j);
        return Graph(static_cast<int>(k + l), std::move(edges));
    }
    if (name == "path") {
        require_params(spec, 1);
        long long k = p(0);
        if (k < 1) throw parse_error("path: need k >= 1 vertices");
        std::vector<std::pair<int, int>> edges;
        for (long long i = 0; i + 1 < k; ++i)
            edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
        return Graph(static_cast<int>(k), std::move(edges));
    }
    if (name == "star") {
        require_params(spec, 1);
        long long k = p(0);
        if (k < 1) throw parse_error("star: need k >= 1 leaves");
        std::vector<std::pair<int, int>> edges;
        for (long long i = 1; i <= k; ++i) edges.emplace_back(0, static_cast<int>(i));
        return Graph(static_cast<int>(k + 1), std::move(edges));
    }
    if (name == "binary_tree") {
        require_params(spec, 1);
        long long h = p(0);
        if (h < 1) throw parse_error("binary_tree: need height >= 1");
        return build_tree(2, h);
    }
    if (name == "b_ary_tree") {
        require_params(spec, 2);
        long long b = p(0), h = p(1);
        if (b < 2 || h < 1) throw parse_error("b_ary_tree: need b >= 2 and height >= 1");
        return build_tree(b, h);
    }
    if (name == "petersen") {
        require_params(spec, 0);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5); // outer cycle
            edges.emplace_back(i, i + 5);       // spokes
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph(10, std::move(edges));
    }
    throw parse_error("unknown preset '" + name + "'");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

bool is_bipartite(const Graph& g, std::vector<int>* side) {
    std::vector<int> color(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = std::move(color);
    return true;
}

StructuralPredicates structural_predicates(const Graph& g) {
    StructuralPredicates out;
    const int n = g.vertex_count();
    const int delta = max_degree(g);
    out.is_regular = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != delta) out.is_regular = false;
    out.is_bipartite = is_bipartite(g);

    std::vector<int> comp(n, -1);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = comps;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = comps;
                    q.push(w);
                }
        }
        ++comps;
    }
    out.is_connected = (comps <= 1);
    out.components.resize(comps);
    for (int v = 0; v < n; ++v) out.components[comp[v]].vertex_map.push_back(v);
    for (auto& c : out.components) c.graph = induced_subgraph(g, c.vertex_map);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> index(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (index[verts[i]] != -1) throw std::invalid_argument("induced_subgraph: repeated vertex");
        index[verts[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (index[u] != -1 && index[v] != -1) edges.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(verts.size()), std::move(edges));
}

std::vector<int> max_degree_core_vertices(const Graph& g, int delta_ref) {
    if (delta_ref < 1) throw std::invalid_argument("max_degree_core: delta_ref must be >= 1");
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == delta_ref) verts.push_back(v);
    return verts;
}

Graph max_degree_core(const Graph& g, int delta_ref) {
    return induced_subgraph(g, max_degree_core_vertices(g, delta_ref));
}

} // namespace uppertail
