#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {

using uppertail::Graph;

std::vector<long long> brute_independence_counts(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("oracle: too many vertices");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::vector<long long> counts(n + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (std::uint32_t m = mask; m && independent; m &= m - 1) {
            int v = __builtin_ctz(m);
            if (adj[v] & mask) independent = false;
        }
        if (independent) ++counts[__builtin_popcount(mask)];
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return counts;
}

int brute_vertex_cover(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("oracle: too many vertices");
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (auto [u, v] : g.edges())
            if (!((mask >> u & 1) || (mask >> v & 1))) {
                covers = false;
                break;
            }
        if (covers) best = size;
    }
    return best;
}

namespace {
int matching_rec(const std::vector<std::pair<int, int>>& edges, size_t i, std::uint64_t used) {
    if (i == edges.size()) return 0;
    auto [u, v] = edges[i];
    int best = matching_rec(edges, i + 1, used);
    if (!((used >> u | used >> v) & 1))
        best = std::max(best, 1 + matching_rec(edges, i + 1, used | 1ull << u | 1ull << v));
    return best;
}

int halfint_rec(const std::vector<std::pair<int, int>>& edges, size_t i, std::vector<int>& cap) {
    if (i == edges.size()) return 0;
    auto [u, v] = edges[i];
    int best = halfint_rec(edges, i + 1, cap); // w = 0
    for (int w = 1; w <= 2; ++w) {
        if (cap[u] >= w && cap[v] >= w) {
            cap[u] -= w;
            cap[v] -= w;
            best = std::max(best, w + halfint_rec(edges, i + 1, cap));
            cap[u] += w;
            cap[v] += w;
        }
    }
    return best;
}
} // namespace

int brute_matching(const Graph& g) { return matching_rec(g.edges(), 0, 0); }

int brute_halfintegral_matching_twice(const Graph& g) {
    std::vector<int> cap(g.vertex_count(), 2);
    return halfint_rec(g.edges(), 0, cap);
}

namespace {
long long homs_rec(const Graph& f, const Graph& h, std::vector<int>& image, int depth) {
    if (depth == f.vertex_count()) return 1;
    long long total = 0;
    for (int target = 0; target < h.vertex_count(); ++target) {
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev) {
            if (image[prev] == target) ok = false;
            if (ok && f.has_edge(prev, depth) && !h.has_edge(image[prev], target)) ok = false;
        }
        if (!ok) continue;
        image[depth] = target;
        total += homs_rec(f, h, image, depth + 1);
    }
    return total;
}
} // namespace

long long brute_injective_homs(const Graph& f, const Graph& h) {
    std::vector<int> image(f.vertex_count(), -1);
    return homs_rec(f, h, image, 0);
}

std::vector<Graph> all_graphs(int n, bool connected_only) {
    if (n < 1) return {};
    std::map<std::string, Graph> current;
    current.emplace(uppertail::canonical_form(Graph(1, {})), Graph(1, {}));
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const auto& [key, g] : current) {
            const int old_n = g.vertex_count();
            for (std::uint32_t attach = 0; attach < (1u << old_n); ++attach) {
                if (connected_only && attach == 0 && old_n > 0) continue;
                auto edges = g.edges();
                for (int v = 0; v < old_n; ++v)
                    if (attach >> v & 1) edges.emplace_back(v, old_n);
                Graph bigger(old_n + 1, std::move(edges));
                if (connected_only && !uppertail::structural_predicates(bigger).is_connected)
                    continue;
                std::string ck = uppertail::canonical_form(bigger);
                next.emplace(std::move(ck), std::move(bigger));
            }
        }
        current = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(current.size());
    for (auto& [key, g] : current) out.push_back(std::move(g));
    return out;
}

std::uint64_t Rng::next() {
    // xorshift*
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545F4914F6CDD1Dull;
}

double Rng::u01() { return (next() >> 11) * 0x1.0p-53; }

Graph random_graph(int n, double edge_prob, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.u01() < edge_prob) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_bipartite(int left, int right, double edge_prob, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v)
            if (rng.u01() < edge_prob) edges.emplace_back(u, left + v);
    return Graph(left + right, std::move(edges));
}

std::vector<CorpusEntry> corpus() {
    using uppertail::build_graph;
    std::vector<CorpusEntry> out;
    auto add = [&](const std::string& name, const std::string& preset,
                   std::vector<long long> params) {
        uppertail::GraphSpec spec;
        spec.preset = preset;
        spec.params = std::move(params);
        out.push_back({name, build_graph(spec)});
    };
    for (int k = 3; k <= 6; ++k) add("K" + std::to_string(k), "clique", {k});
    for (int k = 3; k <= 12; ++k) add("C" + std::to_string(k), "cycle", {k});
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= k; ++l)
            add("K" + std::to_string(k) + "," + std::to_string(l), "complete_bipartite", {k, l});
    for (int h = 2; h <= 4; ++h) add("T" + std::to_string(h), "binary_tree", {h});
    for (int k = 2; k <= 6; ++k) add("P" + std::to_string(k), "path", {k});
    for (int k = 2; k <= 5; ++k) add("S" + std::to_string(k), "star", {k});
    add("Petersen", "petersen", {});
    return out;
}

} // namespace oracle
