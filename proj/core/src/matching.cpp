#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "uppertail/graph.hpp"

namespace uppertail {

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.vertex_count() > 64) throw size_guard_error("mask-based algorithm limited to 64 vertices");
    std::vector<std::uint64_t> adj(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }
    return adj;
}

// Greedy maximal matching size on the remaining vertex set; lower bound for
// the cover branch-and-bound.
int greedy_matching(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
    int m = 0;
    std::uint64_t left = alive;
    while (left) {
        int v = __builtin_ctzll(left);
        left &= left - 1;
        if (!(alive & (1ull << v))) continue;
        std::uint64_t nb = adj[v] & alive & ~(1ull << v);
        if (nb) {
            int w = __builtin_ctzll(nb);
            alive &= ~(1ull << v);
            alive &= ~(1ull << w);
            ++m;
        }
    }
    return m;
}

void cover_bnb(const std::vector<std::uint64_t>& adj, std::uint64_t alive, int used, int& best) {
    if (used >= best) return;
    // pick a max-degree remaining vertex
    int pick = -1, pick_deg = 0;
    for (std::uint64_t left = alive; left;) {
        int v = __builtin_ctzll(left);
        left &= left - 1;
        int d = __builtin_popcountll(adj[v] & alive);
        if (d > pick_deg) {
            pick_deg = d;
            pick = v;
        }
    }
    if (pick == -1) { // no edges remain
        best = std::min(best, used);
        return;
    }
    if (used + greedy_matching(adj, alive) >= best) return;
    // either pick joins the cover, or all of its neighbors do
    cover_bnb(adj, alive & ~(1ull << pick), used + 1, best);
    std::uint64_t nb = adj[pick] & alive;
    cover_bnb(adj, alive & ~nb & ~(1ull << pick), used + __builtin_popcountll(nb), best);
}

// Kuhn's augmenting-path matching for bipartite graphs (arbitrary size).
int bipartite_matching(const Graph& g, const std::vector<int>& side) {
    const int n = g.vertex_count();
    std::vector<int> match(n, -1);
    std::vector<int> stamp(n, -1);
    int round = 0;

    std::function<bool(int)> try_augment = [&](int v) -> bool {
        for (int w : g.neighbors(v)) {
            if (stamp[w] == round) continue;
            stamp[w] = round;
            if (match[w] == -1 || try_augment(match[w])) {
                match[w] = v;
                match[v] = w;
                return true;
            }
        }
        return false;
    };

    int size = 0;
    for (int v = 0; v < n; ++v) {
        if (side[v] != 0 || match[v] != -1 || g.degree(v) == 0) continue;
        ++round;
        if (try_augment(v)) ++size;
    }
    return size;
}

int general_matching(const Graph& g) {
    auto adj = adjacency_masks(g);
    std::unordered_map<std::uint64_t, int> memo;
    std::function<int(std::uint64_t)> rec = [&](std::uint64_t alive) -> int {
        // lowest-labeled vertex that still has a neighbor
        int v = -1;
        for (std::uint64_t left = alive; left;) {
            int cand = __builtin_ctzll(left);
            left &= left - 1;
            if (adj[cand] & alive) {
                v = cand;
                break;
            }
        }
        if (v == -1) return 0;
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;
        int best = rec(alive & ~(1ull << v)); // v stays unmatched
        for (std::uint64_t nb = adj[v] & alive; nb;) {
            int w = __builtin_ctzll(nb);
            nb &= nb - 1;
            best = std::max(best, 1 + rec(alive & ~(1ull << v) & ~(1ull << w)));
        }
        memo.emplace(alive, best);
        return best;
    };
    std::uint64_t all = g.vertex_count() == 64 ? ~0ull : (1ull << g.vertex_count()) - 1;
    return rec(all);
}

} // namespace

int vertex_cover_number(const Graph& g, int size_guard) {
    if (g.vertex_count() > size_guard)
        throw size_guard_error("vertex_cover_number: " + std::to_string(g.vertex_count()) +
                               " vertices exceeds guard " + std::to_string(size_guard));
    if (g.edge_count() == 0) return 0;
    auto adj = adjacency_masks(g);
    std::uint64_t all = g.vertex_count() == 64 ? ~0ull : (1ull << g.vertex_count()) - 1;
    int best = g.vertex_count();
    cover_bnb(adj, all, 0, best);
    return best;
}

int matching_number(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    std::vector<int> side;
    if (is_bipartite(g, &side)) return bipartite_matching(g, side);
    return general_matching(g);
}

Rational fractional_matching_number(const Graph& g) {
    // double cover: (v,0)-(w,1) and (v,1)-(w,0) per edge; always bipartite
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edges().size());
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v + n);
        edges.emplace_back(v, u + n);
    }
    Graph cover(2 * n, std::move(edges));
    std::vector<int> side(2 * n, 0);
    for (int v = 0; v < n; ++v) side[v + n] = 1;
    int m = bipartite_matching(cover, side);
    if (m % 2 == 0) return Rational{m / 2, 1};
    return Rational{m, 2};
}

} // namespace uppertail
