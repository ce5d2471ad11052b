#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uppertail/graph.hpp"

namespace uppertail {

namespace {

// Canonical labeling of one connected component (n <= 64) by equitable color
// refinement plus individualization. Vertices that are twins (identical
// neighborhoods up to each other) branch only once, which tames stars,
// cliques and complete bipartite cells where refinement alone cannot split.
struct Canonizer {
    int n;
    std::vector<std::uint64_t> adj;
    std::string best;
    std::vector<int> best_perm;
    bool has_best = false;

    explicit Canonizer(const Graph& g) : n(g.vertex_count()), adj(g.vertex_count(), 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= 1ull << v;
            adj[v] |= 1ull << u;
        }
    }

    std::string encode(const std::vector<int>& perm) const {
        std::string out;
        out.push_back(static_cast<char>(n));
        int bit = 0;
        char cur = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                cur = static_cast<char>(cur << 1);
                if (adj[perm[i]] >> perm[j] & 1) cur |= 1;
                if (++bit == 8) {
                    out.push_back(cur);
                    bit = 0;
                    cur = 0;
                }
            }
        }
        if (bit) out.push_back(static_cast<char>(cur << (8 - bit)));
        return out;
    }

    // Equitable refinement: split cells by the multiset of neighbor cells,
    // keeping a deterministic, isomorphism-invariant cell order.
    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        std::vector<int> cell_of(n);
        while (changed) {
            changed = false;
            for (size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
            std::vector<std::vector<int>> next;
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<std::vector<int>, std::vector<int>> groups;
                for (int v : cell) {
                    std::vector<int> key;
                    for (std::uint64_t nb = adj[v]; nb;) {
                        int w = __builtin_ctzll(nb);
                        nb &= nb - 1;
                        key.push_back(cell_of[w]);
                    }
                    std::sort(key.begin(), key.end());
                    groups[key].push_back(v);
                }
                if (groups.size() > 1) changed = true;
                for (auto& [key, verts] : groups) next.push_back(std::move(verts));
            }
            cells = std::move(next);
        }
    }

    void search(std::vector<std::vector<int>> cells) {
        refine(cells);
        int target = -1;
        for (size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = static_cast<int>(c);
                break;
            }
        if (target == -1) {
            std::vector<int> perm;
            perm.reserve(n);
            for (auto& cell : cells) perm.push_back(cell[0]);
            std::string enc = encode(perm);
            if (!has_best || enc < best) {
                best = std::move(enc);
                best_perm = std::move(perm);
                has_best = true;
            }
            return;
        }
        const auto& cell = cells[target];
        std::vector<char> skip(cell.size(), 0);
        for (size_t i = 0; i < cell.size(); ++i) {
            if (skip[i]) continue;
            for (size_t j = i + 1; j < cell.size(); ++j) {
                std::uint64_t drop = (1ull << cell[i]) | (1ull << cell[j]);
                if ((adj[cell[i]] & ~drop) == (adj[cell[j]] & ~drop)) skip[j] = 1;
            }
            std::vector<std::vector<int>> child;
            child.reserve(cells.size() + 1);
            for (size_t c = 0; c < cells.size(); ++c) {
                if (static_cast<int>(c) != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({cell[i]});
                std::vector<int> rest;
                for (int v : cell)
                    if (v != cell[i]) rest.push_back(v);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }

    void run() {
        if (n == 0) {
            best.push_back(0);
            has_best = true;
            return;
        }
        std::map<int, std::vector<int>> by_degree;
        for (int v = 0; v < n; ++v) by_degree[__builtin_popcountll(adj[v])].push_back(v);
        std::vector<std::vector<int>> cells;
        for (auto& [d, verts] : by_degree) cells.push_back(std::move(verts));
        search(std::move(cells));
    }
};

std::string labeled_encoding(const Graph& g) {
    std::string out = "n=" + std::to_string(g.vertex_count()) + ";";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + "," + std::to_string(v) + ";";
    return out;
}

std::string with_length(const std::string& s) {
    std::string out;
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>((s.size() >> shift) & 0xff));
    out += s;
    return out;
}

struct CanonPieces {
    bool all_canonical = true;
    // (piece string, component) sorted by piece string
    std::vector<std::pair<std::string, const Component*>> pieces;
    std::vector<std::vector<int>> perms; // per piece, when canonical
};

CanonPieces canonize_components(const std::vector<Component>& comps, int guard) {
    std::vector<std::pair<std::string, int>> keyed;
    std::vector<std::vector<int>> perms(comps.size());
    bool all = true;
    for (size_t i = 0; i < comps.size(); ++i) {
        const Graph& cg = comps[i].graph;
        if (cg.vertex_count() <= guard && cg.vertex_count() <= 64) {
            Canonizer cz(cg);
            cz.run();
            keyed.emplace_back("C" + cz.best, static_cast<int>(i));
            perms[i] = cz.best_perm;
        } else {
            keyed.emplace_back("L" + labeled_encoding(cg), static_cast<int>(i));
            perms[i].resize(cg.vertex_count());
            for (int v = 0; v < cg.vertex_count(); ++v) perms[i][v] = v;
            all = false;
        }
    }
    std::sort(keyed.begin(), keyed.end());
    CanonPieces out;
    out.all_canonical = all;
    for (auto& [key, idx] : keyed) {
        out.pieces.emplace_back(key, &comps[idx]);
        out.perms.push_back(perms[idx]);
    }
    return out;
}

} // namespace

std::string canonical_form(const Graph& g, int size_guard) {
    auto preds = structural_predicates(g);
    auto pieces = canonize_components(preds.components, size_guard);
    std::string out(1, pieces.all_canonical ? 'C' : 'L');
    for (auto& [key, comp] : pieces.pieces) out += with_length(key);
    return out;
}

std::vector<std::pair<int, int>> canonical_edge_list(const Graph& g, int size_guard) {
    auto preds = structural_predicates(g);
    auto pieces = canonize_components(preds.components, size_guard);
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (size_t i = 0; i < pieces.pieces.size(); ++i) {
        const Graph& cg = pieces.pieces[i].second->graph;
        const auto& perm = pieces.perms[i]; // perm[new] = old
        std::vector<int> inv(cg.vertex_count());
        for (int v = 0; v < cg.vertex_count(); ++v) inv[perm[v]] = v;
        for (auto [u, v] : cg.edges()) {
            int a = inv[u] + offset, b = inv[v] + offset;
            if (a > b) std::swap(a, b);
            edges.emplace_back(a, b);
        }
        offset += cg.vertex_count();
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace uppertail
