#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "uppertail/graph.hpp"

namespace uppertail {

namespace {

struct HomSearch {
    const Graph& f;
    const Graph& h;
    std::vector<char> hadj;             // |V(H)|^2 adjacency
    std::vector<int> order;             // F vertices, connectivity-first
    std::vector<std::vector<int>> back; // earlier F-neighbors of order[i]
    std::vector<int> image;
    std::vector<char> used;
    long long count = 0;

    HomSearch(const Graph& fg, const Graph& hg) : f(fg), h(hg) {
        const int hn = h.vertex_count();
        hadj.assign(static_cast<size_t>(hn) * hn, 0);
        for (auto [u, v] : h.edges()) {
            hadj[static_cast<size_t>(u) * hn + v] = 1;
            hadj[static_cast<size_t>(v) * hn + u] = 1;
        }
        // order: repeatedly take the unplaced vertex with most placed neighbors,
        // ties to higher degree then lower label
        const int fn = f.vertex_count();
        std::vector<char> placed(fn, 0);
        for (int step = 0; step < fn; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < fn; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int w : f.neighbors(v)) links += placed[w];
                if (links > best_links || (links == best_links && f.degree(v) > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = f.degree(v);
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
        back.resize(fn);
        std::vector<int> pos(fn);
        for (int i = 0; i < fn; ++i) pos[order[i]] = i;
        for (int i = 0; i < fn; ++i)
            for (int w : f.neighbors(order[i]))
                if (pos[w] < i) back[i].push_back(pos[w]);
        image.assign(fn, -1);
        used.assign(hn, 0);
    }

    void run(int depth) {
        const int fn = f.vertex_count();
        if (depth == fn) {
            ++count;
            return;
        }
        const int hn = h.vertex_count();
        const int fv = order[depth];
        for (int target = 0; target < hn; ++target) {
            if (used[target]) continue;
            if (h.degree(target) < f.degree(fv)) continue;
            bool ok = true;
            for (int earlier : back[depth]) {
                if (!hadj[static_cast<size_t>(image[earlier]) * hn + target]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[depth] = target;
            used[target] = 1;
            run(depth + 1);
            used[target] = 0;
        }
    }
};

} // namespace

long long count_injective_homomorphisms(const Graph& f, const Graph& h) {
    if (f.vertex_count() > h.vertex_count()) return 0;
    if (f.vertex_count() == 0) return 1;
    HomSearch search(f, h);
    search.run(0);
    return search.count;
}

long long automorphism_count(const Graph& g, int size_guard) {
    if (g.vertex_count() > size_guard)
        throw size_guard_error("automorphism_count: " + std::to_string(g.vertex_count()) +
                               " vertices exceeds guard " + std::to_string(size_guard));
    if (g.vertex_count() == 0) return 1;
    // injective homomorphisms G -> G with equal vertex and edge counts are
    // exactly the automorphisms; degree pruning in the search does the rest
    return count_injective_homomorphisms(g, g);
}

long long count_copies(const Graph& f, const Graph& h, int aut_guard) {
    if (f.edge_count() == 0 && f.vertex_count() == 0) return 1;
    long long homs = count_injective_homomorphisms(f, h);
    if (homs == 0) return 0;
    long long aut = automorphism_count(f, aut_guard);
    if (homs % aut != 0)
        throw std::logic_error("count_copies: injective homomorphisms not divisible by |Aut|");
    return homs / aut;
}

} // namespace uppertail
