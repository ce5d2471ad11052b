#pragma once

// Test-only oracles, written independently of the library's code paths:
// direct subset enumerations and exhaustive searches that the fast
// implementations are checked against.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uppertail/graph.hpp"

namespace oracle {

// i_G(k) for all k by enumerating all 2^n vertex subsets (n <= 24).
std::vector<long long> brute_independence_counts(const uppertail::Graph& g);

// minimum vertex cover by subset enumeration (n <= 20)
int brute_vertex_cover(const uppertail::Graph& g);

// maximum matching by plain recursion over edges (no memo, no Kuhn)
int brute_matching(const uppertail::Graph& g);

// exhaustive search over half-integral weights w(e) in {0, 1/2, 1} subject to
// vertex capacities; returns twice the optimum. Equals 2 nu*(G).
int brute_halfintegral_matching_twice(const uppertail::Graph& g);

// injective homomorphisms F -> H by unpruned recursion in label order
long long brute_injective_homs(const uppertail::Graph& f, const uppertail::Graph& h);

// all isomorphism classes on exactly n vertices (optionally connected only),
// generated by vertex augmentation and canonical-form deduplication
std::vector<uppertail::Graph> all_graphs(int n, bool connected_only);

// deterministic test rng
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    double u01();
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

uppertail::Graph random_graph(int n, double edge_prob, Rng& rng);
uppertail::Graph random_bipartite(int left, int right, double edge_prob, Rng& rng);

// the named graphs used across the test suite
struct CorpusEntry {
    std::string name;
    uppertail::Graph graph;
};
std::vector<CorpusEntry> corpus();

} // namespace oracle
