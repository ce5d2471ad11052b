#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uppertail/errors.hpp"

namespace uppertail {

// Simple undirected labeled graph. Vertices are 0..n-1; isolated vertices
// are representable (n may exceed the number of covered vertices).
class Graph {
public:
    Graph() = default;
    Graph(int n_vertices, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_; // normalized u < v, sorted, unique
    std::vector<std::vector<int>> adj_;
};

// Either a named preset with integer parameters or an explicit edge list.
// Presets: cycle:k (k>=3), clique:k (k>=1), complete_bipartite:k,l,
// path:k (k vertices), star:k (k leaves), binary_tree:h, b_ary_tree:b,h,
// petersen. Labelings are fixed (cycle: consecutive; complete_bipartite:
// left block first; trees: breadth-first) so tests are reproducible.
struct GraphSpec {
    std::string preset;
    std::vector<long long> params;
    std::optional<std::vector<std::pair<int, int>>> edge_list;
    std::optional<int> n_vertices; // only with edge_list, to declare isolated vertices
};

Graph build_graph(const GraphSpec& spec);
Graph disjoint_union(const Graph& a, const Graph& b);

int max_degree(const Graph& g);

struct Component {
    Graph graph;
    std::vector<int> vertex_map; // component label -> original label
};

struct StructuralPredicates {
    bool is_regular = false;
    bool is_connected = false;
    bool is_bipartite = false;
    std::vector<Component> components;
};

StructuralPredicates structural_predicates(const Graph& g);

// Two-coloring; fills side (0/1 per vertex) when bipartite and side != nullptr.
bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr);

// Induced subgraph on the given vertices; vertex i of the result is verts[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// Induced subgraph on all vertices of degree exactly delta_ref.
Graph max_degree_core(const Graph& g, int delta_ref);
std::vector<int> max_degree_core_vertices(const Graph& g, int delta_ref);

// Exact vertex cover number by branch and bound.
int vertex_cover_number(const Graph& g, int size_guard = 24);

// Exact matching number: augmenting paths for bipartite graphs, branching
// with memoization otherwise (vertex masks, so non-bipartite inputs are
// capped at 64 vertices).
int matching_number(const Graph& g);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational& o) const { return num * o.den == o.num * den; }
};

// Exact fractional matching number, computed as half the matching number
// of the bipartite double cover. Always half-integral.
Rational fractional_matching_number(const Graph& g);

long long automorphism_count(const Graph& g, int size_guard = 10);

// Injective homomorphisms F -> H (backtracking with adjacency pruning).
long long count_injective_homomorphisms(const Graph& f, const Graph& h);

// Copies of F in H as vertex-and-edge subgraphs: injective homs / |Aut(F)|.
long long count_copies(const Graph& f, const Graph& h, int aut_guard = 10);

// Canonical byte sequence: identical for isomorphic graphs whose components
// all fit the guard (prefix "C"); beyond the guard, a deterministic labeled
// encoding is returned instead (prefix "L"), which never collides with the
// canonical regime.
std::string canonical_form(const Graph& g, int size_guard = 12);

// Edge list of the canonically relabeled graph (components within guard).
std::vector<std::pair<int, int>> canonical_edge_list(const Graph& g, int size_guard = 12);

} // namespace uppertail
