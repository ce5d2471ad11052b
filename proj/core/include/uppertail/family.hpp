#pragma once

#include <string>
#include <vector>

#include "uppertail/graph.hpp"
#include "uppertail/indpoly.hpp"

namespace uppertail {

// One isomorphism class of contributing subgraphs F: the edges of H incident
// to an independent set A of maximum-degree vertices. multiplicity is N(F,H),
// the number of copies of F in H; generating_sets counts the sets A that
// produce the class (equal to multiplicity except for the full edge set of a
// regular bipartite H, where the two color classes both generate it).
struct FamilyEntry {
    Graph subgraph;                                 // on its covered vertices
    std::vector<int> core_set;                      // one generating A, H labels
    long long multiplicity = 0;                     // N(F, H)
    long long generating_sets = 0;
    int core_size = 0;                              // |A|
    int edge_count = 0;                             // |E(F)| = Delta * |A|
    std::vector<std::pair<int, int>> canonical_edges;
};

struct FamilyReport {
    int delta = 0;
    bool h_in_family = false; // H connected, regular and bipartite
    std::vector<FamilyEntry> entries;
    std::string to_json() const;
};

// Enumerates nonempty independent sets of the max-degree core, groups the
// induced edge sets by isomorphism. Requires H connected with Delta >= 2.
FamilyReport enumerate_family(const Graph& h, int size_guard = 20);

// Independent oracle: filters all 2^|E(H)| edge subsets by
// Delta(F) = Delta(H) and tau(F) = |E(F)|/Delta(F), then groups by
// isomorphism. Requires |E(H)| <= edge_guard.
FamilyReport enumerate_family_bruteforce(const Graph& h, int edge_guard = 14);

// Both reports describe the same classes with the same multiplicities.
bool family_reports_equal(const FamilyReport& a, const FamilyReport& b);

// lhs: independence polynomial of the max-degree core. rhs: 1 plus one term
// N(F,H) x^{|E(F)|/Delta} per class plus x^{|E(H)|/Delta} when H is regular
// bipartite. holds: exact coefficient equality.
struct IdentityReport {
    IntPolynomial lhs;
    IntPolynomial rhs;
    bool holds = false;
    std::string to_json() const;
};

IdentityReport verify_identity(const Graph& h, int size_guard = 20);

} // namespace uppertail
