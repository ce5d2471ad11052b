#pragma once

#include <iosfwd>
#include <string>

#include "uppertail/graph.hpp"
#include "uppertail/varprob.hpp"

namespace uppertail {

// Edge-list text format: one "u v" pair per line (0-indexed decimal),
// optional first line "n <count>" to declare isolated vertices, lines
// starting with '#' ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

// "name:p1,p2" preset syntax; "+" joins presets into a disjoint union
// (e.g. "clique:3+star:2").
GraphSpec parse_preset(const std::string& token);
Graph parse_graph_argument(const std::string& arg);

// Weighted-graph text format: a header carrying n, p and a hash of the
// graph argument it was solved against, then the upper triangle row-major.
std::string write_weighted_graph(const WeightedGraph& g, double p, const std::string& h_spec);
WeightedGraph read_weighted_graph(std::istream& in, double* p_out = nullptr,
                                  std::string* h_spec_out = nullptr);

std::uint64_t fnv1a64(const std::string& s);

} // namespace uppertail
