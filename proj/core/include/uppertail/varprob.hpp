#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uppertail/graph.hpp"

namespace uppertail {

// Symmetric n x n edge-weight table with entries in [0,1] and zero diagonal.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n, double fill = 0.0);
    static WeightedGraph constant(int n, double p) { return WeightedGraph(n, p); }

    int size() const { return n_; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double v);
    const std::vector<double>& raw() const { return a_; }

    void validate() const; // symmetry, zero diagonal, entries in [0,1]

private:
    int n_ = 0;
    std::vector<double> a_;
};

// I_p(x) = x log(x/p) + (1-x) log((1-x)/(1-p)), with the 0 log 0 = 0
// conventions at the endpoints. Nonnegative, zero iff x == p.
double relative_entropy_point(double x, double p);
double relative_entropy_derivative(double x, double p);

// Sum of I_p over unordered pairs i < j.
double graph_entropy(const WeightedGraph& g, double p);

// Weighted homomorphism density t(H,G) = n^{-|V(H)|} \sum_maps \prod_edges a,
// including non-injective maps (the zero diagonal kills adjacent collisions).
// Computed by variable elimination along a greedy min-degree ordering; exact
// up to floating point. Throws size_guard_error past the operation budget.
double hom_density(const Graph& h, const WeightedGraph& g, double op_budget = 4e9);

// Direct n^{|V(H)|} sum, for cross-checks. Guarded by the same budget idea.
double hom_density_bruteforce(const Graph& h, const WeightedGraph& g, double op_budget = 1e8);

// d t / d a_{uv} for every unordered pair, as a full symmetric matrix
// (row-major, zero diagonal). Pinned variable elimination per edge of H.
std::vector<double> hom_density_gradient(const Graph& h, const WeightedGraph& g,
                                         double op_budget = 4e9);

// Exact density for a block-structured table: vertices come in blocks of the
// given sizes, the weight between two distinct vertices depends only on their
// blocks, and the diagonal is zero. Works at any n (sums over set partitions
// of V(H), so |V(H)| <= 10).
struct BlockModel {
    std::vector<long long> sizes;
    std::vector<std::vector<double>> weights; // symmetric per-block-pair
};
double block_hom_density(const Graph& h, const BlockModel& model);

// Piecewise-constant symmetric kernel on [0,1]^2.
struct StepGraphon {
    std::vector<double> breakpoints;         // 0 = b_0 < ... < b_B = 1
    std::vector<std::vector<double>> values; // B x B symmetric, entries in [0,1]

    double expected_entropy(double p) const; // E[I_p(W)], exact block sum
    double density(const Graph& h) const;    // t(H, W), exact block sum
};

// The planted constructions in graphon form: W1 = p + (1-p) 1_{[0,a]^2} with
// a = delta^{1/|V|} p^{Delta/2}, and W2 = 1 - (1-p) 1_{[b,1]^2} with
// b = theta p^Delta.
StepGraphon clique_graphon(const Graph& h, double p, double delta);
StepGraphon anticlique_graphon(const Graph& h, double p, double delta);

enum class CandidateKind { clique, anticlique };

// density/p^{|E(H)|} of the candidate graphon, evaluated as the exact sum
// over all 2^{|V(H)|} vertex subsets.
struct GraphonCandidateDensity {
    double density = 0.0;
    double ratio = 0.0;
    std::string to_json() const;
};
GraphonCandidateDensity graphon_candidate_density(const Graph& h, CandidateKind which,
                                                  double p, double delta);

// A planted candidate at finite n: the smallest block size s at or above the
// asymptotic seed that meets t >= (1+delta) p^{|E|}, searched upward with a
// cap of twice the seed. Feasibility and entropy are exact block computations,
// so n may be large; the dense table is materialized only when
// n <= materialize_limit.
struct CandidateResult {
    long long s = 0;
    double entropy = 0.0;
    double normalized = 0.0; // entropy / (n^2 p^Delta log(1/p))
    bool feasible = false;
    double density = 0.0;
    double target = 0.0; // (1+delta) p^{|E|}
    std::optional<WeightedGraph> graph;
    std::string warning;
    std::string to_json() const;
};

CandidateResult clique_candidate(const Graph& h, long long n, double p, double delta,
                                 long long materialize_limit = 2048);
CandidateResult anticlique_candidate(const Graph& h, long long n, double p, double delta,
                                     long long materialize_limit = 2048);

// Exterior-penalty projected gradient descent for the discrete variational
// problem: minimize I_p(G) over the box [p,1] (off-diagonal) subject to
// t(H,G) >= (1+delta) p^{|E|}. Multi-start from the constant-p table, both
// planted candidates and seeded random perturbations; returns the best
// feasible iterate seen anywhere.
struct SolveConfig {
    double mu0 = 1.0;          // penalty weight on ((c - t)/p^{|E|})^2
    double mu_growth = 10.0;
    int penalty_rounds = 8;
    int max_iterations = 250;  // per penalty round
    double feasibility_tol = -1.0; // < 0 means 1e-10 * p^{|E|}
    double armijo = 1e-4;
    std::uint64_t seed = 12345;
    int random_starts = 2;

    void validate(double p, int h_edges, double delta) const;
};

struct TraceRow {
    long long iteration = 0;
    double objective = 0.0;
    double residual = 0.0;
    double mu = 0.0;
};

struct SolveResult {
    WeightedGraph graph;
    double entropy = 0.0;
    double normalized = 0.0;
    bool feasible = false;
    long long iterations = 0;
    double density = 0.0;
    double residual = 0.0; // max(0, target - density) of the returned iterate
    double target = 0.0;
    std::string to_json() const;
};

SolveResult solve_variational(const Graph& h, int n, double p, double delta,
                              const SolveConfig& cfg = {},
                              std::vector<TraceRow>* trace = nullptr);

std::string trace_csv(const std::vector<TraceRow>& rows);

} // namespace uppertail
