#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "format.hpp"
#include "uppertail/varprob.hpp"

namespace uppertail {

using detail::fmt12;

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double u01(std::uint64_t& state) { return (splitmix64(state) >> 11) * 0x1.0p-53; }

struct Best {
    bool found = false;
    double entropy = std::numeric_limits<double>::infinity();
    double density = 0.0;
    WeightedGraph graph;

    void offer(const WeightedGraph& g, double entropy_value, double density_value) {
        if (!found || entropy_value < entropy ||
            (entropy_value == entropy && g.raw() < graph.raw())) {
            found = true;
            entropy = entropy_value;
            density = density_value;
            graph = g;
        }
    }
};

} // namespace

void SolveConfig::validate(double p, int h_edges, double delta) const {
    if (!(mu0 > 0) || !(mu_growth > 0) || penalty_rounds <= 0 || max_iterations <= 0 ||
        !(armijo > 0) || random_starts < 0)
        throw std::invalid_argument("SolveConfig: all parameters must be positive");
    double tol = feasibility_tol < 0 ? 1e-10 * std::pow(p, h_edges) : feasibility_tol;
    if (!(tol > 0) || !(tol < delta * std::pow(p, h_edges)))
        throw std::invalid_argument("SolveConfig: feasibility tolerance must sit in (0, delta p^|E|)");
}

SolveResult solve_variational(const Graph& h, int n, double p, double delta,
                              const SolveConfig& cfg, std::vector<TraceRow>* trace) {
    if (n < 2) throw std::invalid_argument("solve_variational: need n >= 2");
    if (!(p > 0 && p < 1)) throw std::invalid_argument("solve_variational: p outside (0,1)");
    if (!(delta > 0)) throw std::invalid_argument("solve_variational: delta must be positive");
    cfg.validate(p, h.edge_count(), delta);

    const double p_pow_e = std::pow(p, h.edge_count());
    const double target = (1 + delta) * p_pow_e;
    const double tol = cfg.feasibility_tol < 0 ? 1e-10 * p_pow_e : cfg.feasibility_tol;
    const int pairs_n = n;

    auto density_of = [&](const WeightedGraph& g) { return hom_density(h, g); };

    Best best;
    double best_residual = std::numeric_limits<double>::infinity();
    auto offer = [&](const WeightedGraph& g, double density_value) {
        best_residual = std::min(best_residual, std::max(0.0, target - density_value));
        if (density_value >= target - tol) best.offer(g, graph_entropy(g, p), density_value);
    };

    // admissible start points; the planted candidates are feasible whenever
    // their block search succeeds, so the result can never lose to them
    std::vector<WeightedGraph> starts;
    starts.push_back(WeightedGraph::constant(n, p));
    auto preds = structural_predicates(h);
    if (preds.is_connected && preds.is_regular) {
        auto c = clique_candidate(h, n, p, delta, n);
        if (c.graph) starts.push_back(std::move(*c.graph));
    }
    if (max_degree(h) >= 2) {
        auto c = anticlique_candidate(h, n, p, delta, n);
        if (c.graph) starts.push_back(std::move(*c.graph));
    }
    std::uint64_t rng = cfg.seed;
    for (int r = 0; r < cfg.random_starts; ++r) {
        WeightedGraph g(n, p);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.set(i, j, p + 0.25 * (1 - p) * u01(rng));
        starts.push_back(std::move(g));
    }

    long long iterations = 0;
    long long trace_iter = 0;

    for (auto& start : starts) {
        WeightedGraph g = start;
        double t = density_of(g);
        offer(g, t);

        double mu = cfg.mu0;
        for (int round = 0; round < cfg.penalty_rounds; ++round) {
            double eta = 1.0;
            for (int it = 0; it < cfg.max_iterations; ++it) {
                double entropy = graph_entropy(g, p);
                double r = std::max(0.0, (target - t) / p_pow_e);
                double phi = entropy + mu * r * r;
                if (trace) trace->push_back({trace_iter++, phi, std::max(0.0, target - t), mu});

                // gradient of the penalized objective over the upper triangle
                std::vector<double> tgrad;
                if (r > 0) tgrad = hom_density_gradient(h, g);
                std::vector<double> grad(static_cast<size_t>(n) * n, 0.0);
                for (int i = 0; i < pairs_n; ++i) {
                    for (int j = i + 1; j < pairs_n; ++j) {
                        double x = std::clamp(g.at(i, j), p, 1.0 - 1e-12);
                        double d = relative_entropy_derivative(x, p);
                        if (r > 0) d -= 2.0 * mu * r / p_pow_e * tgrad[static_cast<size_t>(i) * n + j];
                        grad[static_cast<size_t>(i) * n + j] = d;
                    }
                }

                // projected backtracking step (Armijo on the penalized objective)
                bool accepted = false;
                WeightedGraph next = g;
                double next_t = t;
                double next_phi = phi;
                while (eta > 1e-14) {
                    double decrease = 0.0;
                    for (int i = 0; i < n; ++i) {
                        for (int j = i + 1; j < n; ++j) {
                            double x = std::clamp(g.at(i, j) - eta * grad[static_cast<size_t>(i) * n + j],
                                                  p, 1.0);
                            next.set(i, j, x);
                            decrease += grad[static_cast<size_t>(i) * n + j] * (g.at(i, j) - x);
                        }
                    }
                    next_t = density_of(next);
                    double nr = std::max(0.0, (target - next_t) / p_pow_e);
                    next_phi = graph_entropy(next, p) + mu * nr * nr;
                    if (next_phi <= phi - cfg.armijo * decrease && next_phi < phi) {
                        accepted = true;
                        break;
                    }
                    eta *= 0.5;
                }
                if (!accepted) break;

                double change = 0.0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        change = std::max(change, std::abs(next.at(i, j) - g.at(i, j)));
                g = next;
                t = next_t;
                ++iterations;
                offer(g, t);
                eta = std::min(eta * 2.0, 64.0);
                if (change < 1e-11) break;
                if (phi - next_phi < 1e-10 * (1.0 + std::abs(phi))) break;
            }

            // feasibility restoration: blend toward the all-ones table, where
            // the density is monotone in the blend weight
            if (t < target) {
                WeightedGraph ones(n, 1.0);
                double lo = 0.0, hi = 1.0;
                double t_hi = density_of(ones);
                if (t_hi >= target) {
                    auto blend = [&](double lambda) {
                        WeightedGraph b(n, p);
                        for (int i = 0; i < n; ++i)
                            for (int j = i + 1; j < n; ++j)
                                b.set(i, j, g.at(i, j) + lambda * (1.0 - g.at(i, j)));
                        return b;
                    };
                    for (int it = 0; it < 60; ++it) {
                        double mid = 0.5 * (lo + hi);
                        if (density_of(blend(mid)) >= target)
                            hi = mid;
                        else
                            lo = mid;
                    }
                    WeightedGraph restored = blend(hi);
                    offer(restored, density_of(restored));
                }
            } else {
                offer(g, t);
            }
            mu *= cfg.mu_growth;
        }
    }

    SolveResult out;
    out.target = target;
    out.iterations = iterations;
    if (best.found) {
        out.graph = best.graph;
        out.entropy = best.entropy;
        out.density = best.density;
        out.feasible = true;
        out.residual = std::max(0.0, target - best.density);
    } else {
        out.graph = WeightedGraph::constant(n, p);
        out.entropy = graph_entropy(out.graph, p);
        out.density = density_of(out.graph);
        out.feasible = false;
        out.residual = best_residual;
    }
    out.normalized = out.entropy / (static_cast<double>(n) * n * std::pow(p, max_degree(h)) *
                                    std::log(1.0 / p));
    return out;
}

std::string SolveResult::to_json() const {
    std::string out = "{";
    out += "\"entropy\":" + fmt12(entropy);
    out += ",\"normalized\":" + fmt12(normalized);
    out += ",\"feasible\":" + std::string(feasible ? "true" : "false");
    out += ",\"iterations\":" + std::to_string(iterations);
    out += ",\"density\":" + fmt12(density);
    out += ",\"residual\":" + fmt12(residual);
    out += ",\"target\":" + fmt12(target);
    out += "}";
    return out;
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
    std::string out = "iteration,objective,residual\n";
    for (const auto& r : rows)
        out += std::to_string(r.iteration) + "," + fmt12(r.objective) + "," + fmt12(r.residual) + "\n";
    return out;
}

} // namespace uppertail
