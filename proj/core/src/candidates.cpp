#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "format.hpp"
#include "uppertail/rate.hpp"
#include "uppertail/varprob.hpp"

namespace uppertail {

using detail::fmt12;
using detail::json_str;

namespace {

void check_npd(long long n, double p, double delta) {
    if (n < 1) throw std::invalid_argument("candidate: need n >= 1");
    if (!(p > 0 && p < 1)) throw std::invalid_argument("candidate: p outside (0,1)");
    if (!(delta > 0)) throw std::invalid_argument("candidate: delta must be positive");
}

// subset sums over V(H) with induced edge counts
std::vector<int> induced_edge_counts(const Graph& h) {
    const int k = h.vertex_count();
    if (k > 24) throw size_guard_error("graphon candidate: |V(H)| too large for subset sums");
    std::vector<int> count(1u << k, 0);
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        int v = __builtin_ctz(mask);
        unsigned rest = mask & (mask - 1);
        int extra = 0;
        for (int u : h.neighbors(v))
            if (rest >> u & 1) ++extra;
        count[mask] = count[rest] + extra;
    }
    return count;
}

} // namespace

StepGraphon clique_graphon(const Graph& h, double p, double delta) {
    auto preds = structural_predicates(h);
    if (!preds.is_connected || !preds.is_regular)
        throw std::invalid_argument("clique_graphon: H must be regular and connected");
    double a = std::pow(delta, 1.0 / h.vertex_count()) * std::pow(p, max_degree(h) / 2.0);
    if (a > 1) throw std::invalid_argument("clique_graphon: block width a exceeds 1");
    return StepGraphon{{0.0, a, 1.0}, {{1.0, p}, {p, p}}};
}

StepGraphon anticlique_graphon(const Graph& h, double p, double delta) {
    double theta = anticlique_theta(h, delta);
    double b = theta * std::pow(p, max_degree(h));
    if (b > 1) throw std::invalid_argument("anticlique_graphon: block width b exceeds 1");
    return StepGraphon{{0.0, b, 1.0}, {{1.0, 1.0}, {1.0, p}}};
}

GraphonCandidateDensity graphon_candidate_density(const Graph& h, CandidateKind which, double p,
                                                  double delta) {
    if (!(p > 0 && p < 1)) throw std::invalid_argument("graphon_candidate_density: p outside (0,1)");
    if (!(delta > 0)) throw std::invalid_argument("graphon_candidate_density: delta positive");
    const int k = h.vertex_count();
    const int m = h.edge_count();
    auto counts = induced_edge_counts(h);

    double density = 0.0;
    if (which == CandidateKind::clique) {
        auto preds = structural_predicates(h);
        if (!preds.is_connected || !preds.is_regular)
            throw std::invalid_argument("graphon_candidate_density: clique needs regular connected H");
        double a = std::pow(delta, 1.0 / k) * std::pow(p, max_degree(h) / 2.0);
        if (a > 1) throw std::invalid_argument("graphon_candidate_density: a exceeds 1");
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            int s = __builtin_popcount(mask);
            density += std::pow(a, s) * std::pow(1 - a, k - s) * std::pow(p, m - counts[mask]);
        }
    } else {
        double theta = anticlique_theta(h, delta);
        double b = theta * std::pow(p, max_degree(h));
        if (b > 1) throw std::invalid_argument("graphon_candidate_density: b exceeds 1");
        const unsigned full = (1u << k) - 1;
        for (unsigned mask = 0; mask <= full; ++mask) {
            int s = __builtin_popcount(mask);
            density += std::pow(b, s) * std::pow(1 - b, k - s) * std::pow(p, counts[full & ~mask]);
        }
    }
    GraphonCandidateDensity out;
    out.density = density;
    out.ratio = density / std::pow(p, m);
    return out;
}

namespace {

struct PlantedSearch {
    long long s = 0;
    bool feasible = false;
    double density = 0.0;
};

PlantedSearch search_block_size(const Graph& h, long long n, double seed_real, double target,
                                const BlockModel& proto) {
    long long s0 = std::max<long long>(1, static_cast<long long>(std::ceil(seed_real)));
    long long cap = std::max<long long>(s0, static_cast<long long>(std::ceil(2.0 * seed_real)));
    s0 = std::min(s0, n);
    cap = std::min(cap, n);
    PlantedSearch out;
    for (long long s = s0; s <= cap; ++s) {
        BlockModel model = proto;
        model.sizes = {s, n - s};
        out.s = s;
        out.density = block_hom_density(h, model);
        if (out.density >= target) {
            out.feasible = true;
            return out;
        }
    }
    return out;
}

} // namespace

CandidateResult clique_candidate(const Graph& h, long long n, double p, double delta,
                                 long long materialize_limit) {
    check_npd(n, p, delta);
    auto preds = structural_predicates(h);
    if (!preds.is_connected || !preds.is_regular)
        throw std::invalid_argument("clique_candidate: H must be regular and connected");
    const int delta_h = max_degree(h);
    const double target = (1 + delta) * std::pow(p, h.edge_count());
    const double seed = std::pow(delta, 1.0 / h.vertex_count()) * std::pow(p, delta_h / 2.0) * n;

    BlockModel proto;
    proto.weights = {{1.0, p}, {p, p}};
    auto found = search_block_size(h, n, seed, target, proto);

    CandidateResult out;
    out.s = found.s;
    out.feasible = found.feasible;
    out.density = found.density;
    out.target = target;
    out.entropy = 0.5 * static_cast<double>(found.s) * (found.s - 1) * std::log(1.0 / p);
    out.normalized =
        out.entropy / (static_cast<double>(n) * n * std::pow(p, delta_h) * std::log(1.0 / p));
    if (!found.feasible)
        out.warning = "no feasible block size within twice the asymptotic seed (s searched up to " +
                      std::to_string(found.s) + ")";
    if (n <= materialize_limit) {
        WeightedGraph g(static_cast<int>(n), p);
        for (long long i = 0; i < found.s; ++i)
            for (long long j = i + 1; j < found.s; ++j)
                g.set(static_cast<int>(i), static_cast<int>(j), 1.0);
        out.graph = std::move(g);
    }
    return out;
}

CandidateResult anticlique_candidate(const Graph& h, long long n, double p, double delta,
                                     long long materialize_limit) {
    check_npd(n, p, delta);
    const int delta_h = max_degree(h);
    if (delta_h < 2) throw std::invalid_argument("anticlique_candidate: need Delta >= 2");
    const double theta = anticlique_theta(h, delta);
    const double target = (1 + delta) * std::pow(p, h.edge_count());
    const double seed = theta * std::pow(p, delta_h) * n;

    BlockModel proto;
    proto.weights = {{1.0, 1.0}, {1.0, p}};
    auto found = search_block_size(h, n, seed, target, proto);

    CandidateResult out;
    out.s = found.s;
    out.feasible = found.feasible;
    out.density = found.density;
    out.target = target;
    // pairs touching the hub: C(n,2) - C(n-s,2)
    double hub_pairs = 0.5 * (static_cast<double>(n) * (n - 1) -
                              static_cast<double>(n - found.s) * (n - found.s - 1));
    out.entropy = hub_pairs * std::log(1.0 / p);
    out.normalized =
        out.entropy / (static_cast<double>(n) * n * std::pow(p, delta_h) * std::log(1.0 / p));
    if (seed < 1.0)
        out.warning = "theta p^Delta n < 1: below the viability boundary of the anti-clique "
                      "construction at this (n, p)";
    if (!found.feasible) {
        if (!out.warning.empty()) out.warning += "; ";
        out.warning += "no feasible block size within twice the asymptotic seed (s searched up to " +
                       std::to_string(found.s) + ")";
    }
    if (n <= materialize_limit) {
        WeightedGraph g(static_cast<int>(n), p);
        for (long long i = 0; i < n; ++i)
            for (long long j = i + 1; j < n; ++j)
                if (i < found.s || j < found.s) g.set(static_cast<int>(i), static_cast<int>(j), 1.0);
        out.graph = std::move(g);
    }
    return out;
}

std::string CandidateResult::to_json() const {
    std::string out = "{";
    out += "\"s\":" + std::to_string(s);
    out += ",\"entropy\":" + fmt12(entropy);
    out += ",\"normalized\":" + fmt12(normalized);
    out += ",\"feasible\":" + std::string(feasible ? "true" : "false");
    out += ",\"density\":" + fmt12(density);
    out += ",\"target\":" + fmt12(target);
    out += ",\"warning\":" + json_str(warning);
    out += "}";
    return out;
}

std::string GraphonCandidateDensity::to_json() const {
    return "{\"density\":" + fmt12(density) + ",\"ratio\":" + fmt12(ratio) + "}";
}

} // namespace uppertail
