#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "uppertail/graph.hpp"

namespace uppertail {

// Plain Monte Carlo over G(n,p) with exact copy counting per sample.
// The normalized exponent is reported for orientation only; nothing at
// desk scale verifies the asymptotic claim, and the note says so.
struct SampleStats {
    int n = 0;
    double p = 0.0;
    std::string h_spec;
    long long num_samples = 0;
    std::uint64_t seed = 0;
    double mean_count = 0.0;
    double variance = 0.0;
    double tail_threshold = 0.0;
    long long tail_hits = 0;
    double tail_estimate = 0.0;
    double ci_halfwidth = 0.0; // 95% normal approx for the tail frequency
                               // (one-sided rule-of-three upper bound at 0 hits)
    std::optional<double> normalized_exponent; // -log(est)/(n^2 p^Delta log(1/p))
    std::string note;

    std::string to_json() const;
};

// Counter-based generator: edge k of stream `seed` is present iff
// u01(splitmix64(seed + (k+1) * golden)) < p. Identical seed, identical graph.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// Copies of H in a sampled graph (injective homomorphisms / |Aut(H)|).
long long count_copies_sample(const Graph& h, const Graph& g, int aut_guard = 10);

// Exact E[X_H] = (n)_{|V(H)|} p^{|E(H)|} / |Aut(H)|.
double expected_copies(const Graph& h, int n, double p, int aut_guard = 10);

SampleStats estimate_upper_tail(const Graph& h, int n, double p, double delta,
                                long long num_samples, std::uint64_t seed,
                                const std::string& h_spec_label = "");

} // namespace uppertail
