#include "uppertail/mc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "format.hpp"

namespace uppertail {

using detail::fmt12;
using detail::json_str;

namespace {

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double u01_at(std::uint64_t seed, std::uint64_t k) {
    return (splitmix64_at(seed, k) >> 11) * 0x1.0p-53;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64_at(seed, stream ^ 0x5bf03635ull);
}

} // namespace

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_gnp: need n >= 1");
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("sample_gnp: p outside [0,1]");
    std::vector<std::pair<int, int>> edges;
    std::uint64_t k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (u01_at(seed, k) < p) edges.emplace_back(u, v);
            ++k;
        }
    return Graph(n, std::move(edges));
}

long long count_copies_sample(const Graph& h, const Graph& g, int aut_guard) {
    if (h.vertex_count() < 1) throw std::invalid_argument("count_copies_sample: empty pattern");
    return count_copies(h, g, aut_guard);
}

double expected_copies(const Graph& h, int n, double p, int aut_guard) {
    double falling = 1.0;
    for (int i = 0; i < h.vertex_count(); ++i) falling *= static_cast<double>(n - i);
    if (falling <= 0) return 0.0;
    return falling * std::pow(p, h.edge_count()) /
           static_cast<double>(automorphism_count(h, aut_guard));
}

SampleStats estimate_upper_tail(const Graph& h, int n, double p, double delta,
                                long long num_samples, std::uint64_t seed,
                                const std::string& h_spec_label) {
    if (num_samples < 1) throw std::invalid_argument("estimate_upper_tail: need num_samples >= 1");
    if (!(delta > 0)) throw std::invalid_argument("estimate_upper_tail: delta must be positive");

    SampleStats st;
    st.n = n;
    st.p = p;
    st.h_spec = h_spec_label;
    st.num_samples = num_samples;
    st.seed = seed;
    st.tail_threshold = (1 + delta) * expected_copies(h, n, p);

    double sum = 0.0, sumsq = 0.0;
    long long hits = 0;
    for (long long i = 0; i < num_samples; ++i) {
        Graph g = sample_gnp(n, p, stream_seed(seed, static_cast<std::uint64_t>(i)));
        double c = static_cast<double>(count_copies_sample(h, g));
        sum += c;
        sumsq += c * c;
        if (c >= st.tail_threshold) ++hits;
    }
    st.mean_count = sum / num_samples;
    st.variance = num_samples > 1
                      ? std::max(0.0, (sumsq - sum * sum / num_samples) / (num_samples - 1))
                      : 0.0;
    st.tail_hits = hits;
    st.tail_estimate = static_cast<double>(hits) / num_samples;
    if (hits > 0) {
        st.ci_halfwidth =
            1.959963984540054 *
            std::sqrt(st.tail_estimate * (1 - st.tail_estimate) / num_samples);
        if (p > 0 && p < 1) {
            double norm = static_cast<double>(n) * n * std::pow(p, max_degree(h)) *
                          std::log(1.0 / p);
            st.normalized_exponent = -std::log(st.tail_estimate) / norm;
        }
    } else {
        // one-sided 95% upper bound (rule of three)
        st.ci_halfwidth = 3.0 / static_cast<double>(num_samples);
    }
    st.note = "asymptotic claim not verified at this scale";
    return st;
}

std::string SampleStats::to_json() const {
    std::string out = "{";
    out += "\"n\":" + std::to_string(n);
    out += ",\"p\":" + fmt12(p);
    out += ",\"h\":" + json_str(h_spec);
    out += ",\"num_samples\":" + std::to_string(num_samples);
    out += ",\"seed\":" + std::to_string(seed);
    out += ",\"mean_count\":" + fmt12(mean_count);
    out += ",\"variance\":" + fmt12(variance);
    out += ",\"tail_threshold\":" + fmt12(tail_threshold);
    out += ",\"tail_hits\":" + std::to_string(tail_hits);
    out += ",\"tail_estimate\":" + fmt12(tail_estimate);
    out += ",\"ci_halfwidth\":" + fmt12(ci_halfwidth);
    out += ",\"normalized_exponent\":" + (normalized_exponent ? fmt12(*normalized_exponent) : "null");
    out += ",\"note\":" + json_str(note);
    out += "}";
    return out;
}

} // namespace uppertail
