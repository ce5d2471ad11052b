#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "uppertail/uppertail.hpp"

using namespace uppertail;

namespace {

Graph preset(const std::string& name, std::vector<long long> params = {}) {
    GraphSpec spec;
    spec.preset = name;
    spec.params = std::move(params);
    return build_graph(spec);
}

WeightedGraph random_weights(int n, oracle::Rng& rng, double lo = 0.05, double hi = 0.95) {
    WeightedGraph g(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.set(i, j, lo + (hi - lo) * rng.u01());
    return g;
}

} // namespace

TEST_CASE("relative entropy point values") {
    CHECK(relative_entropy_point(0.3, 0.3) == doctest::Approx(0.0));
    CHECK(relative_entropy_point(1.0, 0.01) == doctest::Approx(std::log(100.0)));
    CHECK(relative_entropy_point(0.0, 0.25) == doctest::Approx(std::log(1 / 0.75)));
    double p = 1e-3, x = p * p;
    CHECK(relative_entropy_point(p + x, p) ==
          doctest::Approx(x * x / (2 * p)).epsilon(0.05));
    CHECK_THROWS_AS(relative_entropy_point(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(relative_entropy_point(1.5, 0.5), std::invalid_argument);

    // asymptotic regime p << x <= 1-p: I_p(p+x) ~ x log(x/p). The leading
    // correction is -x, so the plain ratio reaches [0.9, 1.1] only once
    // log(x/p) >= 10; checked at p = 1e-12 and with the correction at 1e-4.
    p = 1e-12;
    x = std::sqrt(p);
    double ratio = relative_entropy_point(p + x, p) / (x * std::log(x / p));
    CHECK(ratio > 0.9);
    CHECK(ratio < 1.1);
    p = 1e-4;
    x = std::sqrt(p);
    double corrected = relative_entropy_point(p + x, p) / (x * std::log(x / p) - x);
    CHECK(corrected > 0.98);
    CHECK(corrected < 1.02);
}

TEST_CASE("graph entropy") {
    WeightedGraph flat = WeightedGraph::constant(6, 0.2);
    CHECK(graph_entropy(flat, 0.2) == doctest::Approx(0.0));

    WeightedGraph one_edge = flat;
    one_edge.set(0, 1, 1.0);
    CHECK(graph_entropy(one_edge, 0.2) == doctest::Approx(std::log(5.0)));

    WeightedGraph planted = WeightedGraph::constant(10, 0.2);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) planted.set(i, j, 1.0);
    CHECK(graph_entropy(planted, 0.2) == doctest::Approx(6 * std::log(5.0)));
}

TEST_CASE("hom density matches quoted constant-p value") {
    WeightedGraph g = WeightedGraph::constant(10, 0.3);
    double expect = std::pow(0.3, 3) * (10.0 * 9 * 8) / 1000.0;
    CHECK(hom_density(preset("clique", {3}), g) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("hom density equals brute force") {
    oracle::Rng rng(31337);
    std::vector<Graph> patterns = {preset("clique", {3}), preset("cycle", {4}),
                                   preset("path", {4}), preset("star", {3}),
                                   preset("complete_bipartite", {2, 3}), preset("clique", {4})};
    for (const auto& h : patterns) {
        for (int n : {4, 7, 9}) {
            WeightedGraph g = random_weights(n, rng);
            CHECK(hom_density(h, g) ==
                  doctest::Approx(hom_density_bruteforce(h, g)).epsilon(1e-12));
        }
    }
    // a dense pattern forces elimination width 5
    {
        WeightedGraph g(8, 0.0);
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) g.set(i, j, 0.3 + 0.07 * ((i * 7 + j) % 9));
        Graph k6 = preset("clique", {6});
        CHECK(hom_density(k6, g) ==
              doctest::Approx(hom_density_bruteforce(k6, g, 1e9)).epsilon(1e-12));
    }

    // all-ones complete graph: C4 maps are proper 2-colorings of the cycle
    WeightedGraph ones(6, 1.0);
    double c4_maps = std::pow(5.0, 4) + 5.0; // (k-1)^n + (k-1) proper colorings
    CHECK(hom_density(preset("cycle", {4}), ones) ==
          doctest::Approx(c4_maps / std::pow(6.0, 4)).epsilon(1e-12));
    CHECK(hom_density_bruteforce(preset("cycle", {4}), ones) ==
          doctest::Approx(c4_maps / std::pow(6.0, 4)).epsilon(1e-12));
}

TEST_CASE("hom density handles isolated pattern vertices") {
    Graph with_isolated(4, {{0, 1}}); // one edge plus two isolated vertices
    WeightedGraph g = WeightedGraph::constant(5, 0.4);
    CHECK(hom_density(with_isolated, g) ==
          doctest::Approx(hom_density_bruteforce(with_isolated, g)).epsilon(1e-12));
}

TEST_CASE("hom density is monotone in every weight") {
    oracle::Rng rng(2025);
    Graph h = preset("cycle", {4});
    WeightedGraph g = random_weights(7, rng, 0.1, 0.8);
    double base = hom_density(h, g);
    for (int trial = 0; trial < 20; ++trial) {
        int i = rng.below(7), j = rng.below(7);
        if (i == j) continue;
        WeightedGraph bumped = g;
        bumped.set(i, j, std::min(1.0, g.at(i, j) + 0.1));
        CHECK(hom_density(h, bumped) >= base - 1e-15);
    }
}

TEST_CASE("gradient matches central differences") {
    oracle::Rng rng(1312);
    std::vector<Graph> patterns = {preset("clique", {3}), preset("cycle", {4}),
                                   preset("star", {2})};
    for (const auto& h : patterns) {
        WeightedGraph g = random_weights(8, rng, 0.1, 0.9);
        auto grad = hom_density_gradient(h, g);
        const double step = 1e-6;
        for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {2, 5}, {3, 7}}) {
            WeightedGraph up = g, down = g;
            up.set(u, v, g.at(u, v) + step);
            down.set(u, v, g.at(u, v) - step);
            double fd = (hom_density(h, up) - hom_density(h, down)) / (2 * step);
            double an = grad[static_cast<size_t>(u) * 8 + v];
            CHECK(an == doctest::Approx(fd).epsilon(1e-5));
        }
        // symmetric with a zero diagonal
        for (int i = 0; i < 8; ++i) {
            CHECK(grad[static_cast<size_t>(i) * 8 + i] == 0.0);
            for (int j = 0; j < 8; ++j)
                CHECK(grad[static_cast<size_t>(i) * 8 + j] ==
                      doctest::Approx(grad[static_cast<size_t>(j) * 8 + i]));
        }
    }
    // constant table and a vertex-transitive pattern: constant gradient
    WeightedGraph flat = WeightedGraph::constant(6, 0.3);
    auto grad = hom_density_gradient(preset("cycle", {4}), flat);
    double ref = grad[1];
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) CHECK(grad[static_cast<size_t>(i) * 6 + j] == doctest::Approx(ref));
}

TEST_CASE("block model density equals the dense evaluation") {
    for (long long s : {2, 5}) {
        const long long n = 12;
        BlockModel anti{{s, n - s}, {{1.0, 1.0}, {1.0, 0.25}}};
        BlockModel clique{{s, n - s}, {{1.0, 0.25}, {0.25, 0.25}}};
        WeightedGraph ga = WeightedGraph::constant(static_cast<int>(n), 0.25);
        WeightedGraph gc = ga;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (i < s || j < s) ga.set(i, j, 1.0);
                if (i < s && j < s) gc.set(i, j, 1.0);
            }
        for (const auto& h : {preset("clique", {3}), preset("cycle", {4}),
                              preset("complete_bipartite", {2, 3})}) {
            CHECK(block_hom_density(h, anti) ==
                  doctest::Approx(hom_density_bruteforce(h, ga)).epsilon(1e-12));
            CHECK(block_hom_density(h, clique) ==
                  doctest::Approx(hom_density_bruteforce(h, gc)).epsilon(1e-12));
        }
    }
}

TEST_CASE("clique candidate table at n=100 agrees with brute force") {
    Graph c4 = preset("cycle", {4});
    auto cand = clique_candidate(c4, 100, 0.1, 1.0);
    REQUIRE(cand.graph.has_value());
    double brute = hom_density_bruteforce(c4, *cand.graph, /*op_budget=*/1e9);
    CHECK(cand.density == doctest::Approx(brute).epsilon(1e-12));
    CHECK(hom_density(c4, *cand.graph) == doctest::Approx(brute).epsilon(1e-12));
}

TEST_CASE("step graphon entropies match the closed forms") {
    Graph c4 = preset("cycle", {4});
    double p = 1e-3, delta = 1.0;
    StepGraphon w1 = clique_graphon(c4, p, delta);
    double a = std::pow(delta, 0.25) * p;
    CHECK(w1.expected_entropy(p) ==
          doctest::Approx(a * a * std::log(1 / p)).epsilon(1e-10));

    StepGraphon w2 = anticlique_graphon(c4, p, delta);
    double theta = rate_constant(c4, delta).theta;
    double b = theta * p * p;
    CHECK(w2.expected_entropy(p) ==
          doctest::Approx((2 * b - b * b) * std::log(1 / p)).epsilon(1e-10));

    // block-sum density agrees with the subset-sum evaluation
    auto d = graphon_candidate_density(c4, CandidateKind::anticlique, p, delta);
    CHECK(w2.density(c4) == doctest::Approx(d.density).epsilon(1e-12));
}

TEST_CASE("graphon candidate ratios approach 1+delta") {
    double p = 1e-4, delta = 1.0;
    std::vector<Graph> anticlique_set = {preset("clique", {3}), preset("cycle", {4}),
                                         preset("complete_bipartite", {2, 3}),
                                         preset("binary_tree", {4})};
    for (const auto& h : anticlique_set) {
        auto r = graphon_candidate_density(h, CandidateKind::anticlique, p, delta);
        CHECK(std::abs(r.ratio - 2.0) <= 0.02);
    }
    std::vector<Graph> clique_set = {preset("clique", {3}), preset("cycle", {4}),
                                     preset("cycle", {6}), preset("clique", {4})};
    for (const auto& h : clique_set) {
        auto r = graphon_candidate_density(h, CandidateKind::clique, p, delta);
        CHECK(std::abs(r.ratio - 2.0) <= 0.02);
    }
    // the anticlique ratio reproduces P_{H*}(theta)
    Graph c4 = preset("cycle", {4});
    auto r = graphon_candidate_density(c4, CandidateKind::anticlique, p, delta);
    IntPolynomial core = independence_polynomial(max_degree_core(c4, 2));
    double theta = solve_threshold(core, delta);
    CHECK(std::abs(r.ratio - core.evaluate(theta)) <= 0.02);

    CHECK_THROWS_AS(graphon_candidate_density(preset("complete_bipartite", {2, 3}),
                                              CandidateKind::clique, p, delta),
                    std::invalid_argument);
    CHECK_THROWS_AS(graphon_candidate_density(preset("clique", {3}), CandidateKind::clique,
                                              0.9, 5000.0),
                    std::invalid_argument); // a > 1
}

TEST_CASE("planted candidates at desk scale") {
    Graph k3 = preset("clique", {3});
    auto c = clique_candidate(k3, 1000, 0.05, 1.0);
    CHECK(c.feasible);
    CHECK(c.s >= 50);
    CHECK(c.s <= 100);
    CHECK(std::abs(c.normalized - 0.5) <= 0.15 * 0.5);
    CHECK(c.density >= c.target);
    REQUIRE(c.graph.has_value());
    CHECK(hom_density(k3, *c.graph) == doctest::Approx(c.density).epsilon(1e-9));

    auto a = anticlique_candidate(k3, 10000, 0.05, 1.0, /*materialize_limit=*/0);
    CHECK(a.feasible);
    CHECK(!a.graph.has_value());
    CHECK(std::abs(a.normalized - 1.0 / 3) <= 0.15 / 3);

    auto k23 = anticlique_candidate(preset("complete_bipartite", {2, 3}), 100000, 0.1, 0.21, 0);
    CHECK(k23.feasible);
    CHECK(k23.s >= 10);
    CHECK(k23.s <= 20);

    auto c4 = clique_candidate(preset("cycle", {4}), 2000, 0.05, 1.0, 0);
    CHECK(c4.feasible);
    CHECK(std::abs(c4.normalized - 0.5) <= 0.15 * 0.5);

    CHECK_THROWS_AS(clique_candidate(preset("complete_bipartite", {2, 3}), 100, 0.1, 1.0),
                    std::invalid_argument);

    // viability warning when theta p^Delta n < 1
    auto tiny = anticlique_candidate(k3, 50, 0.05, 1.0, 0);
    CHECK(!tiny.warning.empty());
}

TEST_CASE("solver stays feasible and beats no candidate") {
    Graph k3 = preset("clique", {3});
    SolveConfig cfg;
    cfg.max_iterations = 60;
    cfg.penalty_rounds = 4;
    cfg.random_starts = 1;
    std::vector<TraceRow> trace;
    auto res = solve_variational(k3, 20, 0.25, 1.0, cfg, &trace);
    CHECK(res.feasible);
    double p_pow = std::pow(0.25, 3);
    CHECK(res.density >= 2 * p_pow - 1e-10 * p_pow);

    auto cand_c = clique_candidate(k3, 20, 0.25, 1.0);
    auto cand_a = anticlique_candidate(k3, 20, 0.25, 1.0);
    double best_cand = 1e300;
    if (cand_c.feasible) best_cand = std::min(best_cand, cand_c.entropy);
    if (cand_a.feasible) best_cand = std::min(best_cand, cand_a.entropy);
    CHECK(res.entropy <= best_cand + 1e-6);

    // iterate inside the box and symmetric
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            if (i == j) {
                CHECK(res.graph.at(i, j) == 0.0);
            } else {
                CHECK(res.graph.at(i, j) >= 0.25 - 1e-15);
                CHECK(res.graph.at(i, j) <= 1.0 + 1e-15);
                CHECK(res.graph.at(i, j) == res.graph.at(j, i));
            }
        }

    // penalized objective nonincreasing between accepted steps of a round
    for (size_t i = 1; i < trace.size(); ++i) {
        if (trace[i].mu == trace[i - 1].mu)
            CHECK(trace[i].objective <= trace[i - 1].objective + 1e-9);
    }

    // determinism
    auto res2 = solve_variational(k3, 20, 0.25, 1.0, cfg);
    CHECK(res2.entropy == res.entropy);
    CHECK(res2.graph.raw() == res.graph.raw());
}

TEST_CASE("solve config validation") {
    Graph k3 = preset("clique", {3});
    SolveConfig cfg;
    cfg.feasibility_tol = 10.0; // not < delta p^|E|
    CHECK_THROWS_AS(solve_variational(k3, 10, 0.2, 1.0, cfg), std::invalid_argument);
    SolveConfig bad;
    bad.penalty_rounds = 0;
    CHECK_THROWS_AS(solve_variational(k3, 10, 0.2, 1.0, bad), std::invalid_argument);
}

TEST_CASE("weighted graph io round trip") {
    oracle::Rng rng(808);
    WeightedGraph g = random_weights(6, rng);
    std::string text = write_weighted_graph(g, 0.2, "clique:3");
    std::istringstream in(text);
    double p = 0;
    std::string spec;
    WeightedGraph back = read_weighted_graph(in, &p, &spec);
    CHECK(p == 0.2);
    CHECK(spec == "clique:3");
    REQUIRE(back.size() == 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(back.at(i, j) == g.at(i, j));
}
