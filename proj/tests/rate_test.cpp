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

// closed form of the unique positive root of (1+3z+c)(1+z) = 1+delta at c = z2^3
double lambda_of(double z2, double delta) {
    double c = z2 * z2 * z2;
    return (-4.0 - c + std::sqrt(12.0 * delta + c * c - 4.0 * c + 16.0)) / 6.0;
}

} // namespace

TEST_CASE("triangle rate constant") {
    auto r = rate_constant(preset("clique", {3}), 1.0);
    CHECK(r.theta == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(*r.clique_value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.constant == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(r.regime == Regime::anticlique);

    auto tie = rate_constant(preset("clique", {3}), 27.0 / 8);
    CHECK(tie.constant == doctest::Approx(9.0 / 8).epsilon(1e-10));
    CHECK(tie.regime == Regime::tie);
}

TEST_CASE("four-cycle constant takes the smaller branch") {
    // below the transition at 16 the anti-clique root is the minimum
    auto r = rate_constant(preset("cycle", {4}), 4.0);
    CHECK(r.theta == doctest::Approx(std::sqrt(3.0) - 1).epsilon(1e-12));
    CHECK(*r.clique_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.constant == doctest::Approx(std::sqrt(3.0) - 1).epsilon(1e-12));
    CHECK(r.regime == Regime::anticlique);

    auto above = rate_constant(preset("cycle", {4}), 100.0);
    CHECK(above.constant == doctest::Approx(5.0).epsilon(1e-12)); // sqrt(100)/2
    CHECK(above.regime == Regime::clique);
}

TEST_CASE("irregular constants") {
    auto k23 = rate_constant(preset("complete_bipartite", {2, 3}), 0.21);
    CHECK(k23.constant == doctest::Approx(0.1).epsilon(1e-10));
    CHECK(k23.regime == Regime::anticlique);
    CHECK(!k23.clique_value.has_value());

    auto t4 = rate_constant(preset("binary_tree", {4}), 1.0);
    CHECK(t4.constant ==
          doctest::Approx(-1.5 + 0.5 * std::sqrt(5 + 4 * std::sqrt(2.0))).epsilon(1e-11));
}

TEST_CASE("inputs rejected") {
    CHECK_THROWS_AS(rate_constant(preset("path", {2}), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(rate_constant(preset("clique", {3}), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rate_constant(preset("clique", {3}), -2.0), std::invalid_argument);
    CHECK_THROWS_AS(transition_delta0(preset("complete_bipartite", {2, 3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(transition_delta0(disjoint_union(preset("clique", {3}), preset("clique", {3}))),
                    std::invalid_argument);
}

TEST_CASE("transition points") {
    CHECK(transition_delta0(preset("clique", {3})) == doctest::Approx(27.0 / 8).epsilon(1e-10));
    CHECK(transition_delta0(preset("cycle", {4})) == doctest::Approx(16.0).epsilon(1e-9));
    CHECK(transition_delta0(preset("cycle", {6})) == doctest::Approx(64.0).epsilon(1e-9));
}

TEST_CASE("regime flips exactly once at the transition point") {
    for (auto ck : {4, 6}) {
        Graph h = preset("cycle", {ck});
        double d0 = transition_delta0(h);
        CHECK(rate_constant(h, d0 * (1 - 1e-6)).regime == Regime::anticlique);
        CHECK(rate_constant(h, d0 * (1 + 1e-6)).regime == Regime::clique);
        CHECK(rate_constant(h, d0).regime == Regime::tie);
    }
}

TEST_CASE("k33 transition against the closed forms") {
    // bisection on the closed forms (1+delta/2)^{1/3}-1 = delta^{1/3}/2
    double lo = 1.0, hi = 100.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double theta = std::cbrt(1 + mid / 2) - 1;
        double clique = 0.5 * std::cbrt(mid);
        (theta <= clique ? lo : hi) = mid;
    }
    CHECK(transition_delta0(preset("complete_bipartite", {3, 3})) ==
          doctest::Approx(0.5 * (lo + hi)).epsilon(1e-8));
}

TEST_CASE("small-delta expansion of theta") {
    for (int k = 4; k <= 12; ++k) {
        Graph ck = preset("cycle", {k});
        double theta = rate_constant(ck, 1e-6).theta;
        CHECK(std::abs(theta - 1e-6 / k) <= 1e-3 * 1e-6); // slope delta/|V|
        double d = 1e-3;
        double second = rate_constant(ck, d).theta;
        double expansion = d / k + (3.0 - k) / (2.0 * k * k) * d * d;
        CHECK(std::abs(second - expansion) <= 1e-8);
    }
    // K3 is exactly linear
    CHECK(rate_constant(preset("clique", {3}), 1e-6).theta == doctest::Approx(1e-6 / 3));
}

TEST_CASE("rate curve table") {
    Graph c5 = preset("cycle", {5});
    auto rows = rate_curve(c5, {1.0, 2.0, 3.0});
    for (const auto& r : rows) {
        double expected = -0.5 + 0.5 * std::sqrt(1 + 4 * r.delta / 5);
        CHECK(r.theta == doctest::Approx(expected).epsilon(1e-11));
    }
    // constant column nondecreasing
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].constant >= rows[i - 1].constant);

    // C4 grid crossing 16: regime switches anticlique -> clique exactly once
    auto grid = log_spaced_grid(0.5, 400.0, 40);
    auto c4rows = rate_curve(preset("cycle", {4}), grid);
    int switches = 0;
    bool seen_clique = false;
    for (const auto& r : c4rows) {
        if (r.regime == Regime::clique && !seen_clique) {
            seen_clique = true;
            ++switches;
        }
        if (seen_clique) CHECK(r.regime != Regime::anticlique);
        // anticlique rows satisfy P_H(c) = 1+delta (figure caption property)
        if (r.regime == Regime::anticlique) {
            IntPolynomial p = independence_polynomial(preset("cycle", {4}));
            CHECK(p.evaluate(r.constant) == doctest::Approx(1 + r.delta).epsilon(1e-9));
        }
    }
    CHECK(switches == 1);

    // csv shape
    std::string csv = rate_curve_csv(c4rows);
    std::istringstream ss(csv);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "delta,theta,clique_value,constant,regime");
    int lines = 0;
    std::string line;
    double prev_delta = 0;
    while (std::getline(ss, line)) {
        ++lines;
        double d = std::stod(line.substr(0, line.find(',')));
        CHECK(d > prev_delta);
        prev_delta = d;
    }
    CHECK(lines == 40);

    CHECK_THROWS_AS(rate_curve(c5, {2.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(rate_curve(c5, {-1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("mixture optimizer reproduces connected answers") {
    // a single-component graph fed through the product program must match the
    // closed connected treatment
    for (double delta : {0.4, 3.0, 50.0}) {
        Graph k4 = preset("clique", {4});
        auto direct = rate_constant(k4, delta);
        double via_root = anticlique_theta(k4, delta);
        CHECK(via_root == doctest::Approx(direct.theta).epsilon(1e-12));

        // an isolated vertex adds a component whose core is empty, so the
        // disconnected program runs but the constraint is unchanged
        Graph padded = disjoint_union(k4, Graph(1, {}));
        auto mixture = rate_constant(padded, delta);
        CHECK(mixture.constant == doctest::Approx(direct.constant).epsilon(1e-9));
    }
    for (double delta : {0.1, 2.0, 30.0}) {
        Graph k23 = preset("complete_bipartite", {2, 3});
        auto direct = rate_constant(k23, delta);
        auto mixture = rate_constant(disjoint_union(k23, Graph(2, {})), delta);
        CHECK(mixture.constant == doctest::Approx(direct.constant).epsilon(1e-9));
    }
}

TEST_CASE("disconnected mixture against the closed-form reduction") {
    Graph h = disjoint_union(preset("clique", {3}), preset("star", {2}));
    for (double delta : {0.5, 5.0}) {
        auto r = rate_constant(h, delta);
        double best = 1e300;
        const int grid = 20000;
        double z2_max = std::cbrt(delta);
        for (int i = 0; i <= grid; ++i) {
            double z2 = z2_max * i / grid;
            best = std::min(best, lambda_of(z2, delta) + 0.5 * z2 * z2);
        }
        CHECK(r.constant == doctest::Approx(best).epsilon(1e-7));
        CHECK(r.constant <= best + 1e-12);
    }
}

TEST_CASE("disconnected metadata") {
    Graph h = disjoint_union(preset("clique", {3}), preset("path", {2}));
    auto r = rate_constant(h, 2.0);
    CHECK(!r.warnings.empty()); // path component has smaller max degree
    CHECK(r.theta_prime.has_value());

    Graph star_pair = disjoint_union(preset("star", {2}), preset("star", {3}));
    auto r2 = rate_constant(star_pair, 1.0);
    // no regular component at the global degree: pure anti-clique optimum
    CHECK(r2.regime == Regime::anticlique);
    CHECK(*r2.theta_prime == doctest::Approx(0.0));
}

TEST_CASE("rate result json") {
    auto r = rate_constant(preset("cycle", {4}), 16.0);
    std::string js = r.to_json();
    CHECK(js.find("\"regime\":\"tie\"") != std::string::npos);
    CHECK(js.find("\"delta\":16") != std::string::npos);
}
