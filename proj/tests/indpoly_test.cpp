#include <doctest.h>

#include <cmath>

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

IntPolynomial from_ints(std::vector<unsigned long long> coeffs) {
    std::vector<BigUint> c;
    for (auto v : coeffs) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

bool matches_oracle(const Graph& g, int guard = 40) {
    auto counts = oracle::brute_independence_counts(g);
    auto poly = independence_polynomial(g, guard);
    if (poly.degree() + 1 != static_cast<int>(counts.size())) return false;
    for (size_t k = 0; k < counts.size(); ++k)
        if (!(poly.coeff(static_cast<int>(k)) ==
              BigUint(static_cast<unsigned long long>(counts[k]))))
            return false;
    return true;
}

} // namespace

TEST_CASE("bigint arithmetic") {
    BigUint a = BigUint::from_decimal("123456789012345678901234567890");
    BigUint b = BigUint::from_decimal("987654321098765432109876543210");
    CHECK((a + b).to_decimal() == "1111111110111111111011111111100");
    CHECK((b - a).to_decimal() == "864197532086419753208641975320");
    CHECK((a * b).to_decimal() ==
          "121932631137021795226185032733622923332237463801111263526900");
    CHECK(BigUint(0).to_decimal() == "0");
    CHECK(big_binomial(40, 20).to_decimal() == "137846528820");
    CHECK(BigUint(12345).to_double() == doctest::Approx(12345.0));
    CHECK(a < b);
}

TEST_CASE("independence polynomials of named graphs") {
    CHECK(independence_polynomial(preset("clique", {3})) == from_ints({1, 3}));
    CHECK(independence_polynomial(preset("cycle", {4})) == from_ints({1, 4, 2}));
    CHECK(independence_polynomial(preset("cycle", {5})) == from_ints({1, 5, 5}));
    CHECK(independence_polynomial(preset("complete_bipartite", {3, 3})) ==
          from_ints({1, 6, 6, 2}));
    CHECK(independence_polynomial(preset("petersen")) == from_ints({1, 10, 30, 30, 5}));
    CHECK(matches_oracle(preset("petersen")));
}

TEST_CASE("brute-force oracle equality on the corpus") {
    for (const auto& entry : oracle::corpus()) {
        if (entry.graph.vertex_count() > 16) continue;
        CAPTURE(entry.name);
        CHECK(matches_oracle(entry.graph));
    }
}

TEST_CASE("deletion recursion identity on small graphs") {
    oracle::Rng rng(4242);
    std::vector<Graph> cases;
    for (const auto& entry : oracle::corpus())
        if (entry.graph.vertex_count() <= 9) cases.push_back(entry.graph);
    for (int t = 0; t < 25; ++t) cases.push_back(oracle::random_graph(3 + rng.below(7), 0.4, rng));

    for (const auto& g : cases) {
        IntPolynomial whole = independence_polynomial(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> rest, rest_closed;
            for (int u = 0; u < g.vertex_count(); ++u) {
                if (u == v) continue;
                rest.push_back(u);
                if (!g.has_edge(u, v)) rest_closed.push_back(u);
            }
            IntPolynomial rhs = independence_polynomial(induced_subgraph(g, rest)) +
                                independence_polynomial(induced_subgraph(g, rest_closed)).times_x();
            CHECK(whole == rhs);
        }
    }
}

TEST_CASE("multiplicativity over disjoint unions") {
    oracle::Rng rng(555);
    for (int t = 0; t < 20; ++t) {
        Graph a = oracle::random_graph(2 + rng.below(5), 0.5, rng);
        Graph b = oracle::random_graph(2 + rng.below(5), 0.5, rng);
        CHECK(independence_polynomial(disjoint_union(a, b)) ==
              independence_polynomial(a) * independence_polynomial(b));
    }
}

TEST_CASE("cycle recursion, closed form, and x^2 coefficient") {
    // P_{C_k} = P_{C_{k-1}} + x P_{C_{k-2}}, with the degenerate starts 2x+1, 3x+1
    std::vector<IntPolynomial> pc(13);
    pc[2] = from_ints({1, 2});
    pc[3] = independence_polynomial(preset("cycle", {3}));
    CHECK(pc[3] == from_ints({1, 3}));
    for (int k = 4; k <= 12; ++k) {
        pc[k] = independence_polynomial(preset("cycle", {k}));
        CHECK(pc[k] == pc[k - 1] + pc[k - 2].times_x());
        // [x^2] P_{C_k} = k(k-3)/2
        CHECK(pc[k].coeff(2) == BigUint(static_cast<unsigned long long>(k * (k - 3) / 2)));
    }

    // closed form 2^{1-k} sum_j C(k,2j) (1+4x)^j at x in {0,1,2}
    for (int k = 4; k <= 12; ++k) {
        for (long long x : {0, 1, 2}) {
            long long sum = 0;
            long long pow_base = 1; // (1+4x)^j
            for (int j = 0; 2 * j <= k; ++j) {
                sum += static_cast<long long>(big_binomial(k, 2 * j).to_u64()) * pow_base;
                pow_base *= (1 + 4 * x);
            }
            long long denom = 1ll << (k - 1);
            CHECK(sum % denom == 0);
            auto exact = pc[k].evaluate_rational(BigUint(static_cast<unsigned long long>(x)),
                                                 BigUint(1));
            CHECK(exact.first == exact.second * BigUint(static_cast<unsigned long long>(sum / denom)));
        }
    }
}

TEST_CASE("binary tree recursions") {
    // P_{T_h} = P_{T_{h-1}}^2 + x P_{T_{h-2}}^4 and P_{T_h*} = P_{T_{h-2}}^2
    std::vector<IntPolynomial> pt(7);
    pt[0] = IntPolynomial::one();
    pt[1] = from_ints({1, 1});
    for (int h = 2; h <= 6; ++h) pt[h] = independence_polynomial(preset("binary_tree", {h}), 64);
    CHECK(pt[2] == from_ints({1, 3, 1}));
    for (int h = 3; h <= 6; ++h) {
        IntPolynomial rhs = pt[h - 1] * pt[h - 1] +
                            (pt[h - 2] * pt[h - 2] * pt[h - 2] * pt[h - 2]).times_x();
        CHECK(pt[h] == rhs);
        IntPolynomial core = independence_polynomial(
            max_degree_core(preset("binary_tree", {h}), 3), 64);
        CHECK(core == pt[h - 2] * pt[h - 2]);
    }
    // b-ary variant: P_{T_h} = P_{T_{h-1}}^b + x P_{T_{h-2}}^{b^2}, core = P_{T_{h-2}}^b
    for (long long b : {3}) {
        std::vector<IntPolynomial> q(5);
        q[1] = from_ints({1, 1});
        for (int h = 2; h <= 4; ++h) q[h] = independence_polynomial(preset("b_ary_tree", {b, h}), 64);
        IntPolynomial rhs = q[3] * q[3] * q[3];
        IntPolynomial x_term = IntPolynomial::one();
        for (int i = 0; i < b * b; ++i) x_term = x_term * q[2];
        CHECK(q[4] == rhs + x_term.times_x());
        IntPolynomial core = independence_polynomial(
            max_degree_core(preset("b_ary_tree", {b, 4}), static_cast<int>(b) + 1), 64);
        CHECK(core == q[2] * q[2] * q[2]);
    }
}

TEST_CASE("T4 core polynomial matches the quoted expansion") {
    IntPolynomial core = independence_polynomial(max_degree_core(preset("binary_tree", {4}), 3));
    CHECK(core == from_ints({1, 6, 11, 6, 1}));
}

TEST_CASE("evaluate") {
    IntPolynomial pc4 = independence_polynomial(preset("cycle", {4}));
    CHECK(pc4.evaluate(0) == doctest::Approx(1.0));
    CHECK(pc4.evaluate(2) == doctest::Approx(17.0));
    CHECK_THROWS_AS(pc4.evaluate(-0.5), std::invalid_argument);

    IntPolynomial pk3 = independence_polynomial(preset("clique", {3}));
    auto exact = pk3.evaluate_rational(BigUint(1), BigUint(3)); // P(1/3) = 2
    CHECK(exact.first == exact.second * BigUint(2));
}

TEST_CASE("solve_threshold") {
    IntPolynomial linear = independence_polynomial(preset("clique", {3}));
    CHECK(solve_threshold(linear, 1.0) == doctest::Approx(1.0 / 3).epsilon(1e-12));

    IntPolynomial pc4 = independence_polynomial(preset("cycle", {4}));
    CHECK(solve_threshold(pc4, 16.0) == doctest::Approx(2.0).epsilon(1e-12));
    for (double delta : {0.25, 1.0, 7.5, 120.0}) {
        double theta = solve_threshold(pc4, delta);
        CHECK(theta == doctest::Approx(-1 + std::sqrt(1 + delta / 2)).epsilon(1e-11));
        CHECK(std::abs(pc4.evaluate(theta) - (1 + delta)) <= 1e-12 * (1 + delta));
    }

    IntPolynomial t4core = independence_polynomial(max_degree_core(preset("binary_tree", {4}), 3));
    for (double delta : {0.1, 1.0, 10.0, 100.0}) {
        double expected = -1.5 + 0.5 * std::sqrt(5 + 4 * std::sqrt(1 + delta));
        CHECK(solve_threshold(t4core, delta) == doctest::Approx(expected).epsilon(1e-11));
    }

    // monotone in delta
    double prev = 0.0;
    for (double delta : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        double theta = solve_threshold(pc4, delta);
        CHECK(theta > prev);
        prev = theta;
    }

    CHECK_THROWS_AS(solve_threshold(IntPolynomial::one(), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_threshold(pc4, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_threshold(pc4, -1.0), std::invalid_argument);
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(independence_polynomial(preset("binary_tree", {6})), size_guard_error);
    CHECK_NOTHROW(independence_polynomial(preset("binary_tree", {6}), 64));
}

TEST_CASE("polynomial json serialization") {
    CHECK(independence_polynomial(preset("cycle", {4})).to_json() == "[\"1\",\"4\",\"2\"]");
}
