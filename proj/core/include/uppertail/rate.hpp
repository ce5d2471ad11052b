#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uppertail/graph.hpp"
#include "uppertail/indpoly.hpp"

namespace uppertail {

enum class Regime { anticlique, clique, tie, mixture };
const char* regime_name(Regime r);

// The leading-order upper-tail constant for one (H, delta), with the regime
// that attains it. clique_value is present for connected regular H (and, for
// disconnected H, holds the pure-clique branch value when some component is
// regular at the global maximum degree). theta_prime is the attained clique
// coordinate of the disconnected mixture optimum.
struct RateResult {
    double delta = 0.0;
    double theta = 0.0;
    std::optional<double> clique_value;
    double constant = 0.0;
    Regime regime = Regime::anticlique;
    std::optional<double> theta_prime;
    std::optional<double> delta0;
    std::vector<std::string> warnings;

    std::string to_json() const;
};

// Relative tolerance for declaring the two branches tied.
inline constexpr double kTieRelTol = 1e-9;

// c_H(delta). Connected H: theta from the max-degree core polynomial, and for
// regular H the minimum with delta^{2/|V|}/2. Disconnected H: minimizes
// theta + theta'/2 subject to
//   prod_i ( P_{H_i*}(theta) + 1{H_i regular at global Delta} * theta'^{|E_i|/Delta} ) = 1+delta,
// where every core uses the global maximum degree (components with no vertex
// of global degree Delta contribute the constant factor 1).
RateResult rate_constant(const Graph& h, double delta);

// The positive root of the pure anti-clique constraint
// prod_i P_{H_i*}(theta) = 1 + delta (global-Delta cores).
double anticlique_theta(const Graph& h, double delta);

// For connected regular H with Delta >= 2 and |V| >= 3: the unique delta0
// with theta(H, delta0) = delta0^{2/|V|}/2, by bisection on the decreasing
// function [P(delta^{2/k}/2) - 1]/delta; relative tolerance 1e-10.
double transition_delta0(const Graph& h);

std::vector<RateResult> rate_curve(const Graph& h, const std::vector<double>& delta_grid);
std::string rate_curve_csv(const std::vector<RateResult>& rows);
std::string rate_curve_json(const std::vector<RateResult>& rows);

// steps values, multiplicatively spaced from lo to hi inclusive.
std::vector<double> log_spaced_grid(double lo, double hi, int steps);

} // namespace uppertail
