#include "uppertail/rate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "format.hpp"

namespace uppertail {

using detail::fmt12;
using detail::json_str;

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::anticlique: return "anticlique";
        case Regime::clique: return "clique";
        case Regime::tie: return "tie";
        case Regime::mixture: return "mixture";
    }
    return "?";
}

std::string RateResult::to_json() const {
    std::string out = "{";
    out += "\"delta\":" + fmt12(delta);
    out += ",\"theta\":" + fmt12(theta);
    out += ",\"clique_value\":" + (clique_value ? fmt12(*clique_value) : "null");
    out += ",\"constant\":" + fmt12(constant);
    out += ",\"regime\":" + json_str(regime_name(regime));
    out += ",\"theta_prime\":" + (theta_prime ? fmt12(*theta_prime) : "null");
    out += ",\"delta0\":" + (delta0 ? fmt12(*delta0) : "null");
    out += ",\"warnings\":[";
    for (size_t i = 0; i < warnings.size(); ++i) {
        if (i) out += ",";
        out += json_str(warnings[i]);
    }
    out += "]}";
    return out;
}

namespace {

void check_inputs(const Graph& h, double delta) {
    if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
    int d = max_degree(h);
    if (d <= 1)
        throw std::invalid_argument(
            "maximum degree of H must be at least 2 (Delta <= 1 is the binomial "
            "edge-count regime, which has no independence-polynomial constant)");
}

// One connected component in the product constraint
//   prod_i ( P_i(theta) + 1{regular_i} theta'^{e_i} ) = 1 + delta.
struct MixtureComponent {
    IntPolynomial poly; // independence polynomial of the global-Delta core
    bool regular = false;
    double exponent = 0.0; // |E(H_i)| / Delta
};

struct MixtureProblem {
    std::vector<MixtureComponent> comps;
    double target = 0.0;

    double eval(double theta, double theta_prime) const {
        double prod = 1.0;
        for (const auto& c : comps) {
            double f = c.poly.evaluate(theta);
            if (c.regular && theta_prime > 0) f += std::pow(theta_prime, c.exponent);
            prod *= f;
        }
        return prod;
    }

    bool any_regular() const {
        for (const auto& c : comps)
            if (c.regular) return true;
        return false;
    }

    // The theta >= 0 on the constraint for this theta'; negative if none.
    double theta_given(double theta_prime) const {
        if (eval(0.0, theta_prime) >= target) {
            // already at or past the target with theta = 0
            return eval(0.0, theta_prime) <= target * (1 + 1e-13) ? 0.0 : -1.0;
        }
        double hi = 1.0;
        while (eval(hi, theta_prime) < target) {
            hi *= 2.0;
            if (!std::isfinite(hi)) throw std::runtime_error("mixture: bracketing failed");
        }
        double lo = 0.0;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
            double mid = 0.5 * (lo + hi);
            (eval(mid, theta_prime) < target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

    double theta_prime_max() const {
        if (!any_regular()) return 0.0;
        double hi = 1.0;
        while (eval(0.0, hi) < target) {
            hi *= 2.0;
            if (!std::isfinite(hi)) throw std::runtime_error("mixture: bracketing failed");
        }
        double lo = 0.0;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
            double mid = 0.5 * (lo + hi);
            (eval(0.0, mid) < target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
};

MixtureProblem build_mixture(double delta, const StructuralPredicates& preds, int global_delta,
                             std::vector<std::string>* warnings) {
    MixtureProblem prob;
    prob.target = 1.0 + delta;
    for (const auto& comp : preds.components) {
        const Graph& cg = comp.graph;
        int local_delta = max_degree(cg);
        if (local_delta < global_delta && warnings)
            warnings->push_back("component on " + std::to_string(cg.vertex_count()) +
                                " vertices has maximum degree " + std::to_string(local_delta) +
                                " < " + std::to_string(global_delta) +
                                "; its core uses the global maximum degree");
        MixtureComponent mc;
        bool regular_at_global = (local_delta == global_delta);
        for (int v = 0; v < cg.vertex_count() && regular_at_global; ++v)
            if (cg.degree(v) != global_delta) regular_at_global = false;
        mc.regular = regular_at_global;
        mc.exponent = static_cast<double>(cg.edge_count()) / global_delta;
        mc.poly = independence_polynomial(max_degree_core(cg, global_delta));
        prob.comps.push_back(std::move(mc));
    }
    return prob;
}

struct MixtureOptimum {
    double theta = 0.0;
    double theta_prime = 0.0;
    double value = 0.0;
    double theta_prime_max = 0.0;
};

MixtureOptimum optimize_mixture(const MixtureProblem& prob) {
    MixtureOptimum best;
    best.theta = prob.theta_given(0.0);
    best.theta_prime = 0.0;
    best.value = best.theta;
    best.theta_prime_max = prob.theta_prime_max();
    if (best.theta_prime_max <= 0) return best;

    auto objective = [&](double tp) {
        double th = prob.theta_given(tp);
        if (th < 0) return std::numeric_limits<double>::infinity();
        return th + 0.5 * tp;
    };

    const double tmax = best.theta_prime_max;
    auto consider = [&](double tp) {
        double th = prob.theta_given(tp);
        if (th < 0) return;
        double v = th + 0.5 * tp;
        if (v < best.value) best = {th, tp, v, tmax};
    };

    consider(tmax);

    // coarse scan, then golden-section refinement around every local minimum
    const int grid = 600;
    std::vector<double> vals(grid + 1);
    for (int i = 0; i <= grid; ++i) vals[i] = objective(tmax * i / grid);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 0; i <= grid; ++i) {
        bool is_min = (i == 0 || vals[i] <= vals[i - 1]) && (i == grid || vals[i] <= vals[i + 1]);
        if (!is_min) continue;
        double lo = tmax * std::max(0, i - 1) / grid;
        double hi = tmax * std::min(grid, i + 1) / grid;
        double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
        double fa = objective(a), fb = objective(b);
        while (hi - lo > 1e-13 * (1.0 + tmax)) {
            if (fa < fb) {
                hi = b;
                b = a;
                fb = fa;
                a = hi - gr * (hi - lo);
                fa = objective(a);
            } else {
                lo = a;
                a = b;
                fa = fb;
                b = lo + gr * (hi - lo);
                fb = objective(b);
            }
        }
        consider(0.5 * (lo + hi));
    }
    return best;
}

} // namespace

double anticlique_theta(const Graph& h, double delta) {
    check_inputs(h, delta);
    auto preds = structural_predicates(h);
    auto prob = build_mixture(delta, preds, max_degree(h), nullptr);
    return prob.theta_given(0.0);
}

RateResult rate_constant(const Graph& h, double delta) {
    check_inputs(h, delta);
    const int global_delta = max_degree(h);
    auto preds = structural_predicates(h);

    RateResult out;
    out.delta = delta;

    if (preds.is_connected) {
        IntPolynomial core_poly = independence_polynomial(max_degree_core(h, global_delta));
        out.theta = solve_threshold(core_poly, delta);
        if (preds.is_regular) {
            double cv = 0.5 * std::pow(delta, 2.0 / h.vertex_count());
            out.clique_value = cv;
            out.constant = std::min(out.theta, cv);
            if (std::abs(out.theta - cv) <= kTieRelTol * out.constant)
                out.regime = Regime::tie;
            else
                out.regime = out.theta < cv ? Regime::anticlique : Regime::clique;
            out.delta0 = transition_delta0(h);
        } else {
            out.constant = out.theta;
            out.regime = Regime::anticlique;
        }
        return out;
    }

    auto prob = build_mixture(delta, preds, global_delta, &out.warnings);
    auto opt = optimize_mixture(prob);
    out.theta = opt.theta;
    out.theta_prime = opt.theta_prime;
    out.constant = opt.value;
    if (opt.theta_prime_max > 0) out.clique_value = 0.5 * opt.theta_prime_max;
    const double eps = 1e-9 * (1.0 + opt.value);
    if (opt.theta_prime <= eps)
        out.regime = Regime::anticlique;
    else if (opt.theta <= eps)
        out.regime = Regime::clique;
    else
        out.regime = Regime::mixture;
    return out;
}

double transition_delta0(const Graph& h) {
    auto preds = structural_predicates(h);
    if (!preds.is_connected || !preds.is_regular)
        throw std::invalid_argument("transition_delta0: H must be connected and regular");
    if (max_degree(h) < 2 || h.vertex_count() < 3)
        throw std::invalid_argument("transition_delta0: need Delta >= 2 and at least 3 vertices");

    IntPolynomial poly = independence_polynomial(h);
    const double k = h.vertex_count();
    // decreasing in delta; delta0 is its 1-crossing
    auto f = [&](double delta) {
        return (poly.evaluate(0.5 * std::pow(delta, 2.0 / k)) - 1.0) / delta;
    };

    double lo = 1.0, hi = 1.0;
    if (f(1.0) > 1.0) {
        while (f(hi) > 1.0) {
            hi *= 2.0;
            if (!std::isfinite(hi)) throw std::runtime_error("transition_delta0: no crossing");
        }
    } else {
        while (f(lo) <= 1.0) {
            lo /= 2.0;
            if (lo < 1e-300) throw std::runtime_error("transition_delta0: no crossing");
        }
    }
    for (int it = 0; it < 500 && hi - lo > 1e-10 * lo; ++it) {
        double mid = 0.5 * (lo + hi);
        (f(mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<RateResult> rate_curve(const Graph& h, const std::vector<double>& delta_grid) {
    if (delta_grid.empty()) throw std::invalid_argument("rate_curve: empty grid");
    for (size_t i = 0; i < delta_grid.size(); ++i) {
        if (!(delta_grid[i] > 0)) throw std::invalid_argument("rate_curve: grid must be positive");
        if (i > 0 && delta_grid[i] <= delta_grid[i - 1])
            throw std::invalid_argument("rate_curve: grid must be strictly increasing");
    }
    std::vector<RateResult> rows;
    rows.reserve(delta_grid.size());
    for (double d : delta_grid) rows.push_back(rate_constant(h, d));
    return rows;
}

std::string rate_curve_csv(const std::vector<RateResult>& rows) {
    std::string out = "delta,theta,clique_value,constant,regime\n";
    for (const auto& r : rows) {
        out += fmt12(r.delta) + "," + fmt12(r.theta) + ",";
        if (r.clique_value) out += fmt12(*r.clique_value);
        out += "," + fmt12(r.constant) + "," + regime_name(r.regime) + "\n";
    }
    return out;
}

std::string rate_curve_json(const std::vector<RateResult>& rows) {
    std::string out = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += rows[i].to_json();
    }
    return out + "]";
}

std::vector<double> log_spaced_grid(double lo, double hi, int steps) {
    if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("log_spaced_grid: need 0 < lo < hi");
    if (steps < 2) throw std::invalid_argument("log_spaced_grid: need at least 2 steps");
    std::vector<double> grid(steps);
    const double ratio = std::log(hi / lo);
    for (int i = 0; i < steps; ++i) grid[i] = lo * std::exp(ratio * i / (steps - 1));
    grid.back() = hi;
    return grid;
}

} // namespace uppertail
