// uppertail: leading-order upper-tail constants for subgraph counts in sparse
// random graphs, plus the exact combinatorics and solvers behind them.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uppertail/uppertail.hpp"

namespace ut = uppertail;

namespace {

struct GraphOptions {
    std::string preset;
    std::string edges_file;

    ut::Graph load() const {
        if (preset.empty() == edges_file.empty())
            throw ut::parse_error("exactly one graph source required: --graph or --edges");
        if (!preset.empty()) return ut::parse_graph_argument(preset);
        return ut::read_edge_list_file(edges_file);
    }

    std::string label() const { return !preset.empty() ? preset : ("file:" + edges_file); }
};

void add_graph_options(CLI::App* cmd, GraphOptions& g) {
    cmd->add_option("--graph", g.preset, "preset graph, e.g. cycle:5 or clique:3+star:2");
    cmd->add_option("--edges", g.edges_file, "edge-list file (one 'u v' per line)");
}

std::optional<int> size_guard_override() {
    const char* env = std::getenv("UPPERTAIL_SIZE_GUARD");
    if (!env || !*env) return std::nullopt;
    try {
        return std::stoi(env);
    } catch (...) {
        throw ut::parse_error("UPPERTAIL_SIZE_GUARD is not an integer");
    }
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << payload;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void print_rate_text(const ut::RateResult& r) {
    std::cout << "delta: " << fmt(r.delta) << "\n";
    std::cout << "theta: " << fmt(r.theta) << "\n";
    if (r.clique_value) std::cout << "clique_value: " << fmt(*r.clique_value) << "\n";
    std::cout << "constant: " << fmt(r.constant) << "\n";
    std::cout << "regime: " << ut::regime_name(r.regime) << "\n";
    if (r.theta_prime) std::cout << "theta_prime: " << fmt(*r.theta_prime) << "\n";
    if (r.delta0) std::cout << "delta0: " << fmt(*r.delta0) << "\n";
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"upper-tail rate constants for subgraph counts in sparse random graphs"};
    app.require_subcommand(1);

    GraphOptions graph_opt;
    bool as_json = false;
    std::string out_path;
    double delta = 0.0, p = 0.0;
    double delta_min = 0.0, delta_max = 0.0;
    int delta_steps = 25;
    long long n = 0, samples = 100000;
    unsigned long long seed = 1;
    double tol = -1.0;
    int max_iters = 250;
    std::string trace_path, out_graph_path;

    auto* rate = app.add_subcommand("rate", "leading-order constant c_H(delta)");
    add_graph_options(rate, graph_opt);
    rate->add_option("--delta", delta, "excess delta > 0")->required();
    rate->add_flag("--json", as_json);
    rate->add_option("--out", out_path);

    auto* curve = app.add_subcommand("curve", "c_H over a log-spaced delta grid (CSV)");
    add_graph_options(curve, graph_opt);
    curve->add_option("--delta-min", delta_min)->required();
    curve->add_option("--delta-max", delta_max)->required();
    curve->add_option("--delta-steps", delta_steps);
    curve->add_flag("--json", as_json);
    curve->add_option("--out", out_path, "write to file instead of stdout");

    auto* delta0 = app.add_subcommand("delta0", "clique/anti-clique transition point");
    add_graph_options(delta0, graph_opt);
    delta0->add_flag("--json", as_json);
    delta0->add_option("--out", out_path);

    auto* indpoly = app.add_subcommand("indpoly", "independence polynomial of H and of its core");
    add_graph_options(indpoly, graph_opt);
    indpoly->add_flag("--json", as_json);
    indpoly->add_option("--out", out_path);

    auto* family = app.add_subcommand("family", "contributing subgraph classes");
    add_graph_options(family, graph_opt);
    family->add_flag("--json", as_json);
    family->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify-identity",
                                      "check the family expansion against the core polynomial");
    add_graph_options(verify, graph_opt);
    verify->add_flag("--json", as_json);
    verify->add_option("--out", out_path);

    auto* candidates = app.add_subcommand("candidates", "planted clique/anti-clique constructions");
    add_graph_options(candidates, graph_opt);
    candidates->add_option("--n", n)->required();
    candidates->add_option("--p", p)->required();
    candidates->add_option("--delta", delta)->required();
    candidates->add_flag("--json", as_json);
    candidates->add_option("--out", out_path);

    auto* varsolve = app.add_subcommand("varsolve", "penalized projected-gradient solver");
    add_graph_options(varsolve, graph_opt);
    varsolve->add_option("--n", n)->required();
    varsolve->add_option("--p", p)->required();
    varsolve->add_option("--delta", delta)->required();
    varsolve->add_option("--seed", seed);
    varsolve->add_option("--tol", tol, "feasibility tolerance (default 1e-10 p^|E|)");
    varsolve->add_option("--max-iters", max_iters);
    varsolve->add_option("--trace", trace_path, "CSV trace of (iteration, objective, residual)");
    varsolve->add_option("--out-graph", out_graph_path, "write the optimized weight table");
    varsolve->add_flag("--json", as_json);
    varsolve->add_option("--out", out_path);

    auto* mc = app.add_subcommand("montecarlo", "sample G(n,p), count copies, estimate the tail");
    add_graph_options(mc, graph_opt);
    mc->add_option("--n", n)->required();
    mc->add_option("--p", p)->required();
    mc->add_option("--delta", delta)->required();
    mc->add_option("--samples", samples);
    mc->add_option("--seed", seed);
    mc->add_flag("--json", as_json);
    mc->add_option("--out", out_path);

    auto* info = app.add_subcommand("info", "structural summary of the graph");
    add_graph_options(info, graph_opt);
    info->add_flag("--json", as_json);
    info->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    auto guard = size_guard_override();
    const int indpoly_guard = guard.value_or(40);
    const int family_guard = guard.value_or(20);

    if (rate->parsed()) {
        auto r = ut::rate_constant(graph_opt.load(), delta);
        if (as_json) {
            emit(r.to_json(), out_path);
        } else {
            std::cout << "graph: " << graph_opt.label() << "\n";
            print_rate_text(r);
        }
        return 0;
    }
    if (curve->parsed()) {
        auto rows = ut::rate_curve(graph_opt.load(),
                                   ut::log_spaced_grid(delta_min, delta_max, delta_steps));
        emit(as_json ? ut::rate_curve_json(rows) : ut::rate_curve_csv(rows), out_path);
        return 0;
    }
    if (delta0->parsed()) {
        double d0 = ut::transition_delta0(graph_opt.load());
        emit(as_json ? "{\"delta0\":" + fmt(d0) + "}" : "delta0: " + fmt(d0), out_path);
        return 0;
    }
    if (indpoly->parsed()) {
        ut::Graph h = graph_opt.load();
        auto ph = ut::independence_polynomial(h, indpoly_guard);
        if (as_json) {
            emit(ph.to_json(), out_path);
        } else {
            int d = ut::max_degree(h);
            std::cout << "P_H: " << ph.to_string() << "\n";
            std::cout << "coefficients: " << ph.to_json() << "\n";
            if (d >= 1) {
                auto core = ut::max_degree_core(h, d);
                std::cout << "P_H*: "
                          << ut::independence_polynomial(core, indpoly_guard).to_string() << "\n";
            }
        }
        return 0;
    }
    if (family->parsed()) {
        auto rep = ut::enumerate_family(graph_opt.load(), family_guard);
        if (as_json) {
            emit(rep.to_json(), out_path);
        } else {
            std::cout << "Delta: " << rep.delta << "\n";
            std::cout << "H in family: " << (rep.h_in_family ? "yes" : "no") << "\n";
            for (const auto& e : rep.entries) {
                std::cout << "class |A|=" << e.core_size << " |E(F)|=" << e.edge_count
                          << " N(F,H)=" << e.multiplicity << " edges=";
                for (auto [u, v] : e.canonical_edges) std::cout << " " << u << "-" << v;
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (verify->parsed()) {
        auto rep = ut::verify_identity(graph_opt.load(), family_guard);
        if (as_json) {
            emit(rep.to_json(), out_path);
        } else {
            std::cout << "lhs: " << rep.lhs.to_string() << "\n";
            std::cout << "rhs: " << rep.rhs.to_string() << "\n";
            std::cout << "holds: " << (rep.holds ? "true" : "false") << "\n";
        }
        return rep.holds ? 0 : 1;
    }
    if (candidates->parsed()) {
        ut::Graph h = graph_opt.load();
        auto preds = ut::structural_predicates(h);
        std::string clique_json = "null";
        std::string text;
        if (preds.is_connected && preds.is_regular) {
            auto c = ut::clique_candidate(h, n, p, delta);
            clique_json = c.to_json();
            text += "clique: s=" + std::to_string(c.s) + " entropy=" + fmt(c.entropy) +
                    " normalized=" + fmt(c.normalized) +
                    " feasible=" + (c.feasible ? "yes" : "no") + "\n";
            if (!c.warning.empty()) text += "  warning: " + c.warning + "\n";
        } else {
            text += "clique: n/a (H not regular connected)\n";
        }
        auto a = ut::anticlique_candidate(h, n, p, delta);
        text += "anticlique: s=" + std::to_string(a.s) + " entropy=" + fmt(a.entropy) +
                " normalized=" + fmt(a.normalized) +
                " feasible=" + (a.feasible ? "yes" : "no") + "\n";
        if (!a.warning.empty()) text += "  warning: " + a.warning + "\n";
        if (as_json)
            emit("{\"clique\":" + clique_json + ",\"anticlique\":" + a.to_json() + "}", out_path);
        else
            emit(text, out_path);
        return 0;
    }
    if (varsolve->parsed()) {
        ut::Graph h = graph_opt.load();
        ut::SolveConfig cfg;
        cfg.seed = seed;
        cfg.max_iterations = max_iters;
        if (tol > 0) cfg.feasibility_tol = tol;
        std::vector<ut::TraceRow> trace;
        auto res = ut::solve_variational(h, static_cast<int>(n), p, delta, cfg,
                                         trace_path.empty() ? nullptr : &trace);
        if (!trace_path.empty()) emit(ut::trace_csv(trace), trace_path);
        if (!out_graph_path.empty())
            emit(ut::write_weighted_graph(res.graph, p, graph_opt.label()), out_graph_path);
        if (as_json) {
            emit(res.to_json(), out_path);
        } else {
            std::cout << "entropy: " << fmt(res.entropy) << "\n";
            std::cout << "normalized: " << fmt(res.normalized) << "\n";
            std::cout << "feasible: " << (res.feasible ? "true" : "false") << "\n";
            std::cout << "iterations: " << res.iterations << "\n";
            std::cout << "density: " << fmt(res.density) << " (target " << fmt(res.target) << ")\n";
        }
        return res.feasible ? 0 : 1;
    }
    if (mc->parsed()) {
        ut::Graph h = graph_opt.load();
        auto st = ut::estimate_upper_tail(h, static_cast<int>(n), p, delta, samples, seed,
                                          graph_opt.label());
        if (as_json) {
            emit(st.to_json(), out_path);
        } else {
            std::cout << "mean_count: " << fmt(st.mean_count) << "\n";
            std::cout << "variance: " << fmt(st.variance) << "\n";
            std::cout << "tail_threshold: " << fmt(st.tail_threshold) << "\n";
            std::cout << "tail_hits: " << st.tail_hits << " / " << st.num_samples << "\n";
            std::cout << "tail_estimate: " << fmt(st.tail_estimate) << " (ci halfwidth "
                      << fmt(st.ci_halfwidth) << ")\n";
            if (st.normalized_exponent)
                std::cout << "normalized_exponent: " << fmt(*st.normalized_exponent) << " ("
                          << st.note << ")\n";
        }
        return 0;
    }
    if (info->parsed()) {
        ut::Graph h = graph_opt.load();
        auto preds = ut::structural_predicates(h);
        int d = ut::max_degree(h);
        std::string json = "{";
        json += "\"n\":" + std::to_string(h.vertex_count());
        json += ",\"edges\":" + std::to_string(h.edge_count());
        json += ",\"max_degree\":" + std::to_string(d);
        json += ",\"regular\":" + std::string(preds.is_regular ? "true" : "false");
        json += ",\"connected\":" + std::string(preds.is_connected ? "true" : "false");
        json += ",\"bipartite\":" + std::string(preds.is_bipartite ? "true" : "false");
        json += ",\"components\":" + std::to_string(preds.components.size());
        if (d >= 1)
            json += ",\"core_vertices\":" +
                    std::to_string(ut::max_degree_core_vertices(h, d).size());
        json += "}";
        if (as_json) {
            emit(json, out_path);
        } else {
            std::cout << "n: " << h.vertex_count() << "\nedges: " << h.edge_count()
                      << "\nmax_degree: " << d << "\nregular: " << (preds.is_regular ? "yes" : "no")
                      << "\nconnected: " << (preds.is_connected ? "yes" : "no")
                      << "\nbipartite: " << (preds.is_bipartite ? "yes" : "no")
                      << "\ncomponents: " << preds.components.size() << "\n";
            try {
                std::cout << "vertex_cover: " << ut::vertex_cover_number(h) << "\n";
                std::cout << "matching: " << ut::matching_number(h) << "\n";
                auto nu = ut::fractional_matching_number(h);
                std::cout << "fractional_matching: " << nu.num << "/" << nu.den << "\n";
            } catch (const ut::size_guard_error&) {
                std::cout << "cover/matching: skipped (size guard)\n";
            }
        }
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ut::parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ut::size_guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
