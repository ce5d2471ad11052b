#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "uppertail/varprob.hpp"

namespace uppertail {

namespace {

// A factor of the homomorphism sum: a table over assignments of `vars`
// (H-vertex labels) to G-vertices, row-major in var order.
struct Factor {
    std::vector<int> vars;
    std::vector<double> vals;
};

size_t ipow(size_t base, size_t e) {
    size_t r = 1;
    while (e--) r *= base;
    return r;
}

// Greedy min-degree elimination order on H (with fill-in), plus the
// resulting induced width.
std::vector<int> elimination_order(const Graph& h, int* width_out) {
    const int k = h.vertex_count();
    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (auto [u, v] : h.edges()) adj[u][v] = adj[v][u] = 1;
    std::vector<char> gone(k, 0);
    std::vector<int> order;
    int width = 0;
    for (int step = 0; step < k; ++step) {
        int best = -1, best_deg = k + 1;
        for (int v = 0; v < k; ++v) {
            if (gone[v]) continue;
            int d = 0;
            for (int w = 0; w < k; ++w) d += (!gone[w] && adj[v][w]);
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        order.push_back(best);
        width = std::max(width, best_deg);
        gone[best] = 1;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (!gone[a] && !gone[b] && adj[best][a] && adj[best][b]) adj[a][b] = adj[b][a] = 1;
    }
    if (width_out) *width_out = width;
    return order;
}

// Sum the variable v out of the product of `inputs`, producing a factor over
// the union of the remaining variables. Time n^{|out|+1}, memory n^{|out|}.
// Factors over identical variable lists are merged elementwise first, and the
// one/two/three-factor sums run in tight strided loops.
Factor eliminate_var(const std::vector<const Factor*>& inputs, int v, int n) {
    // merge duplicates (same var list means same layout)
    std::vector<Factor> merged_storage;
    for (const Factor* f : inputs) {
        bool found = false;
        for (auto& s : merged_storage) {
            if (s.vars == f->vars) {
                for (size_t i = 0; i < s.vals.size(); ++i) s.vals[i] *= f->vals[i];
                found = true;
                break;
            }
        }
        if (!found) merged_storage.push_back(*f);
    }
    std::vector<const Factor*> work;
    for (const Factor& f : merged_storage) work.push_back(&f);

    Factor out;
    for (const Factor* f : work)
        for (int var : f->vars)
            if (var != v && std::find(out.vars.begin(), out.vars.end(), var) == out.vars.end())
                out.vars.push_back(var);
    std::sort(out.vars.begin(), out.vars.end());

    const size_t out_arity = out.vars.size();
    if (out_arity > 12)
        throw size_guard_error("hom_density: elimination width exceeds 12 variables");
    out.vals.assign(ipow(n, out_arity), 0.0);

    struct Access {
        const double* vals;
        size_t v_stride = 0;
        size_t out_stride[12] = {0};
    };
    std::vector<Access> access;
    for (const Factor* f : work) {
        Access a;
        a.vals = f->vals.data();
        size_t stride = 1;
        for (size_t pos = f->vars.size(); pos-- > 0;) {
            int var = f->vars[pos];
            if (var == v) {
                a.v_stride = stride;
            } else {
                size_t idx = std::find(out.vars.begin(), out.vars.end(), var) - out.vars.begin();
                a.out_stride[idx] = stride;
            }
            stride *= n;
        }
        access.push_back(a);
    }

    auto sum_over_v = [&](const size_t* base) -> double {
        double total = 0.0;
        switch (access.size()) {
            case 1: {
                const double* p = access[0].vals + base[0];
                const size_t s = access[0].v_stride;
                for (int g = 0; g < n; ++g, p += s) total += *p;
                break;
            }
            case 2: {
                const double* p0 = access[0].vals + base[0];
                const double* p1 = access[1].vals + base[1];
                const size_t s0 = access[0].v_stride, s1 = access[1].v_stride;
                for (int g = 0; g < n; ++g, p0 += s0, p1 += s1) total += *p0 * *p1;
                break;
            }
            case 3: {
                const double* p0 = access[0].vals + base[0];
                const double* p1 = access[1].vals + base[1];
                const double* p2 = access[2].vals + base[2];
                const size_t s0 = access[0].v_stride, s1 = access[1].v_stride,
                             s2 = access[2].v_stride;
                for (int g = 0; g < n; ++g, p0 += s0, p1 += s1, p2 += s2)
                    total += *p0 * *p1 * *p2;
                break;
            }
            default: {
                for (int g = 0; g < n; ++g) {
                    double prod = 1.0;
                    for (size_t f = 0; f < access.size(); ++f)
                        prod *= access[f].vals[base[f] + access[f].v_stride * g];
                    total += prod;
                }
            }
        }
        return total;
    };

    std::vector<int> assign(out_arity, 0);
    std::vector<size_t> base(access.size(), 0);
    const size_t total_cells = out.vals.size();
    for (size_t cell = 0; cell < total_cells; ++cell) {
        out.vals[cell] = sum_over_v(base.data());
        for (size_t d = out_arity; d-- > 0;) {
            ++assign[d];
            for (size_t f = 0; f < access.size(); ++f) base[f] += access[f].out_stride[d];
            if (assign[d] < n) break;
            for (size_t f = 0; f < access.size(); ++f)
                base[f] -= access[f].out_stride[d] * static_cast<size_t>(n);
            assign[d] = 0;
        }
    }
    return out;
}

struct EliminationResult {
    double scalar = 1.0;     // product of fully summed-out parts
    int isolated = 0;        // H-vertices with no remaining factor: each sums to n
    Factor pinned;           // only used by the gradient path
    bool has_pinned = false;
};

// Eliminate every vertex of H except those in `keep` (keep may be empty).
EliminationResult run_elimination(const Graph& h, const WeightedGraph& g,
                                  const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& keep, double op_budget) {
    const int n = g.size();
    const int k = h.vertex_count();

    std::vector<Factor> pool;
    std::vector<char> live_factor;
    std::vector<std::vector<int>> var_factors(k);
    auto add_factor = [&](Factor f) {
        int id = static_cast<int>(pool.size());
        for (int var : f.vars) var_factors[var].push_back(id);
        pool.push_back(std::move(f));
        live_factor.push_back(1);
    };

    for (auto [u, v] : edges) {
        Factor f;
        f.vars = {std::min(u, v), std::max(u, v)};
        f.vals.resize(static_cast<size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                f.vals[static_cast<size_t>(a) * n + b] = g.at(a, b);
        add_factor(std::move(f));
    }

    std::vector<char> keep_mask(k, 0);
    for (int v : keep) keep_mask[v] = 1;

    int width = 0;
    auto order = elimination_order(h, &width);

    EliminationResult res;
    double spent = 0.0;
    for (int v : order) {
        if (keep_mask[v]) continue;
        std::vector<const Factor*> inputs;
        std::vector<int> input_ids;
        for (int id : var_factors[v])
            if (live_factor[id]) {
                inputs.push_back(&pool[id]);
                input_ids.push_back(id);
            }
        if (inputs.empty()) {
            ++res.isolated;
            continue;
        }
        size_t out_arity = 0;
        {
            std::vector<int> u;
            for (const Factor* f : inputs)
                for (int var : f->vars)
                    if (var != v) u.push_back(var);
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            out_arity = u.size();
        }
        spent += static_cast<double>(ipow(n, out_arity)) * n * inputs.size();
        if (spent > op_budget)
            throw size_guard_error("hom_density: elimination cost exceeds budget (n=" +
                                   std::to_string(n) + ")");
        Factor merged = eliminate_var(inputs, v, n);
        for (int id : input_ids) live_factor[id] = 0;
        if (merged.vars.empty()) {
            res.scalar *= merged.vals[0];
        } else {
            add_factor(std::move(merged));
        }
    }

    if (!keep.empty()) {
        // multiply every surviving factor into one table over `keep`
        std::vector<const Factor*> rest;
        for (size_t id = 0; id < pool.size(); ++id)
            if (live_factor[id]) rest.push_back(&pool[id]);
        Factor acc;
        acc.vars = keep;
        std::sort(acc.vars.begin(), acc.vars.end());
        acc.vals.assign(ipow(n, acc.vars.size()), 1.0);
        for (const Factor* f : rest) {
            // f->vars is a subset of keep here
            std::vector<size_t> stride(acc.vars.size(), 0);
            size_t s = 1;
            for (size_t pos = f->vars.size(); pos-- > 0;) {
                size_t idx = std::find(acc.vars.begin(), acc.vars.end(), f->vars[pos]) -
                             acc.vars.begin();
                stride[idx] = s;
                s *= n;
            }
            std::vector<int> assign(acc.vars.size(), 0);
            size_t fidx = 0;
            for (size_t cell = 0; cell < acc.vals.size(); ++cell) {
                acc.vals[cell] *= f->vals[fidx];
                for (size_t d = acc.vars.size(); d-- > 0;) {
                    ++assign[d];
                    fidx += stride[d];
                    if (assign[d] < n) break;
                    fidx -= stride[d] * static_cast<size_t>(n);
                    assign[d] = 0;
                }
            }
        }
        res.pinned = std::move(acc);
        res.has_pinned = true;
    }
    return res;
}

} // namespace

double hom_density(const Graph& h, const WeightedGraph& g, double op_budget) {
    const int k = h.vertex_count();
    if (k < 1) throw std::invalid_argument("hom_density: H needs at least one vertex");
    auto res = run_elimination(h, g, h.edges(), {}, op_budget);
    double value = res.scalar;
    // each isolated H-vertex contributes a free sum over n targets
    return value * std::pow(static_cast<double>(g.size()), res.isolated - k);
}

double hom_density_bruteforce(const Graph& h, const WeightedGraph& g, double op_budget) {
    const int k = h.vertex_count();
    const int n = g.size();
    if (k < 1) throw std::invalid_argument("hom_density_bruteforce: H needs at least one vertex");
    double cost = std::pow(static_cast<double>(n), k) * std::max(1, h.edge_count());
    if (cost > op_budget) throw size_guard_error("hom_density_bruteforce: n^|V(H)| too large");

    std::vector<int> assign(k, 0);
    double total = 0.0;
    while (true) {
        double prod = 1.0;
        for (auto [u, v] : h.edges()) {
            prod *= g.at(assign[u], assign[v]);
            if (prod == 0.0) break;
        }
        total += prod;
        int d = k - 1;
        while (d >= 0 && ++assign[d] == n) assign[d--] = 0;
        if (d < 0) break;
    }
    return total * std::pow(static_cast<double>(n), -k);
}

std::vector<double> hom_density_gradient(const Graph& h, const WeightedGraph& g,
                                         double op_budget) {
    const int k = h.vertex_count();
    const int n = g.size();
    if (k < 1) throw std::invalid_argument("hom_density_gradient: H needs at least one vertex");
    std::vector<double> grad(static_cast<size_t>(n) * n, 0.0);
    const double scale = std::pow(static_cast<double>(n), -k);

    for (size_t e = 0; e < h.edges().size(); ++e) {
        auto [x, y] = h.edges()[e];
        std::vector<std::pair<int, int>> rest;
        for (size_t i = 0; i < h.edges().size(); ++i)
            if (i != e) rest.push_back(h.edges()[i]);
        auto res = run_elimination(h, g, rest, {x, y}, op_budget);
        // res.pinned is a table over {min(x,y), max(x,y)}; with (x,y) pinned to
        // (u,v) the removed edge contributes d t/d a_uv once per orientation
        const Factor& t = res.pinned;
        const double outer = res.scalar * std::pow(static_cast<double>(n), res.isolated);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                grad[static_cast<size_t>(u) * n + v] +=
                    outer * t.vals[static_cast<size_t>(u) * n + v];
            }
        }
    }
    // symmetrize: a_uv == a_vu is one variable, both orientations accumulate
    std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            out[static_cast<size_t>(u) * n + v] =
                scale * (grad[static_cast<size_t>(u) * n + v] + grad[static_cast<size_t>(v) * n + u]);
        }
    return out;
}

double block_hom_density(const Graph& h, const BlockModel& model) {
    const int k = h.vertex_count();
    if (k < 1 || k > 10)
        throw size_guard_error("block_hom_density: |V(H)| must be between 1 and 10");
    const int nb = static_cast<int>(model.sizes.size());
    if (nb == 0 || model.weights.size() != static_cast<size_t>(nb))
        throw std::invalid_argument("block_hom_density: malformed block model");
    double n = 0;
    for (long long s : model.sizes) {
        if (s < 0) throw std::invalid_argument("block_hom_density: negative block size");
        n += static_cast<double>(s);
    }
    if (n <= 0) throw std::invalid_argument("block_hom_density: empty model");

    double total = 0.0;
    // restricted-growth strings enumerate set partitions of V(H); a partition
    // is the collision pattern of a map (classes land on distinct vertices)
    std::vector<int> rgs(k, 0);
    std::vector<int> maxc(k, 0);
    while (true) {
        int classes = *std::max_element(rgs.begin(), rgs.end()) + 1;
        // classes with an internal H-edge hit the zero diagonal
        bool zero = false;
        for (auto [u, v] : h.edges())
            if (rgs[u] == rgs[v]) {
                zero = true;
                break;
            }
        if (!zero) {
            // quotient edge multiplicities between classes
            std::vector<std::vector<int>> mult(classes, std::vector<int>(classes, 0));
            for (auto [u, v] : h.edges()) {
                int a = rgs[u], b = rgs[v];
                ++mult[std::min(a, b)][std::max(a, b)];
            }
            // assign classes to blocks; injective placement within a block
            // costs falling-factorial fractions (size - i)/n
            std::vector<int> blk(classes, 0);
            while (true) {
                std::vector<int> used(nb, 0);
                double term = 1.0;
                for (int c = 0; c < classes && term != 0.0; ++c) {
                    term *= (static_cast<double>(model.sizes[blk[c]]) - used[blk[c]]) / n;
                    if (term < 0) term = 0;
                    ++used[blk[c]];
                }
                if (term != 0.0) {
                    for (int a = 0; a < classes && term != 0.0; ++a)
                        for (int b = a; b < classes; ++b)
                            for (int m = 0; m < mult[a][b]; ++m)
                                term *= model.weights[blk[a]][blk[b]];
                    // classes < |V(H)| placements carry only m factors of 1/n
                    total += term * std::pow(n, static_cast<double>(classes - k));
                }
                int d = classes - 1;
                while (d >= 0 && ++blk[d] == nb) blk[d--] = 0;
                if (d < 0) break;
            }
        }
        // next restricted growth string
        int d = k - 1;
        while (d > 0) {
            if (rgs[d] <= maxc[d - 1]) {
                ++rgs[d];
                break;
            }
            rgs[d] = 0;
            --d;
        }
        if (d == 0) break;
        maxc[d] = std::max(maxc[d - 1], rgs[d]);
        for (int i = d + 1; i < k; ++i) maxc[i] = std::max(maxc[i - 1], rgs[i]);
    }
    return total;
}

double StepGraphon::expected_entropy(double p) const {
    const int b = static_cast<int>(values.size());
    double sum = 0.0;
    for (int i = 0; i < b; ++i) {
        double li = breakpoints[i + 1] - breakpoints[i];
        for (int j = 0; j < b; ++j) {
            double lj = breakpoints[j + 1] - breakpoints[j];
            sum += li * lj * relative_entropy_point(values[i][j], p);
        }
    }
    return sum;
}

double StepGraphon::density(const Graph& h) const {
    const int k = h.vertex_count();
    const int b = static_cast<int>(values.size());
    if (k < 1) throw std::invalid_argument("StepGraphon::density: H needs at least one vertex");
    if (std::pow(static_cast<double>(b), k) > 5e7)
        throw size_guard_error("StepGraphon::density: too many blocks for |V(H)|");
    std::vector<int> assign(k, 0);
    double total = 0.0;
    while (true) {
        double term = 1.0;
        for (int v = 0; v < k && term != 0.0; ++v)
            term *= breakpoints[assign[v] + 1] - breakpoints[assign[v]];
        for (auto [u, v] : h.edges()) {
            if (term == 0.0) break;
            term *= values[assign[u]][assign[v]];
        }
        total += term;
        int d = k - 1;
        while (d >= 0 && ++assign[d] == b) assign[d--] = 0;
        if (d < 0) break;
    }
    return total;
}

} // namespace uppertail
