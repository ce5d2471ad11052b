#include "uppertail/indpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "format.hpp"

namespace uppertail {

IntPolynomial::IntPolynomial(std::vector<BigUint> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(BigUint(0));
}

IntPolynomial IntPolynomial::binomial_power(int n) {
    std::vector<BigUint> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = big_binomial(n, k);
    return IntPolynomial(std::move(c));
}

const BigUint& IntPolynomial::coeff(int k) const {
    static const BigUint zero;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigUint> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < o.coeffs_.size()) c[i] += o.coeffs_[i];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    std::vector<BigUint> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::times_x() const {
    std::vector<BigUint> c;
    c.reserve(coeffs_.size() + 1);
    c.push_back(BigUint(0));
    for (const auto& b : coeffs_) c.push_back(b);
    return IntPolynomial(std::move(c));
}

double IntPolynomial::evaluate(double x) const {
    if (x < 0) throw std::invalid_argument("IntPolynomial::evaluate: x must be >= 0");
    double acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].to_double();
    return acc;
}

double IntPolynomial::evaluate_derivative(double x) const {
    if (x < 0) throw std::invalid_argument("IntPolynomial::evaluate_derivative: x must be >= 0");
    double acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 1;)
        acc = acc * x + coeffs_[i].to_double() * static_cast<double>(i);
    return acc;
}

std::pair<BigUint, BigUint> IntPolynomial::evaluate_rational(const BigUint& num,
                                                             const BigUint& den) const {
    if (den.is_zero()) throw std::invalid_argument("evaluate_rational: zero denominator");
    BigUint acc = coeffs_.back();
    BigUint den_pow(1);
    for (size_t i = coeffs_.size() - 1; i-- > 0;) {
        den_pow = den_pow * den;
        acc = acc * num + coeffs_[i] * den_pow;
    }
    return {acc, den_pow};
}

std::string IntPolynomial::to_json() const {
    std::string out = "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += "\"" + coeffs_[i].to_decimal() + "\"";
    }
    return out + "]";
}

std::string IntPolynomial::to_string() const {
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero() && coeffs_.size() > 1) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[i].to_decimal();
        if (i == 1) out += " x";
        if (i > 1) out += " x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

namespace {

// Recursion state for one independence-polynomial computation. The memo is
// confined to the call, so concurrent top-level computations never share
// mutable state.
struct IndPolyContext {
    int canonical_guard;
    std::unordered_map<std::string, IntPolynomial> memo;

    IntPolynomial component_poly(const Graph& g) {
        if (g.edge_count() == 0) return IntPolynomial::binomial_power(g.vertex_count());
        std::string key = canonical_form(g, canonical_guard);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        // branch on a maximum-degree vertex, ties to the smallest label
        int v = 0;
        for (int u = 1; u < g.vertex_count(); ++u)
            if (g.degree(u) > g.degree(v)) v = u;

        std::vector<int> without_v, without_closed;
        std::vector<char> drop(g.vertex_count(), 0);
        drop[v] = 1;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (!drop[u]) without_v.push_back(u);
        for (int u : g.neighbors(v)) drop[u] = 1;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (!drop[u]) without_closed.push_back(u);

        IntPolynomial result =
            whole_poly(induced_subgraph(g, without_v)) +
            whole_poly(induced_subgraph(g, without_closed)).times_x();
        memo.emplace(std::move(key), result);
        return result;
    }

    IntPolynomial whole_poly(const Graph& g) {
        auto preds = structural_predicates(g);
        if (preds.components.size() <= 1) {
            return preds.components.empty() ? IntPolynomial::one()
                                            : component_poly(preds.components[0].graph);
        }
        IntPolynomial acc = IntPolynomial::one();
        for (const auto& c : preds.components) acc = acc * component_poly(c.graph);
        return acc;
    }
};

} // namespace

IntPolynomial independence_polynomial(const Graph& g, int size_guard) {
    if (g.vertex_count() > size_guard)
        throw size_guard_error("independence_polynomial: " + std::to_string(g.vertex_count()) +
                               " vertices exceeds guard " + std::to_string(size_guard));
    if (g.vertex_count() > 64)
        throw size_guard_error("independence_polynomial: limited to 64 vertices");
    IndPolyContext ctx{/*canonical_guard=*/12, {}};
    return ctx.whole_poly(g);
}

double solve_threshold(const IntPolynomial& p, double delta) {
    if (delta <= 0) throw std::invalid_argument("solve_threshold: delta must be positive");
    if (p.is_constant())
        throw std::invalid_argument("solve_threshold: constant polynomial has no positive root");
    if (!(p.coeff(0) == BigUint(1)))
        throw std::invalid_argument("solve_threshold: polynomial must have constant term 1");

    const double target = 1.0 + delta;
    const double atol = 1e-12 * target;

    double hi = std::max(1.0, delta);
    while (p.evaluate(hi) < target) {
        hi *= 2.0;
        if (!std::isfinite(hi)) throw std::runtime_error("solve_threshold: bracketing failed");
    }
    double lo = 0.0;

    double x = hi / 2.0;
    for (int it = 0; it < 200; ++it) {
        double f = p.evaluate(x) - target;
        if (std::abs(f) <= atol) return x;
        if (f > 0)
            hi = x;
        else
            lo = x;
        double d = p.evaluate_derivative(x);
        double next = (d > 0) ? x - f / d : lo;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi); // bisection safeguard
        x = next;
    }
    return x;
}

} // namespace uppertail
