#include <cmath>
#include <stdexcept>

#include "uppertail/varprob.hpp"

namespace uppertail {

WeightedGraph::WeightedGraph(int n, double fill) : n_(n) {
    if (n <= 0) throw std::invalid_argument("WeightedGraph: need n >= 1");
    if (fill < 0 || fill > 1) throw std::invalid_argument("WeightedGraph: fill outside [0,1]");
    a_.assign(static_cast<size_t>(n) * n, fill);
    for (int i = 0; i < n; ++i) a_[static_cast<size_t>(i) * n + i] = 0.0;
}

void WeightedGraph::set(int i, int j, double v) {
    if (i == j) throw std::invalid_argument("WeightedGraph::set: diagonal is fixed at zero");
    if (v < 0 || v > 1) throw std::invalid_argument("WeightedGraph::set: weight outside [0,1]");
    a_[static_cast<size_t>(i) * n_ + j] = v;
    a_[static_cast<size_t>(j) * n_ + i] = v;
}

void WeightedGraph::validate() const {
    for (int i = 0; i < n_; ++i) {
        if (at(i, i) != 0.0) throw std::invalid_argument("WeightedGraph: nonzero diagonal");
        for (int j = i + 1; j < n_; ++j) {
            double v = at(i, j);
            if (v != at(j, i)) throw std::invalid_argument("WeightedGraph: asymmetric entry");
            if (!(v >= 0 && v <= 1)) throw std::invalid_argument("WeightedGraph: weight outside [0,1]");
        }
    }
}

double relative_entropy_point(double x, double p) {
    if (!(p > 0 && p < 1)) throw std::invalid_argument("relative_entropy_point: p outside (0,1)");
    if (!(x >= 0 && x <= 1)) throw std::invalid_argument("relative_entropy_point: x outside [0,1]");
    double a = (x == 0.0) ? 0.0 : x * std::log(x / p);
    double b = (x == 1.0) ? 0.0 : (1 - x) * std::log((1 - x) / (1 - p));
    return a + b;
}

double relative_entropy_derivative(double x, double p) {
    if (!(p > 0 && p < 1)) throw std::invalid_argument("relative_entropy_derivative: p outside (0,1)");
    if (!(x > 0 && x < 1))
        throw std::invalid_argument("relative_entropy_derivative: x outside (0,1)");
    return std::log(x / p) - std::log((1 - x) / (1 - p));
}

double graph_entropy(const WeightedGraph& g, double p) {
    double sum = 0.0;
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) sum += relative_entropy_point(g.at(i, j), p);
    return sum;
}

} // namespace uppertail
