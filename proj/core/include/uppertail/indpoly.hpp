#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uppertail/bigint.hpp"
#include "uppertail/graph.hpp"

namespace uppertail {

// Exact integer-coefficient univariate polynomial; coeffs[k] multiplies x^k.
// For an independence polynomial: coeffs[0] == 1 (the empty set), coeffs[1]
// equals the vertex count, and the degree is the independence number.
class IntPolynomial {
public:
    IntPolynomial() : coeffs_{BigUint(1)} {}
    explicit IntPolynomial(std::vector<BigUint> coeffs);

    static IntPolynomial one() { return IntPolynomial(); }
    static IntPolynomial binomial_power(int n); // (1 + x)^n

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() == 1; }
    const std::vector<BigUint>& coeffs() const { return coeffs_; }
    const BigUint& coeff(int k) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial times_x() const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    double evaluate(double x) const;            // requires x >= 0
    double evaluate_derivative(double x) const; // requires x >= 0

    // Exact P(num/den) as an unreduced fraction (value, den^degree).
    std::pair<BigUint, BigUint> evaluate_rational(const BigUint& num, const BigUint& den) const;

    // JSON array of decimal-string coefficients, lowest degree first.
    std::string to_json() const;
    std::string to_string() const; // human readable "1 + 4x + 2x^2"

private:
    std::vector<BigUint> coeffs_;
};

// Independence polynomial by the deletion recursion on a maximum-degree
// vertex (ties to the smallest label), memoized on canonical forms, and
// multiplicative over connected components. Exact coefficients.
IntPolynomial independence_polynomial(const Graph& g, int size_guard = 40);

// The unique positive root of P(theta) = 1 + delta for a nonconstant P with
// P(0) = 1 and nonnegative coefficients. Bracketing by doubling, then a
// safeguarded bisection/Newton hybrid; |P(theta)-(1+delta)| <= 1e-12*(1+delta).
double solve_threshold(const IntPolynomial& p, double delta);

} // namespace uppertail
