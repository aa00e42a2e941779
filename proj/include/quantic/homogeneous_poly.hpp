/*
   Copyright 2026 The quantic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QUANTIC_HOMOGENEOUS_POLY_HPP
#define QUANTIC_HOMOGENEOUS_POLY_HPP

#include "quantic/rational.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace quantic {

/// Dense homogeneous polynomial in (p, q): sum_k c_k p^(d-k) q^k.
///
/// The coefficient vector always has exactly degree()+1 entries. A zero
/// polynomial still carries a nominal degree so that addition stays closed
/// within a degree class, but equality treats every all-zero polynomial as
/// the same value.
class HomogeneousPoly {
  public:
    HomogeneousPoly() : HomogeneousPoly(0) {}
    explicit HomogeneousPoly(int degree);
    HomogeneousPoly(int degree, std::vector<Rational> coeffs);

    static HomogeneousPoly zero(int degree) { return HomogeneousPoly(degree); }
    static HomogeneousPoly constant(const Rational& c);
    // c p^(d-k) q^k
    static HomogeneousPoly monomial(int degree, int k, const Rational& c = 1);
    static HomogeneousPoly p() { return monomial(1, 0); }
    static HomogeneousPoly q() { return monomial(1, 1); }

    int degree() const { return degree_; }
    std::span<const Rational> coeffs() const { return coeffs_; }
    const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    bool is_zero() const;

    HomogeneousPoly operator-() const;
    HomogeneousPoly& operator+=(const HomogeneousPoly& other);
    HomogeneousPoly& operator-=(const HomogeneousPoly& other);
    HomogeneousPoly& operator*=(const Rational& r);

    friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b);

  private:
    int degree_;
    std::vector<Rational> coeffs_;
};

HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b);
HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b);
HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
HomogeneousPoly operator*(HomogeneousPoly a, const Rational& r);
HomogeneousPoly operator*(const Rational& r, HomogeneousPoly a);

// Named forms of the ring operations.
HomogeneousPoly add(const HomogeneousPoly& x, const HomogeneousPoly& y);
HomogeneousPoly scale(const HomogeneousPoly& x, const Rational& r);
HomogeneousPoly mul(const HomogeneousPoly& x, const HomogeneousPoly& y);
HomogeneousPoly pow(const HomogeneousPoly& x, unsigned k);

// Formal partials. A degree-0 input gives the zero polynomial of degree 0.
HomogeneousPoly partial_p(const HomogeneousPoly& x);
HomogeneousPoly partial_q(const HomogeneousPoly& x);

// (X, Y) = X_p Y_q - X_q Y_p, of degree deg X + deg Y - 2 (clamped at 0).
HomogeneousPoly jacobian(const HomogeneousPoly& x, const HomogeneousPoly& y);

// Classical Poisson bracket {W, Z} = W_q Z_p - W_p Z_q = (Z, W). Along the
// flow of U, the derivative of V is {V, U}.
HomogeneousPoly poisson(const HomogeneousPoly& w, const HomogeneousPoly& z);

Rational eval(const HomogeneousPoly& x, const Rational& p, const Rational& q);
double eval(const HomogeneousPoly& x, double p, double q);

// Coefficient of p^d, the classical "source" of a covariant.
Rational source(const HomogeneousPoly& x);

// X(q, p): the coefficient vector reversed.
HomogeneousPoly swap_variables(const HomogeneousPoly& x);

std::string to_string(const HomogeneousPoly& x);
std::ostream& operator<<(std::ostream& os, const HomogeneousPoly& x);

/// Floating-point copy of a HomogeneousPoly for repeated evaluation.
class NumericPoly {
  public:
    NumericPoly() = default;
    explicit NumericPoly(const HomogeneousPoly& x);

    int degree() const { return degree_; }
    double operator()(double p, double q) const;

  private:
    int degree_ = 0;
    std::vector<double> coeffs_{0.0};
};

}  // namespace quantic

#endif
