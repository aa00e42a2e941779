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

#ifndef QUANTIC_WEIERSTRASS_HPP
#define QUANTIC_WEIERSTRASS_HPP

#include "quantic/binary_quantic.hpp"
#include "quantic/covariants.hpp"
#include "quantic/homogeneous_poly.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace quantic {

template <typename T>
struct Point {
    T p{};
    T q{};
};

/// Rescaled Hessian and the Weierstrass data of a quantic, as covariants:
///   phi     = -[N(N-2)]^2 H
///   phi_dot = -[N(N-2)]^3 G   (derivative of phi along the flow)
///   g2poly  = [N^2 (N-2)^2]^2 U^2 S
///   g3poly  = [N^2 (N-2)^2]^3 U^3 T
/// satisfying phi_dot^2 = 4 phi^3 - g2poly phi - g3poly identically.
struct WeierstrassData {
    int order = 0;
    HomogeneousPoly phi;
    HomogeneousPoly phi_dot;
    HomogeneousPoly g2poly;
    HomogeneousPoly g3poly;
};

WeierstrassData build_weierstrass(const BinaryQuantic& u);
WeierstrassData build_weierstrass(const CovariantSet& cov);

// phi_dot^2 - 4 phi^3 + g2 phi + g3 at (p, q).
Rational pointwise_residual(const WeierstrassData& w, const Rational& p, const Rational& q);

Rational discriminant(const Rational& g2, const Rational& g3);

enum class SConstant { identically_zero, constant_nonzero, nonconstant };
enum class Category { u_zero_inverse_square, proper_elementary, proper_wp, improper };

std::string_view to_string(SConstant s);
std::string_view to_string(Category c);

/// Outcome of the symbol-level properness test for the Hamilton curve
/// through a given start point.
struct Classification {
    Rational u_value;
    SConstant s_constant = SConstant::nonconstant;
    bool proper = false;
    // Values of g2, g3 at the start point. Constant along the curve when proper.
    Rational g2;
    Rational g3;
    std::optional<Rational> delta;  // set only when proper
    Category category = Category::improper;
    bool phi_nonconstant = false;   // G(start) != 0
    double lame_parameter = 0.0;    // 1 / (N - 2)
};

Classification classify(const BinaryQuantic& u, const Point<Rational>& start);

// Laurent coefficients c_2 .. c_count of wp(z) = z^-2 + sum_k c_k z^(2k-2).
std::vector<double> wp_laurent_coefficients(double g2, double g3, int count);

// Truncated Laurent series through z^14 and its term-wise derivative.
// Throws PreconditionError for z = 0 or when the first omitted terms are
// not below 1e-12 relative to z^-2.
double wp_series(double g2, double g3, double z);
double wp_series_derivative(double g2, double g3, double z);

}  // namespace quantic

#endif
