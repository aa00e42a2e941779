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

#include "quantic/weierstrass.hpp"

#include "quantic/errors.hpp"

#include <cmath>

namespace quantic {

namespace {

constexpr int kLastKeptTerm = 8;  // c_8 z^14
constexpr double kTruncationTolerance = 1e-12;

void check_identity(const WeierstrassData& w) {
    HomogeneousPoly rhs = Rational(4) * pow(w.phi, 3) - w.g2poly * w.phi - w.g3poly;
    if (!(w.phi_dot * w.phi_dot == rhs))
        throw InternalError("Weierstrass identity fails for the rescaled Hessian");
}

void check_series_domain(double g2, double g3, double z) {
    if (z == 0.0)
        throw PreconditionError("wp_series: z = 0 is the pole");
    if (!std::isfinite(z) || !std::isfinite(g2) || !std::isfinite(g3))
        throw PreconditionError("wp_series: non-finite argument");
    const auto c = wp_laurent_coefficients(g2, g3, kLastKeptTerm + 2);
    // c[k - 2] multiplies z^(2k-2); relative to z^-2 the omitted terms are c_k z^(2k).
    const double az = std::abs(z);
    for (int k = kLastKeptTerm + 1; k <= kLastKeptTerm + 2; ++k) {
        if (std::abs(c[static_cast<std::size_t>(k - 2)]) * std::pow(az, 2 * k) >= kTruncationTolerance)
            throw PreconditionError("wp_series: |z| outside the truncation radius");
    }
}

}  // namespace

WeierstrassData build_weierstrass(const CovariantSet& cov) {
    const int n = cov.U.order();
    const Rational k = n * (n - 2);     // N(N-2)
    const Rational k2 = k * k;          // N^2 (N-2)^2
    WeierstrassData w;
    w.order = n;
    w.phi = -(k2 * cov.H);
    w.phi_dot = -(k2 * k * cov.G);
    w.g2poly = (k2 * k2) * (cov.u * cov.u * cov.S);
    w.g3poly = (k2 * k2 * k2) * (cov.u * cov.u * cov.u * cov.T);
    check_identity(w);
    return w;
}

WeierstrassData build_weierstrass(const BinaryQuantic& u) {
    require_order(u.order(), 5, "build_weierstrass");
    return build_weierstrass(compute_covariants(u));
}

Rational pointwise_residual(const WeierstrassData& w, const Rational& p, const Rational& q) {
    const Rational phi = eval(w.phi, p, q);
    const Rational phi_dot = eval(w.phi_dot, p, q);
    return phi_dot * phi_dot - 4 * phi * phi * phi + eval(w.g2poly, p, q) * phi + eval(w.g3poly, p, q);
}

Rational discriminant(const Rational& g2, const Rational& g3) {
    return g2 * g2 * g2 - 27 * g3 * g3;
}

std::string_view to_string(SConstant s) {
    switch (s) {
    case SConstant::identically_zero: return "identically_zero";
    case SConstant::constant_nonzero: return "constant_nonzero";
    case SConstant::nonconstant: return "nonconstant";
    }
    return "?";
}

std::string_view to_string(Category c) {
    switch (c) {
    case Category::u_zero_inverse_square: return "u_zero_inverse_square";
    case Category::proper_elementary: return "proper_elementary";
    case Category::proper_wp: return "proper_wp";
    case Category::improper: return "improper";
    }
    return "?";
}

Classification classify(const BinaryQuantic& u, const Point<Rational>& start) {
    const int n = u.order();
    require_order(n, 5, "classify");
    const CovariantSet cov = compute_covariants(u);
    const WeierstrassData w = build_weierstrass(cov);
    const auto& [p, q] = start;

    Classification out;
    out.lame_parameter = 1.0 / (n - 2);
    out.u_value = eval(cov.u, p, q);
    out.g2 = eval(w.g2poly, p, q);
    out.g3 = eval(w.g3poly, p, q);
    out.phi_nonconstant = sgn(eval(cov.G, p, q)) != 0;

    const Rational s_value = eval(cov.S, p, q);
    const bool s_conserved = cov.dS.is_zero();
    if (!s_conserved)
        out.s_constant = SConstant::nonconstant;
    else if (sgn(s_value) == 0)
        out.s_constant = SConstant::identically_zero;
    else
        out.s_constant = SConstant::constant_nonzero;

    if (sgn(out.u_value) == 0) {
        // g2 = g3 = 0 along the whole curve: proper, with inverse-square solutions.
        out.proper = true;
        out.delta = Rational(0);
        out.category = Category::u_zero_inverse_square;
        return out;
    }

    if (s_conserved && cov.dT.is_zero()) {
        out.proper = true;
        // With (U,S) = (U,T) = 0 the gradient syzygy leaves (N-4)(U,H) S = 0,
        // so a moving phi forces S to vanish on the curve.
        if (out.phi_nonconstant && sgn(s_value) != 0)
            throw InternalError("proper curve with nonconstant phi but nonzero S");
        out.delta = discriminant(out.g2, out.g3);
        out.category = sgn(*out.delta) == 0 ? Category::proper_elementary : Category::proper_wp;
        return out;
    }

    out.proper = false;
    out.category = Category::improper;
    return out;
}

std::vector<double> wp_laurent_coefficients(double g2, double g3, int count) {
    // c_2 = g2/20, c_3 = g3/28, c_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m}.
    std::vector<double> c;
    if (count < 2)
        return c;
    c.resize(static_cast<std::size_t>(count - 1), 0.0);
    auto at = [&](int k) -> double& { return c[static_cast<std::size_t>(k - 2)]; };
    at(2) = g2 / 20.0;
    if (count >= 3)
        at(3) = g3 / 28.0;
    for (int k = 4; k <= count; ++k) {
        double s = 0.0;
        for (int m = 2; m <= k - 2; ++m)
            s += at(m) * at(k - m);
        at(k) = 3.0 * s / ((2.0 * k + 1.0) * (k - 3.0));
    }
    return c;
}

double wp_series(double g2, double g3, double z) {
    check_series_domain(g2, g3, z);
    const auto c = wp_laurent_coefficients(g2, g3, kLastKeptTerm);
    const double z2 = z * z;
    // Horner in z^2 over c_2 .. c_8, then shift by z^2.
    double acc = 0.0;
    for (int k = kLastKeptTerm; k >= 2; --k)
        acc = acc * z2 + c[static_cast<std::size_t>(k - 2)];
    return 1.0 / z2 + acc * z2;
}

double wp_series_derivative(double g2, double g3, double z) {
    check_series_domain(g2, g3, z);
    const auto c = wp_laurent_coefficients(g2, g3, kLastKeptTerm);
    double acc = -2.0 / (z * z * z);
    for (int k = 2; k <= kLastKeptTerm; ++k)
        acc += (2.0 * k - 2.0) * c[static_cast<std::size_t>(k - 2)] * std::pow(z, 2 * k - 3);
    return acc;
}

}  // namespace quantic
