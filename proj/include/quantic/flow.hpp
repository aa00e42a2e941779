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

#ifndef QUANTIC_FLOW_HPP
#define QUANTIC_FLOW_HPP

#include "quantic/binary_quantic.hpp"
#include "quantic/covariants.hpp"
#include "quantic/homogeneous_poly.hpp"
#include "quantic/weierstrass.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace quantic {

enum class Method { rk4, rk45_adaptive };

Method parse_method(std::string_view name);
std::string_view to_string(Method m);

struct FlowOptions {
    double t_end = 0.1;
    // Step size for rk4; output spacing for the adaptive method.
    double dt = 1e-4;
    Method method = Method::rk4;
    // Record every stride-th step (rk4) or every stride-th output time.
    int stride = 1;
    double rtol = 1e-10;
    double atol = 1e-12;
    // Integration stops once |p| or |q| exceeds this.
    double blowup_cap = 1e12;
};

struct FlowSample {
    double t = 0.0;
    double p = 0.0;
    double q = 0.0;
    double u = 0.0;
    double phi = 0.0;
    double phi_dot_analytic = 0.0;  // -[N(N-2)]^3 G(p, q)
    double g2 = 0.0;
    double g3 = 0.0;
    double weierstrass_residual = 0.0;  // phi_dot^2 - 4 phi^3 + g2 phi + g3
    double lame_parameter = 0.0;
};

struct FlowReport {
    int order = 0;
    std::vector<FlowSample> samples;
    // max |u(t) - u(0)| / max(1, |u(0)|)
    double u_drift_max = 0.0;
    // Weierstrass residual relative to the largest of its four terms (floored at 1).
    double residual_max = 0.0;
    double second_order_error_max = 0.0;
    double fd_consistency_error = 0.0;
    bool diverged = false;
    double lame_parameter = 0.0;
};

/// Hamilton vector field q' = U_p, p' = -U_q with the partials
/// precomputed in floating point.
class HamiltonField {
  public:
    explicit HamiltonField(const BinaryQuantic& u);

    // Returns (pdot, qdot).
    std::pair<double, double> operator()(double p, double q) const;

  private:
    NumericPoly up_, uq_;
};

std::pair<double, double> hamilton_rhs(const BinaryQuantic& u, double p, double q);

// N >= 5; dt > 0; t_end >= 0; finite start. A non-finite state or one past
// the blow-up cap ends the run early with diverged = true.
FlowReport integrate(const BinaryQuantic& u, Point<double> start, const FlowOptions& opts);

// Keeps every k-th sample and recomputes the drift and residual maxima.
// The finite-difference monitors are left at zero.
FlowReport thin(const FlowReport& report, int every);

// Max over interior samples of |gamma''_fd + N^2 (N-1) H gamma| / max(1, |N^2 (N-1) H gamma|).
double monitor_second_order(const BinaryQuantic& u, const FlowReport& report);

// Max over interior samples of |phi'_fd - phi_dot_analytic| / max(1, |phi_dot_analytic|).
double monitor_phi_derivative(const FlowReport& report);

// True iff g2 and g3 stay within tol of their initial values (relative, floored at 1).
bool monitor_properness(const FlowReport& report, double tol);

}  // namespace quantic

#endif
