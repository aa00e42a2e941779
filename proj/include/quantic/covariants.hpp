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

#ifndef QUANTIC_COVARIANTS_HPP
#define QUANTIC_COVARIANTS_HPP

#include "quantic/binary_quantic.hpp"
#include "quantic/homogeneous_poly.hpp"

namespace quantic {

/// Coefficients of the fourth emanant (P d_p + Q d_q)^4 U written as
/// A P^4 + 4 B P^3 Q + 6 C P^2 Q^2 + 4 D P Q^3 + E Q^4, i.e. the plain
/// fourth partials of U. Each has degree N - 4.
struct Emanant4 {
    HomogeneousPoly A, B, C, D, E;
};

/// Normalized covariants of a quantic of order N >= 5.
struct CovariantSet {
    BinaryQuantic U;
    HomogeneousPoly u;   // expand(U), degree N
    HomogeneousPoly H;   // 2N - 4
    HomogeneousPoly G;   // 3N - 6
    HomogeneousPoly S;   // 2N - 8
    HomogeneousPoly T;   // 3N - 12
    HomogeneousPoly dS;  // (U, S), 3N - 10
    HomogeneousPoly dT;  // (U, T), 4N - 14
};

// det [[U_pp, U_pq], [U_qp, U_qq]] / (N^2 (N-1)^2). N >= 2.
HomogeneousPoly hessian(const BinaryQuantic& u);

// (U, H) / (N (N-2)). N >= 3.
HomogeneousPoly covariant_G(const BinaryQuantic& u, const HomogeneousPoly& h);

Emanant4 emanant4(const BinaryQuantic& u);

// (AE - 4BD + 3C^2) / [N(N-1)(N-2)(N-3)]^2. N >= 4.
HomogeneousPoly covariant_S(const BinaryQuantic& u);
// (ACE + 2BCD - AD^2 - B^2 E - C^3) / [N(N-1)(N-2)(N-3)]^3. N >= 4.
HomogeneousPoly covariant_T(const BinaryQuantic& u);

// (U, S) and (U, T). N >= 5. Their sources are checked against
// N (N-4) S_0 and N (N-4) T_0 before returning.
HomogeneousPoly grad_S(const BinaryQuantic& u);
HomogeneousPoly grad_T(const BinaryQuantic& u);

CovariantSet compute_covariants(const BinaryQuantic& u);

// Residual polynomials. Each is the zero polynomial for every valid input;
// anything else means the engine is broken.

// G^2 + 4 H^3 + U^3 T - U^2 S H. N >= 5 (N = 4 via syzygy_main_quartic).
HomogeneousPoly syzygy_main(const BinaryQuantic& u);
HomogeneousPoly syzygy_main(const CovariantSet& cov);
// Experimental: the same identity for a quartic, where S and T are the
// classical invariants.
HomogeneousPoly syzygy_main_quartic(const BinaryQuantic& u);

// 2 (N-2) (U, T) - N (H, S). N >= 5.
HomogeneousPoly syzygy_switch(const BinaryQuantic& u);
HomogeneousPoly syzygy_switch(const CovariantSet& cov);

// l X (Y, Z) + m Y (Z, X) + n Z (X, Y) for X, Y, Z of degrees l, m, n.
HomogeneousPoly syzygy_three(const HomogeneousPoly& x, const HomogeneousPoly& y, const HomogeneousPoly& z);

// (N-4) (U, H) S - (N-2) [(U, S) H - (U, T) U]. N >= 5.
HomogeneousPoly syzygy_gradient(const BinaryQuantic& u);
HomogeneousPoly syzygy_gradient(const CovariantSet& cov);

/// Closed-form sources (coefficient of the top power of p) as polynomials
/// in the binomial-convention coefficients a_0 .. a_5.
namespace sources {

Rational hessian(const BinaryQuantic& u);
// Coefficient of p^(2N-5) q in H: (N-2)(a0 a3 - a1 a2).
Rational hessian_second(const BinaryQuantic& u);
Rational covariant_G(const BinaryQuantic& u);
Rational covariant_S(const BinaryQuantic& u);
Rational covariant_T(const BinaryQuantic& u);
// Bracketed leading factors of (U, S) and (U, T); the sources themselves
// are N (N-4) times these.
Rational grad_S0(const BinaryQuantic& u);
Rational grad_T0(const BinaryQuantic& u);

}  // namespace sources

}  // namespace quantic

#endif
