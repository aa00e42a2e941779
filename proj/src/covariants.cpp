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

#include "quantic/covariants.hpp"

#include "quantic/errors.hpp"

#include <algorithm>
#include <string>

namespace quantic {

namespace {

void check_degree(const HomogeneousPoly& x, int expected, const char* name) {
    if (x.degree() != expected)
        throw InternalError(std::string(name) + " has degree " + std::to_string(x.degree()) + ", expected " +
                            std::to_string(expected));
}

// Divides a raw determinant by its normalizing constant. The raw polynomial
// is homogeneous of the given weight in the a_i, so scaling U by the lcm L
// of its denominators gives integer a_i and multiplies the quotient by
// L^weight. Every normalized covariant has integer coefficients for
// integer a_i; a fractional coefficient here means the constant is wrong.
HomogeneousPoly normalize(const HomogeneousPoly& raw, const Integer& divisor, const BinaryQuantic& u,
                          unsigned weight, const char* name) {
    Integer lift;
    mpz_pow_ui(lift.get_mpz_t(), u.denominator_lcm().get_mpz_t(), weight);
    const Rational inv = Rational(Integer(1), divisor);
    std::vector<Rational> out;
    out.reserve(raw.coeffs().size());
    for (const auto& c : raw.coeffs()) {
        Rational v = c * inv;
        Rational lifted = v * Rational(lift);
        if (lifted.get_den() != 1)
            throw InternalError(std::string("normalization of ") + name + " by " + divisor.get_str() +
                                " is not exact");
        out.push_back(std::move(v));
    }
    return HomogeneousPoly(raw.degree(), std::move(out));
}

HomogeneousPoly nth_partial(HomogeneousPoly x, int np, int nq) {
    for (int i = 0; i < np; ++i)
        x = partial_p(x);
    for (int i = 0; i < nq; ++i)
        x = partial_q(x);
    return x;
}

Integer emanant_constant(int n) {
    return falling_factorial(n, 4);
}

HomogeneousPoly covariant_S_from(const Emanant4& e, const BinaryQuantic& u) {
    const int n = u.order();
    HomogeneousPoly raw = e.A * e.E - Rational(4) * (e.B * e.D) + Rational(3) * (e.C * e.C);
    Integer k = emanant_constant(n);
    HomogeneousPoly s = normalize(raw, k * k, u, 2, "S");
    check_degree(s, 2 * n - 8, "S");
    return s;
}

HomogeneousPoly covariant_T_from(const Emanant4& e, const BinaryQuantic& u) {
    const int n = u.order();
    HomogeneousPoly raw = e.A * e.C * e.E + Rational(2) * (e.B * e.C * e.D) - e.A * e.D * e.D -
                          e.B * e.B * e.E - e.C * e.C * e.C;
    Integer k = emanant_constant(n);
    HomogeneousPoly t = normalize(raw, k * k * k, u, 3, "T");
    check_degree(t, 3 * n - 12, "T");
    return t;
}

HomogeneousPoly grad_S_from(const BinaryQuantic& u, const HomogeneousPoly& uu, const HomogeneousPoly& s) {
    const int n = u.order();
    HomogeneousPoly ds = jacobian(uu, s);
    check_degree(ds, 3 * n - 10, "(U,S)");
    if (source(ds) != Rational(n * (n - 4)) * sources::grad_S0(u))
        throw InternalError("source of (U,S) differs from N(N-4) S_0");
    return ds;
}

HomogeneousPoly grad_T_from(const BinaryQuantic& u, const HomogeneousPoly& uu, const HomogeneousPoly& t) {
    const int n = u.order();
    HomogeneousPoly dt = jacobian(uu, t);
    check_degree(dt, 4 * n - 14, "(U,T)");
    if (source(dt) != Rational(n * (n - 4)) * sources::grad_T0(u))
        throw InternalError("source of (U,T) differs from N(N-4) T_0");
    return dt;
}

}  // namespace

HomogeneousPoly hessian(const BinaryQuantic& u) {
    const int n = u.order();
    require_order(n, 2, "hessian");
    const HomogeneousPoly x = expand(u);
    const HomogeneousPoly upp = nth_partial(x, 2, 0);
    const HomogeneousPoly upq = nth_partial(x, 1, 1);
    const HomogeneousPoly uqq = nth_partial(x, 0, 2);
    HomogeneousPoly raw = upp * uqq - upq * upq;
    Integer k = n * (n - 1);
    HomogeneousPoly h = normalize(raw, k * k, u, 2, "H");
    check_degree(h, 2 * n - 4, "H");
    return h;
}

HomogeneousPoly covariant_G(const BinaryQuantic& u, const HomogeneousPoly& h) {
    const int n = u.order();
    require_order(n, 3, "covariant_G");
    if (h.degree() != 2 * n - 4)
        throw PreconditionError("covariant_G: H must have degree 2N-4");
    HomogeneousPoly g = normalize(jacobian(expand(u), h), Integer(n * (n - 2)), u, 3, "G");
    check_degree(g, 3 * n - 6, "G");
    return g;
}

Emanant4 emanant4(const BinaryQuantic& u) {
    require_order(u.order(), 4, "emanant4");
    const HomogeneousPoly x = expand(u);
    return Emanant4{nth_partial(x, 4, 0), nth_partial(x, 3, 1), nth_partial(x, 2, 2), nth_partial(x, 1, 3),
                    nth_partial(x, 0, 4)};
}

HomogeneousPoly covariant_S(const BinaryQuantic& u) {
    require_order(u.order(), 4, "covariant_S");
    return covariant_S_from(emanant4(u), u);
}

HomogeneousPoly covariant_T(const BinaryQuantic& u) {
    require_order(u.order(), 4, "covariant_T");
    return covariant_T_from(emanant4(u), u);
}

HomogeneousPoly grad_S(const BinaryQuantic& u) {
    require_order(u.order(), 5, "grad_S");
    return grad_S_from(u, expand(u), covariant_S(u));
}

HomogeneousPoly grad_T(const BinaryQuantic& u) {
    require_order(u.order(), 5, "grad_T");
    return grad_T_from(u, expand(u), covariant_T(u));
}

CovariantSet compute_covariants(const BinaryQuantic& u) {
    require_order(u.order(), 5, "compute_covariants");
    HomogeneousPoly uu = expand(u);
    HomogeneousPoly h = hessian(u);
    HomogeneousPoly g = covariant_G(u, h);
    Emanant4 e = emanant4(u);
    HomogeneousPoly s = covariant_S_from(e, u);
    HomogeneousPoly t = covariant_T_from(e, u);
    HomogeneousPoly ds = grad_S_from(u, uu, s);
    HomogeneousPoly dt = grad_T_from(u, uu, t);
    return CovariantSet{u, std::move(uu), std::move(h), std::move(g), std::move(s), std::move(t), std::move(ds),
                        std::move(dt)};
}

HomogeneousPoly syzygy_main(const CovariantSet& c) {
    const HomogeneousPoly u2 = c.u * c.u;
    return c.G * c.G + Rational(4) * pow(c.H, 3) + u2 * c.u * c.T - u2 * c.S * c.H;
}

HomogeneousPoly syzygy_main(const BinaryQuantic& u) {
    require_order(u.order(), 5, "syzygy_main");
    return syzygy_main(compute_covariants(u));
}

HomogeneousPoly syzygy_main_quartic(const BinaryQuantic& u) {
    if (u.order() != 4)
        throw PreconditionError("syzygy_main_quartic requires N = 4 (got N = " + std::to_string(u.order()) + ")");
    const HomogeneousPoly uu = expand(u);
    const HomogeneousPoly h = hessian(u);
    const HomogeneousPoly g = covariant_G(u, h);
    const HomogeneousPoly s = covariant_S(u);
    const HomogeneousPoly t = covariant_T(u);
    const HomogeneousPoly u2 = uu * uu;
    return g * g + Rational(4) * pow(h, 3) + u2 * uu * t - u2 * s * h;
}

HomogeneousPoly syzygy_switch(const CovariantSet& c) {
    const int n = c.U.order();
    return Rational(2 * (n - 2)) * c.dT - Rational(n) * jacobian(c.H, c.S);
}

HomogeneousPoly syzygy_switch(const BinaryQuantic& u) {
    require_order(u.order(), 5, "syzygy_switch");
    return syzygy_switch(compute_covariants(u));
}

HomogeneousPoly syzygy_three(const HomogeneousPoly& x, const HomogeneousPoly& y, const HomogeneousPoly& z) {
    // Terms with a constant factor vanish but may carry a clamped nominal
    // degree, so only nonzero terms are accumulated.
    HomogeneousPoly out = HomogeneousPoly::zero(std::max(0, x.degree() + y.degree() + z.degree() - 2));
    for (HomogeneousPoly term : {Rational(x.degree()) * (x * jacobian(y, z)),
                                 Rational(y.degree()) * (y * jacobian(z, x)),
                                 Rational(z.degree()) * (z * jacobian(x, y))}) {
        if (!term.is_zero())
            out += term;
    }
    return out;
}

HomogeneousPoly syzygy_gradient(const CovariantSet& c) {
    const int n = c.U.order();
    return Rational(n - 4) * (jacobian(c.u, c.H) * c.S) - Rational(n - 2) * (c.dS * c.H - c.dT * c.u);
}

HomogeneousPoly syzygy_gradient(const BinaryQuantic& u) {
    require_order(u.order(), 5, "syzygy_gradient");
    return syzygy_gradient(compute_covariants(u));
}

namespace sources {

Rational hessian(const BinaryQuantic& u) {
    require_order(u.order(), 2, "hessian source");
    const auto& a = u.a();
    return a[0] * a[2] - a[1] * a[1];
}

Rational hessian_second(const BinaryQuantic& u) {
    require_order(u.order(), 3, "hessian second coefficient");
    const auto& a = u.a();
    return Rational(u.order() - 2) * (a[0] * a[3] - a[1] * a[2]);
}

Rational covariant_G(const BinaryQuantic& u) {
    require_order(u.order(), 3, "G source");
    const auto& a = u.a();
    return a[0] * a[0] * a[3] - 3 * a[0] * a[1] * a[2] + 2 * a[1] * a[1] * a[1];
}

Rational covariant_S(const BinaryQuantic& u) {
    require_order(u.order(), 4, "S source");
    const auto& a = u.a();
    return a[0] * a[4] - 4 * a[1] * a[3] + 3 * a[2] * a[2];
}

Rational covariant_T(const BinaryQuantic& u) {
    require_order(u.order(), 4, "T source");
    const auto& a = u.a();
    return a[0] * a[2] * a[4] + 2 * a[1] * a[2] * a[3] - a[0] * a[3] * a[3] - a[1] * a[1] * a[4] -
           a[2] * a[2] * a[2];
}

Rational grad_S0(const BinaryQuantic& u) {
    require_order(u.order(), 5, "S_0");
    const auto& a = u.a();
    return a[0] * a[0] * a[5] - 5 * a[0] * a[1] * a[4] + 2 * a[0] * a[2] * a[3] + 8 * a[1] * a[1] * a[3] -
           6 * a[1] * a[2] * a[2];
}

Rational grad_T0(const BinaryQuantic& u) {
    require_order(u.order(), 5, "T_0");
    const auto& a = u.a();
    Rational r = a[0] * a[0] * a[2] * a[5];
    r -= a[0] * a[0] * a[3] * a[4];
    r -= a[0] * a[1] * a[1] * a[5];
    r -= 2 * a[0] * a[1] * a[2] * a[4];
    r += 4 * a[0] * a[1] * a[3] * a[3];
    r -= a[0] * a[2] * a[2] * a[3];
    r += 3 * a[1] * a[1] * a[1] * a[4];
    r -= 6 * a[1] * a[1] * a[2] * a[3];
    r += 3 * a[1] * a[2] * a[2] * a[2];
    return r;
}

}  // namespace sources

}  // namespace quantic
