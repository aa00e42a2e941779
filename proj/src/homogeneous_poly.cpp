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

#include "quantic/homogeneous_poly.hpp"

#include "quantic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace quantic {

HomogeneousPoly::HomogeneousPoly(int degree) : degree_(degree) {
    if (degree < 0)
        throw PreconditionError("homogeneous polynomial with negative degree");
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
}

HomogeneousPoly::HomogeneousPoly(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0)
        throw PreconditionError("homogeneous polynomial with negative degree");
    if (coeffs_.size() != static_cast<std::size_t>(degree) + 1)
        throw PreconditionError("degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
}

HomogeneousPoly HomogeneousPoly::constant(const Rational& c) {
    return HomogeneousPoly(0, {c});
}

HomogeneousPoly HomogeneousPoly::monomial(int degree, int k, const Rational& c) {
    if (k < 0 || k > degree)
        throw PreconditionError("monomial exponent out of range");
    HomogeneousPoly out(degree);
    out.coeffs_[static_cast<std::size_t>(k)] = c;
    return out;
}

bool HomogeneousPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

HomogeneousPoly HomogeneousPoly::operator-() const {
    HomogeneousPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& other) {
    if (other.degree_ != degree_)
        throw DegreeMismatch("add: degree " + std::to_string(degree_) + " vs " + std::to_string(other.degree_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

HomogeneousPoly& HomogeneousPoly::operator-=(const HomogeneousPoly& other) {
    if (other.degree_ != degree_)
        throw DegreeMismatch("subtract: degree " + std::to_string(degree_) + " vs " +
                             std::to_string(other.degree_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    return *this;
}

HomogeneousPoly& HomogeneousPoly::operator*=(const Rational& r) {
    for (auto& c : coeffs_)
        c *= r;
    return *this;
}

bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) {
    a += b;
    return a;
}

HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) {
    a -= b;
    return a;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    const int d = a.degree() + b.degree();
    std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));
    Rational term;
    for (int i = 0; i <= a.degree(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (int j = 0; j <= b.degree(); ++j) {
            if (sgn(b[j]) == 0)
                continue;
            mpq_mul(term.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
            out[static_cast<std::size_t>(i + j)] += term;
        }
    }
    return HomogeneousPoly(d, std::move(out));
}

HomogeneousPoly operator*(HomogeneousPoly a, const Rational& r) {
    a *= r;
    return a;
}

HomogeneousPoly operator*(const Rational& r, HomogeneousPoly a) {
    a *= r;
    return a;
}

HomogeneousPoly add(const HomogeneousPoly& x, const HomogeneousPoly& y) {
    return x + y;
}

HomogeneousPoly scale(const HomogeneousPoly& x, const Rational& r) {
    return x * r;
}

HomogeneousPoly mul(const HomogeneousPoly& x, const HomogeneousPoly& y) {
    return x * y;
}

HomogeneousPoly pow(const HomogeneousPoly& x, unsigned k) {
    HomogeneousPoly out = HomogeneousPoly::constant(1);
    HomogeneousPoly base = x;
    while (k != 0) {
        if (k & 1U)
            out = out * base;
        k >>= 1U;
        if (k != 0)
            base = base * base;
    }
    return out;
}

// d/dp of c_k p^(d-k) q^k is (d-k) c_k p^(d-1-k) q^k.
HomogeneousPoly partial_p(const HomogeneousPoly& x) {
    const int d = x.degree();
    if (d == 0)
        return HomogeneousPoly::zero(0);
    std::vector<Rational> out(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        out[static_cast<std::size_t>(k)] = x[k] * (d - k);
    return HomogeneousPoly(d - 1, std::move(out));
}

// d/dq of c_k p^(d-k) q^k is k c_k p^(d-k) q^(k-1).
HomogeneousPoly partial_q(const HomogeneousPoly& x) {
    const int d = x.degree();
    if (d == 0)
        return HomogeneousPoly::zero(0);
    std::vector<Rational> out(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k)
        out[static_cast<std::size_t>(k - 1)] = x[k] * k;
    return HomogeneousPoly(d - 1, std::move(out));
}

HomogeneousPoly jacobian(const HomogeneousPoly& x, const HomogeneousPoly& y) {
    if (x.degree() == 0 || y.degree() == 0)
        return HomogeneousPoly::zero(std::max(0, x.degree() + y.degree() - 2));
    return partial_p(x) * partial_q(y) - partial_q(x) * partial_p(y);
}

HomogeneousPoly poisson(const HomogeneousPoly& w, const HomogeneousPoly& z) {
    return jacobian(z, w);
}

Rational eval(const HomogeneousPoly& x, const Rational& p, const Rational& q) {
    // Homogeneous Horner in q with p-powers accumulated from the top term.
    const int d = x.degree();
    Rational acc = 0;
    Rational ppow = 1;
    for (int k = d; k >= 0; --k) {
        acc += x[k] * ppow * pow(q, static_cast<unsigned>(k));
        ppow *= p;
    }
    return acc;
}

double eval(const HomogeneousPoly& x, double p, double q) {
    return NumericPoly(x)(p, q);
}

Rational source(const HomogeneousPoly& x) {
    return x[0];
}

HomogeneousPoly swap_variables(const HomogeneousPoly& x) {
    std::vector<Rational> out(x.coeffs().rbegin(), x.coeffs().rend());
    return HomogeneousPoly(x.degree(), std::move(out));
}

std::string to_string(const HomogeneousPoly& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HomogeneousPoly& x) {
    const int d = x.degree();
    bool first = true;
    for (int k = 0; k <= d; ++k) {
        const Rational& c = x[k];
        if (sgn(c) == 0)
            continue;
        const int pe = d - k;
        const int qe = k;
        Rational mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == 1;
        if (!unit || (pe == 0 && qe == 0))
            os << mag.get_str();
        auto var = [&](const char* name, int e, bool need_star) {
            if (e == 0)
                return;
            if (need_star)
                os << '*';
            os << name;
            if (e > 1)
                os << '^' << e;
        };
        var("p", pe, !unit);
        var("q", qe, !unit || pe > 0);
    }
    if (first)
        os << '0';
    return os;
}

NumericPoly::NumericPoly(const HomogeneousPoly& x) : degree_(x.degree()) {
    coeffs_.clear();
    coeffs_.reserve(static_cast<std::size_t>(degree_) + 1);
    for (const auto& c : x.coeffs())
        coeffs_.push_back(to_double(c));
}

double NumericPoly::operator()(double p, double q) const {
    // Horner on whichever ratio has magnitude <= 1 keeps the partial sums tame.
    const int d = degree_;
    if (std::abs(p) >= std::abs(q)) {
        if (p == 0.0)
            return d == 0 ? coeffs_[0] : 0.0;
        const double r = q / p;
        double acc = 0.0;
        for (int k = d; k >= 0; --k)
            acc = acc * r + coeffs_[static_cast<std::size_t>(k)];
        return acc * std::pow(p, d);
    }
    const double r = p / q;
    double acc = 0.0;
    for (int k = 0; k <= d; ++k)
        acc = acc * r + coeffs_[static_cast<std::size_t>(k)];
    return acc * std::pow(q, d);
}

}  // namespace quantic
