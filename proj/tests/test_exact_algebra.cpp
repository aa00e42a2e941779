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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "quantic/binary_quantic.hpp"
#include "quantic/errors.hpp"
#include "quantic/harness.hpp"
#include "quantic/homogeneous_poly.hpp"
#include "quantic/rational.hpp"

#include <random>

using namespace quantic;

namespace {

HomogeneousPoly poly(int degree, std::initializer_list<int> cs) {
    std::vector<Rational> v;
    for (int c : cs)
        v.emplace_back(c);
    return HomogeneousPoly(degree, std::move(v));
}

BinaryQuantic quantic_of(std::initializer_list<int> cs) {
    std::vector<Rational> v;
    for (int c : cs)
        v.emplace_back(c);
    const int n = static_cast<int>(v.size()) - 1;
    return BinaryQuantic(n, std::move(v));
}

const HomogeneousPoly P = HomogeneousPoly::p();
const HomogeneousPoly Q = HomogeneousPoly::q();

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("-2/3") == Rational(-2, 3));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("0.5") == Rational(1, 2));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("+3") == 3);
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(Rational(0)) == "0");

    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_rational(""), PreconditionError);
    CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("1/-2"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("1e3"), PreconditionError);
}

TEST_CASE("rational invariants: lowest terms, positive denominator, zero is 0/1") {
    Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    Rational z = make_rational(0, -7);
    CHECK(z.get_num() == 0);
    CHECK(z.get_den() == 1);
    CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);
}

TEST_CASE("expand uses binomial convention") {
    CHECK(expand(quantic_of({1, 0, 0, 0, 0, 1})) == poly(5, {1, 0, 0, 0, 0, 1}));
    CHECK(expand(quantic_of({0, 1, 0, 0, 0, 0})) == poly(5, {0, 5, 0, 0, 0, 0}));
    CHECK(expand(quantic_of({1, 1, 1})) == poly(2, {1, 2, 1}));
    CHECK(expand(quantic_of({1, 1, 1})) == pow(P + Q, 2));

    const BinaryQuantic u = quantic_of({2, -1, 3, 0, 4, -5, 1});
    CHECK(oracle::equals(oracle::expand(u), expand(u)));
    CHECK(source(expand(u)) == u.a(0));
}

TEST_CASE("quantic construction contract") {
    CHECK_THROWS_AS(BinaryQuantic(0, {Rational(1)}), PreconditionError);
    CHECK_THROWS_AS(BinaryQuantic(3, {Rational(1), Rational(2)}), PreconditionError);
    CHECK_THROWS_AS(HomogeneousPoly(2, {Rational(1)}), PreconditionError);
    CHECK_THROWS_AS(HomogeneousPoly(-1), PreconditionError);
}

TEST_CASE("partials") {
    const HomogeneousPoly x = poly(5, {1, 0, 0, 0, 0, 1});  // p^5 + q^5
    CHECK(partial_p(x) == poly(4, {5, 0, 0, 0, 0}));
    CHECK(partial_q(poly(5, {0, 5, 0, 0, 0, 0})) == poly(4, {5, 0, 0, 0, 0}));

    const HomogeneousPoly m = HomogeneousPoly::monomial(5, 2);  // p^3 q^2
    CHECK(P * partial_p(m) + Q * partial_q(m) == poly(5, {0, 0, 5, 0, 0, 0}));

    // Degree 0 differentiates to the zero polynomial of degree 0.
    const HomogeneousPoly c = HomogeneousPoly::constant(7);
    CHECK(partial_p(c).is_zero());
    CHECK(partial_p(c).degree() == 0);
    CHECK(partial_q(c).degree() == 0);
}

TEST_CASE("ring operations") {
    CHECK((P + Q) * (P - Q) == poly(2, {1, 0, -1}));
    CHECK(pow(P * Q, 3) == HomogeneousPoly::monomial(6, 3));
    CHECK(add(P * P, Q * P) == poly(2, {1, 1, 0}));
    CHECK(scale(P + Q, Rational(1, 2)) == poly(1, {1, 1}) * Rational(1, 2));
    CHECK(mul(P, Q).degree() == 2);
    CHECK(pow(P + Q, 0) == HomogeneousPoly::constant(1));
    CHECK_THROWS_AS(add(P * P, Q), DegreeMismatch);
}

TEST_CASE("zero polynomials compare equal across nominal degrees") {
    CHECK(HomogeneousPoly::zero(3) == HomogeneousPoly::zero(7));
    CHECK_FALSE(HomogeneousPoly::zero(3) == P);
    CHECK_FALSE(P == HomogeneousPoly::monomial(2, 0));
}

TEST_CASE("jacobian and poisson") {
    CHECK(jacobian(P, Q) == HomogeneousPoly::constant(1));
    CHECK(jacobian(P, Q).degree() == 0);

    const HomogeneousPoly u = poly(5, {1, 0, 0, 0, 0, 1});
    CHECK(jacobian(u, u).is_zero());
    CHECK(poisson(u, u).is_zero());

    const HomogeneousPoly m = HomogeneousPoly::monomial(6, 3);  // p^3 q^3
    const HomogeneousPoly expected = poly(9, {0, 0, 15, 0, 0, 0, 0, -15, 0, 0});
    CHECK(jacobian(u, m) == expected);
    CHECK(oracle::equals(oracle::jac(oracle::from_dense(u), oracle::from_dense(m)), expected));

    CHECK(poisson(Q, P) == HomogeneousPoly::constant(1));

    // Degree-0 operands give zero.
    CHECK(jacobian(HomogeneousPoly::constant(3), u).is_zero());
    CHECK(jacobian(HomogeneousPoly::constant(3), u).degree() == 3);
}

TEST_CASE("eval and source") {
    const HomogeneousPoly u = poly(5, {1, 0, 0, 0, 0, 1});
    const HomogeneousPoly m = HomogeneousPoly::monomial(6, 3);
    CHECK(eval(u, Rational(1), Rational(1)) == 2);
    CHECK(eval(m, Rational(1), Rational(1)) == 1);
    CHECK(eval(u, Rational(2), Rational(1)) == 33);
    CHECK(eval(u, 2.0, 1.0) == doctest::Approx(33.0));
    CHECK(eval(u, 0.0, 0.0) == 0.0);
    CHECK(eval(HomogeneousPoly::constant(4), 0.0, 0.0) == 4.0);
    CHECK(eval(m, -0.5, 3.0) == doctest::Approx(-0.125 * 27.0));

    CHECK(source(m) == 0);
    CHECK(source(HomogeneousPoly::monomial(9, 0, 2)) == 2);
}

TEST_CASE("printing") {
    CHECK(to_string(poly(5, {1, 0, 0, 0, 0, 1})) == "p^5 + q^5");
    CHECK(to_string(poly(5, {0, 5, 0, 0, 0, 0})) == "5*p^4*q");
    CHECK(to_string(poly(2, {0, 1, 0})) == "p*q");
    CHECK(to_string(poly(6, {-1, 0, 0, 0, 0, 0, 0})) == "-p^6");
    CHECK(to_string(HomogeneousPoly::zero(4)) == "0");
    CHECK(to_string(HomogeneousPoly::constant(Rational(-3, 2))) == "-3/2");
}

// Property sweeps on random instances.

TEST_CASE("ring axioms hold exactly on random triples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int i = 0; i < 100; ++i) {
        const int d = deg(rng);
        const HomogeneousPoly x = random_poly(rng, d);
        const HomogeneousPoly y = random_poly(rng, d);
        const HomogeneousPoly z = random_poly(rng, deg(rng));
        const HomogeneousPoly w = random_poly(rng, deg(rng));
        CHECK((x * z) * w == x * (z * w));
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x + y == y + x);
        CHECK(x * z == z * x);
        CHECK(oracle::equals(oracle::from_dense(x) * oracle::from_dense(z), x * z));
    }
}

TEST_CASE("Euler identity on 200 random polynomials") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> deg(0, 12);
    for (int i = 0; i < 200; ++i) {
        const HomogeneousPoly x = random_poly(rng, deg(rng));
        const HomogeneousPoly lhs = x.degree() == 0 ? HomogeneousPoly::zero(0)
                                                    : P * partial_p(x) + Q * partial_q(x);
        CHECK(lhs == Rational(x.degree()) * x);
    }
}

TEST_CASE("jacobian antisymmetry and Leibniz rule") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int i = 0; i < 100; ++i) {
        const HomogeneousPoly x = random_poly(rng, deg(rng));
        const HomogeneousPoly y = random_poly(rng, deg(rng));
        const HomogeneousPoly z = random_poly(rng, deg(rng));
        CHECK(jacobian(x, y) == -jacobian(y, x));
        CHECK(jacobian(x, x).is_zero());
        CHECK(jacobian(x, y * z) == y * jacobian(x, z) + z * jacobian(x, y));
        CHECK((poisson(x, y) + poisson(y, x)).is_zero());
        CHECK(oracle::equals(oracle::jac(oracle::from_dense(x), oracle::from_dense(y)), jacobian(x, y)));
    }
}

TEST_CASE("evaluation is homogeneous") {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> deg(0, 9);
    std::uniform_int_distribution<int> small(-7, 7);
    for (int i = 0; i < 100; ++i) {
        const HomogeneousPoly x = random_poly(rng, deg(rng));
        const Rational p(small(rng), 3);
        const Rational q(small(rng), 5);
        const Rational lam(small(rng), 2);
        CHECK(eval(x, lam * p, lam * q) == pow(lam, static_cast<unsigned>(x.degree())) * eval(x, p, q));
    }
}

TEST_CASE("expand/contract round trip is the identity") {
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> ord(1, 12);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    for (int i = 0; i < 100; ++i) {
        const int n = ord(rng);
        std::vector<Rational> a;
        for (int k = 0; k <= n; ++k)
            a.push_back(make_rational(num(rng), den(rng)));
        const BinaryQuantic u(n, a);
        CHECK(contract(expand(u)) == u);
    }
}
