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

#include "quantic/binary_quantic.hpp"

#include "quantic/errors.hpp"

namespace quantic {

BinaryQuantic::BinaryQuantic(int order, std::vector<Rational> a) : a_(std::move(a)) {
    if (order < 1)
        throw PreconditionError("quantic order must be at least 1 (got " + std::to_string(order) + ")");
    if (a_.size() != static_cast<std::size_t>(order) + 1)
        throw PreconditionError("quantic of order " + std::to_string(order) + " needs " +
                                std::to_string(order + 1) + " coefficients, got " + std::to_string(a_.size()));
}

Integer BinaryQuantic::denominator_lcm() const {
    Integer l = 1;
    for (const auto& c : a_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

HomogeneousPoly expand(const BinaryQuantic& u) {
    const int n = u.order();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = u.a(k) * Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    return HomogeneousPoly(n, std::move(c));
}

BinaryQuantic contract(const HomogeneousPoly& x) {
    const int n = x.degree();
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        a[static_cast<std::size_t>(k)] = x[k] / Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    return BinaryQuantic(n, std::move(a));
}

BinaryQuantic swap_variables(const BinaryQuantic& u) {
    return BinaryQuantic(u.order(), std::vector<Rational>(u.a().rbegin(), u.a().rend()));
}

}  // namespace quantic
