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

#ifndef QUANTIC_BINARY_QUANTIC_HPP
#define QUANTIC_BINARY_QUANTIC_HPP

#include "quantic/homogeneous_poly.hpp"
#include "quantic/rational.hpp"

#include <vector>

namespace quantic {

/// Binary quantic (a_0, ..., a_N)(p, q)^N = sum_n binom(N, n) a_n p^(N-n) q^n.
class BinaryQuantic {
  public:
    // Needs N >= 1 and exactly N+1 coefficients.
    BinaryQuantic(int order, std::vector<Rational> a);

    int order() const { return static_cast<int>(a_.size()) - 1; }
    const std::vector<Rational>& a() const { return a_; }
    const Rational& a(int n) const { return a_[static_cast<std::size_t>(n)]; }

    // Least common multiple of the coefficient denominators.
    Integer denominator_lcm() const;

    friend bool operator==(const BinaryQuantic&, const BinaryQuantic&) = default;

  private:
    std::vector<Rational> a_;
};

HomogeneousPoly expand(const BinaryQuantic& u);

// Inverse of expand: a_n = c_n / binom(N, n). Requires degree >= 1.
BinaryQuantic contract(const HomogeneousPoly& x);

// U(q, p), i.e. the a-vector reversed.
BinaryQuantic swap_variables(const BinaryQuantic& u);

}  // namespace quantic

#endif
