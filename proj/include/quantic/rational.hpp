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

#ifndef QUANTIC_RATIONAL_HPP
#define QUANTIC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quantic {

// Coefficient field. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as every construction from parts goes
// through make_rational or parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "n", "n/d" and plain decimals such as "-0.125". Throws
// PreconditionError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// "n" when the denominator is 1, "n/d" otherwise.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

Integer binomial(unsigned n, unsigned k);

// Falling factorial n (n-1) ... (n-k+1).
Integer falling_factorial(long n, unsigned k);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace quantic

#endif
