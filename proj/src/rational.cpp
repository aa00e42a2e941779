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

#include "quantic/rational.hpp"

#include "quantic/errors.hpp"

#include <cctype>

namespace quantic {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view strip_sign(std::string_view s, bool& negative) {
    negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    return s;
}

[[noreturn]] void bad(std::string_view text) {
    throw PreconditionError("not a rational number: \"" + std::string(text) + "\"");
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw PreconditionError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    bool negative = false;
    std::string_view body = strip_sign(text, negative);

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den))
            bad(text);
        value = make_rational(Integer(std::string(num), 10), Integer(std::string(den), 10));
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !is_digits(whole)) ||
            (!frac.empty() && !is_digits(frac)))
            bad(text);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        value = make_rational(digits, scale);
    } else {
        if (!is_digits(body))
            bad(text);
        value = Rational(Integer(std::string(body), 10));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

double to_double(const Rational& r) {
    return r.get_d();
}

Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer falling_factorial(long n, unsigned k) {
    Integer out = 1;
    for (unsigned i = 0; i < k; ++i)
        out *= n - static_cast<long>(i);
    return out;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational out = 1;
    for (unsigned i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

}  // namespace quantic
