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

#ifndef QUANTIC_IO_HPP
#define QUANTIC_IO_HPP

#include "quantic/binary_quantic.hpp"
#include "quantic/flow.hpp"
#include "quantic/homogeneous_poly.hpp"
#include "quantic/weierstrass.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace quantic::io {

using nlohmann::json;

// {"order": N, "coefficients": ["1", "-2/3", ...]} with exactly N+1
// binomial-convention entries. Malformed JSON reports line and column.
BinaryQuantic parse_quantic(std::string_view text);
BinaryQuantic read_quantic(const std::string& path);
json to_json(const BinaryQuantic& u);

// {"degree": d, "coefficients": [c_0, ..., c_d]} with raw coefficients.
json to_json(const HomogeneousPoly& x);
HomogeneousPoly poly_from_json(const json& j);

json to_json(const Classification& c);

// "p,q" with each component in parse_rational syntax.
Point<Rational> parse_point(std::string_view text);

// t,p,q,u,phi,phi_dot,g2,g3,residual with 17 significant digits.
void write_csv(std::ostream& os, const FlowReport& report);

std::string format_double(double x);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace quantic::io

#endif
