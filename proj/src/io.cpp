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

#include "quantic/io.hpp"

#include "quantic/errors.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace quantic::io {

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
    // nlohmann reports the 1-based byte index just past the offending char.
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Rational rational_from_json(const json& j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(j.dump(), 10));
    throw PreconditionError("coefficient must be a rational string such as \"-2/3\", got " + j.dump());
}

}  // namespace

BinaryQuantic parse_quantic(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw PreconditionError("malformed JSON at " + line_column(text, e.byte) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("coefficients"))
        throw PreconditionError("quantic JSON needs \"order\" and \"coefficients\"");
    if (!j["order"].is_number_integer())
        throw PreconditionError("\"order\" must be an integer");
    const int order = j["order"].get<int>();
    const json& cs = j["coefficients"];
    if (!cs.is_array())
        throw PreconditionError("\"coefficients\" must be an array");
    std::vector<Rational> a;
    a.reserve(cs.size());
    for (const auto& c : cs)
        a.push_back(rational_from_json(c));
    return BinaryQuantic(order, std::move(a));
}

BinaryQuantic read_quantic(const std::string& path) {
    return parse_quantic(read_file(path));
}

json to_json(const BinaryQuantic& u) {
    json cs = json::array();
    for (const auto& c : u.a())
        cs.push_back(to_string(c));
    return json{{"order", u.order()}, {"coefficients", cs}};
}

json to_json(const HomogeneousPoly& x) {
    json cs = json::array();
    for (const auto& c : x.coeffs())
        cs.push_back(to_string(c));
    return json{{"degree", x.degree()}, {"coefficients", cs}};
}

HomogeneousPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coefficients"))
        throw PreconditionError("polynomial JSON needs \"degree\" and \"coefficients\"");
    std::vector<Rational> cs;
    for (const auto& c : j["coefficients"])
        cs.push_back(rational_from_json(c));
    return HomogeneousPoly(j["degree"].get<int>(), std::move(cs));
}

json to_json(const Classification& c) {
    json j;
    j["category"] = std::string(to_string(c.category));
    j["u_value"] = to_string(c.u_value);
    j["g2"] = to_string(c.g2);
    j["g3"] = to_string(c.g3);
    j["delta"] = c.delta ? json(to_string(*c.delta)) : json(nullptr);
    j["proper"] = c.proper;
    j["s_constant"] = std::string(to_string(c.s_constant));
    j["phi_nonconstant"] = c.phi_nonconstant;
    j["lame_parameter"] = c.lame_parameter;
    return j;
}

Point<Rational> parse_point(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
        throw PreconditionError("start point must look like \"p,q\", got \"" + std::string(text) + "\"");
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ')
            s.remove_suffix(1);
        return s;
    };
    return {parse_rational(trim(text.substr(0, comma))), parse_rational(trim(text.substr(comma + 1)))};
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& os, const FlowReport& report) {
    os << "t,p,q,u,phi,phi_dot,g2,g3,residual\n";
    for (const auto& s : report.samples) {
        os << format_double(s.t) << ',' << format_double(s.p) << ',' << format_double(s.q) << ','
           << format_double(s.u) << ',' << format_double(s.phi) << ',' << format_double(s.phi_dot_analytic) << ','
           << format_double(s.g2) << ',' << format_double(s.g3) << ',' << format_double(s.weierstrass_residual)
           << '\n';
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw PreconditionError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw PreconditionError("cannot write " + path);
    out << contents;
    if (!out)
        throw PreconditionError("write failed for " + path);
}

}  // namespace quantic::io
