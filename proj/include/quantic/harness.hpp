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

#ifndef QUANTIC_HARNESS_HPP
#define QUANTIC_HARNESS_HPP

#include "quantic/binary_quantic.hpp"
#include "quantic/flow.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace quantic {

inline constexpr std::uint64_t kDefaultSeed = 20150509;

enum class Subcommand { covariants, syzygy, classify, flow, report };

struct RunConfig {
    Subcommand subcommand = Subcommand::report;
    std::string input_path;
    std::optional<std::string> output_path;
    std::optional<std::string> start;
    std::optional<double> t_end;
    std::optional<double> dt;
    Method method = Method::rk4;
    int stride = 1;
    // Recognised keys: "proper" (properness monitor), "rtol", "atol".
    std::map<std::string, double> tolerances;
    std::uint64_t seed = kDefaultSeed;
    // covariants: which of H, G, S, T, dS, dT to emit; empty means every
    // covariant whose order precondition holds.
    std::vector<std::string> emit;
    // report: random instances per order in the property sweeps.
    int sweep_count = 100;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int verification = 2;
}  // namespace exit_code

// Seed used when none is given on the command line: QH_SEED if set, else
// kDefaultSeed.
std::uint64_t default_seed();

// Throws PreconditionError if a numeric field is out of range.
void validate(const RunConfig& config);

// Dispatches one subcommand. Primary output goes to `out` unless an output
// path is configured; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Random quantic with integer coefficients drawn uniformly from [lo, hi].
BinaryQuantic random_quantic(std::mt19937_64& rng, int order, int lo = -5, int hi = 5);
// Random homogeneous polynomial of the given degree, same coefficient range.
HomogeneousPoly random_poly(std::mt19937_64& rng, int degree, int lo = -5, int hi = 5);

// Full fixture and property suite. "all_passed" is false iff some check
// failed; "operations" lists every library operation exercised.
nlohmann::json run_report(std::uint64_t seed, int sweep_count);

// Every operation run_report is expected to exercise.
const std::vector<std::string>& report_operations();

}  // namespace quantic

#endif
