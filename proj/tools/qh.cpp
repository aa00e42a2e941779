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

// qh: covariants, syzygies, Weierstrass classification and Hamilton flow
// for binary quantics.

#include "quantic/errors.hpp"
#include "quantic/harness.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace quantic;

    CLI::App app{"Covariants, syzygies and Hamilton flow of binary quantics"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::optional<std::uint64_t> seed;
    std::string method = "rk4";
    double proper_tol = 1e-8;
    double rtol = 1e-10;
    double atol = 1e-12;

    auto* cov = app.add_subcommand("covariants", "Compute H, G, S, T, (U,S), (U,T)");
    cov->add_option("--in", cfg.input_path, "Quantic JSON")->required();
    cov->add_option("--out", cfg.output_path, "Output JSON (default stdout)");
    cov->add_option("--emit", cfg.emit, "Subset of H G S T dS dT")->delimiter(',');

    auto* syz = app.add_subcommand("syzygy", "Check the four syzygies exactly");
    syz->add_option("--in", cfg.input_path, "Quantic JSON")->required();
    syz->add_option("--out", cfg.output_path, "Output JSON (default stdout)");

    auto* cls = app.add_subcommand("classify", "Classify the Weierstrass equation along a Hamilton curve");
    cls->add_option("--in", cfg.input_path, "Quantic JSON")->required();
    cls->add_option("--start", cfg.start, "Start point \"p,q\"")->required();
    cls->add_option("--out", cfg.output_path, "Output JSON (default stdout)");

    auto* flow = app.add_subcommand("flow", "Integrate the Hamilton flow and monitor invariants");
    flow->add_option("--in", cfg.input_path, "Quantic JSON")->required();
    flow->add_option("--start", cfg.start, "Start point \"p,q\"")->required();
    flow->add_option("--t-end", cfg.t_end, "End time (default 0.1)");
    flow->add_option("--dt", cfg.dt, "Step or output spacing (default 1e-4)");
    flow->add_option("--method", method, "rk4 or rk45_adaptive")->check(CLI::IsMember({"rk4", "rk45_adaptive"}));
    flow->add_option("--stride", cfg.stride, "Record every k-th step");
    flow->add_option("--rtol", rtol, "Adaptive relative tolerance");
    flow->add_option("--atol", atol, "Adaptive absolute tolerance");
    flow->add_option("--proper-tol", proper_tol, "Properness monitor tolerance");
    flow->add_option("--out", cfg.output_path, "Trajectory CSV");

    auto* rep = app.add_subcommand("report", "Run the full fixture and property suite");
    rep->add_option("--seed", seed, "RNG seed (default QH_SEED or built-in)");
    rep->add_option("--count", cfg.sweep_count, "Random quantics per order");
    rep->add_option("--out", cfg.output_path, "Summary JSON (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (app.got_subcommand(cov))
            cfg.subcommand = Subcommand::covariants;
        else if (app.got_subcommand(syz))
            cfg.subcommand = Subcommand::syzygy;
        else if (app.got_subcommand(cls))
            cfg.subcommand = Subcommand::classify;
        else if (app.got_subcommand(flow))
            cfg.subcommand = Subcommand::flow;
        else
            cfg.subcommand = Subcommand::report;
        cfg.method = parse_method(method);
        cfg.tolerances = {{"proper", proper_tol}, {"rtol", rtol}, {"atol", atol}};
        cfg.seed = seed.value_or(default_seed());
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    return run(cfg, std::cout, std::cerr);
}
