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

#include "quantic/errors.hpp"
#include "quantic/harness.hpp"
#include "quantic/io.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace quantic;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("qh_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name, const std::string& contents = "") const {
        const auto p = (path / name).string();
        if (!contents.empty())
            io::write_file(p, contents);
        return p;
    }
};

const char* kQuinticJson = R"({"order": 5, "coefficients": ["1", "0", "0", "0", "0", "1"]})";
const char* kLeadJson = R"({"order": 5, "coefficients": ["0", "1", "0", "0", "0", "0"]})";

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_in_process(const RunConfig& c) {
    std::ostringstream out, err;
    const int code = run(c, out, err);
    return {code, out.str(), err.str()};
}

int shell(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("quantic JSON schema") {
    const BinaryQuantic u = io::parse_quantic(R"({"order": 2, "coefficients": ["1", "-2/3", "4"]})");
    CHECK(u.order() == 2);
    CHECK(u.a(1) == Rational(-2, 3));
    CHECK(io::parse_quantic(io::to_json(u).dump()) == u);
    CHECK_THROWS_AS(io::parse_quantic(R"({"order": 2, "coefficients": ["1", "2"]})"), PreconditionError);
    CHECK_THROWS_AS(io::parse_quantic(R"({"order": 2, "coefficients": ["1", "2", 0.5]})"), PreconditionError);
    CHECK_THROWS_AS(io::parse_quantic(R"({"coefficients": ["1"]})"), PreconditionError);
    CHECK_THROWS_WITH_AS(io::parse_quantic("{\"order\": 2,\n  \"coefficients\": [1, 2,, 3]}"),
                         doctest::Contains("line 2, column"), PreconditionError);
}

TEST_CASE("polynomial JSON and start points") {
    const HomogeneousPoly x(2, {Rational(1), Rational(-1, 2), Rational(0)});
    const json j = io::to_json(x);
    CHECK(j["degree"] == 2);
    CHECK(j["coefficients"] == json::array({"1", "-1/2", "0"}));
    CHECK(io::poly_from_json(j) == x);

    const auto pt = io::parse_point("1, 0.5");
    CHECK(pt.p == 1);
    CHECK(pt.q == Rational(1, 2));
    CHECK_THROWS_AS(io::parse_point("1"), PreconditionError);
    CHECK_THROWS_AS(io::parse_point("1,2,3"), PreconditionError);
    CHECK(io::format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("syzygy subcommand on p^5 + q^5") {
    TempDir tmp;
    RunConfig c;
    c.subcommand = Subcommand::syzygy;
    c.input_path = tmp.file("u.json", kQuinticJson);
    const Outcome o = run_in_process(c);
    CHECK(o.code == exit_code::ok);
    const json j = json::parse(o.out);
    CHECK(j["main"] == "zero");
    CHECK(j["switch"] == "zero");
    CHECK(j["three"] == "zero");
    CHECK(j["gradient"] == "zero");
}

TEST_CASE("covariants subcommand") {
    TempDir tmp;
    RunConfig c;
    c.subcommand = Subcommand::covariants;
    c.input_path = tmp.file("u.json", kQuinticJson);
    c.output_path = tmp.file("cov.json");
    CHECK(run_in_process(c).code == exit_code::ok);
    const json j = json::parse(io::read_file(*c.output_path));
    CHECK(j["covariants"]["H"]["degree"] == 6);
    CHECK(j["covariants"]["H"]["coefficients"] == json::array({"0", "0", "0", "1", "0", "0", "0"}));
    CHECK(j["covariants"]["S"]["coefficients"] == json::array({"0", "1", "0"}));
    CHECK(j["covariants"]["dS"]["coefficients"] == json::array({"5", "0", "0", "0", "0", "-5"}));
    CHECK(j["covariants"].size() == 6);

    // Order 3: default emission drops what the order cannot support...
    c.input_path = tmp.file("cubic.json", R"({"order": 3, "coefficients": ["1", "0", "0", "1"]})");
    c.output_path.reset();
    Outcome o = run_in_process(c);
    CHECK(o.code == exit_code::ok);
    CHECK(json::parse(o.out)["covariants"].size() == 2);

    // ...but asking for S explicitly is a precondition failure.
    c.emit = {"S"};
    o = run_in_process(c);
    CHECK(o.code == exit_code::usage);
    CHECK(o.err.find("N \xE2\x89\xA5 4") != std::string::npos);

    c.emit = {"X"};
    CHECK(run_in_process(c).code == exit_code::usage);
}

TEST_CASE("classify subcommand") {
    TempDir tmp;
    RunConfig c;
    c.subcommand = Subcommand::classify;
    c.input_path = tmp.file("u.json", kLeadJson);
    c.start = "1,1";
    Outcome o = run_in_process(c);
    REQUIRE(o.code == exit_code::ok);
    json j = json::parse(o.out);
    CHECK(j["category"] == "proper_elementary");
    CHECK(j["u_value"] == "5");
    CHECK(j["g2"] == "0");
    CHECK(j["g3"] == "0");
    CHECK(j["delta"] == "0");

    c.input_path = tmp.file("q.json", kQuinticJson);
    c.start = "1,0";
    j = json::parse(run_in_process(c).out);
    CHECK(j["category"] == "improper");
    CHECK(j["delta"].is_null());

    c.start.reset();
    CHECK(run_in_process(c).code == exit_code::usage);
}

TEST_CASE("flow subcommand writes the CSV and summary") {
    TempDir tmp;
    RunConfig c;
    c.subcommand = Subcommand::flow;
    c.input_path = tmp.file("u.json", kQuinticJson);
    c.start = "1,0.5";
    c.t_end = 0.01;
    c.dt = 1e-4;
    c.output_path = tmp.file("traj.csv");
    const Outcome o = run_in_process(c);
    REQUIRE(o.code == exit_code::ok);
    const std::string csv = io::read_file(*c.output_path);
    CHECK(csv.rfind("t,p,q,u,phi,phi_dot,g2,g3,residual\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 102);
    const json j = json::parse(o.out);
    for (const char* key : {"u_drift_max", "residual_max", "second_order_error_max", "proper", "lame_parameter"})
        CHECK(j.contains(key));
    CHECK(j["proper"] == false);
    CHECK(j["lame_parameter"].get<double>() == doctest::Approx(1.0 / 3.0));

    c.dt = -1.0;
    CHECK(run_in_process(c).code == exit_code::usage);
}

TEST_CASE("usage errors map to exit 1") {
    TempDir tmp;
    RunConfig c;
    c.subcommand = Subcommand::syzygy;
    c.input_path = tmp.file("missing.json");
    CHECK(run_in_process(c).code == exit_code::usage);

    c.input_path = tmp.file("bad.json", "{\"order\": 5,\n \"coefficients\": [}");
    const Outcome o = run_in_process(c);
    CHECK(o.code == exit_code::usage);
    CHECK(o.err.find("line 2") != std::string::npos);

    c.input_path = tmp.file("quartic.json", R"({"order": 4, "coefficients": ["1", "0", "0", "0", "1"]})");
    CHECK(run_in_process(c).code == exit_code::usage);
}

TEST_CASE("report covers every operation and is reproducible") {
    const json a = run_report(42, 5);
    CHECK(a["all_passed"] == true);
    std::vector<std::string> ops = a["operations"].get<std::vector<std::string>>();
    for (const auto& op : report_operations())
        CHECK_MESSAGE(std::find(ops.begin(), ops.end(), op) != ops.end(), "report skipped ", op);
    CHECK(a.dump() == run_report(42, 5).dump());
    CHECK(a["syzygy_sweep"]["9"]["main"] == 5);
}

TEST_CASE("qh binary: exit codes, seeds and determinism") {
    TempDir tmp;
    const std::string bin = QH_BINARY;
    const std::string u = tmp.file("u.json", kQuinticJson);
    const std::string cubic = tmp.file("c.json", R"({"order": 3, "coefficients": ["1", "0", "0", "1"]})");

    CHECK(shell(bin + " syzygy --in " + u + " > " + tmp.file("s.out")) == 0);
    CHECK(json::parse(io::read_file(tmp.file("s.out")))["main"] == "zero");

    CHECK(shell(bin + " covariants --in " + cubic + " --emit S 2> " + tmp.file("e.out")) == 1);
    CHECK(io::read_file(tmp.file("e.out")).find("N \xE2\x89\xA5 4") != std::string::npos);

    CHECK(shell(bin + " bogus 2> /dev/null") == 1);
    CHECK(shell(bin + " flow --in " + u + " --start 1,0.5 --method euler 2> /dev/null") == 1);

    const std::string r1 = tmp.file("r1.json"), r2 = tmp.file("r2.json"), r3 = tmp.file("r3.json");
    CHECK(shell(bin + " report --seed 42 --count 3 --out " + r1) == 0);
    CHECK(shell("QH_SEED=42 " + bin + " report --count 3 --out " + r2) == 0);
    CHECK(shell(bin + " report --count 3 --out " + r3) == 0);
    CHECK(io::read_file(r1) == io::read_file(r2));
    CHECK(json::parse(io::read_file(r1))["seed"] == 42);
    CHECK(json::parse(io::read_file(r3))["seed"] == kDefaultSeed);

    const std::string f1 = tmp.file("f1.csv"), f2 = tmp.file("f2.csv");
    const std::string flow = bin + " flow --in " + u + " --start 1,0.5 --t-end 0.01 --dt 1e-4 --method rk45_adaptive";
    CHECK(shell(flow + " --out " + f1 + " > /dev/null") == 0);
    CHECK(shell(flow + " --out " + f2 + " > /dev/null") == 0);
    CHECK(io::read_file(f1) == io::read_file(f2));
}
