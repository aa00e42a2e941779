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

#include "quantic/harness.hpp"

#include "quantic/covariants.hpp"
#include "quantic/errors.hpp"
#include "quantic/io.hpp"
#include "quantic/weierstrass.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>

namespace quantic {

using nlohmann::json;

namespace {

struct CovariantSpec {
    const char* name;
    int min_order;
};

constexpr CovariantSpec kCovariants[] = {
    {"H", 2}, {"G", 3}, {"S", 4}, {"T", 4}, {"dS", 5}, {"dT", 5},
};

int min_order_of(const std::string& name) {
    for (const auto& c : kCovariants)
        if (name == c.name)
            return c.min_order;
    throw PreconditionError("unknown covariant \"" + name + "\" (expected H, G, S, T, dS or dT)");
}

HomogeneousPoly compute_named(const BinaryQuantic& u, const std::string& name) {
    if (name == "H")
        return hessian(u);
    if (name == "G")
        return covariant_G(u, hessian(u));
    if (name == "S")
        return covariant_S(u);
    if (name == "T")
        return covariant_T(u);
    if (name == "dS")
        return grad_S(u);
    return grad_T(u);
}

double tolerance(const RunConfig& c, const std::string& key, double fallback) {
    auto it = c.tolerances.find(key);
    return it == c.tolerances.end() ? fallback : it->second;
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
    if (c.output_path)
        io::write_file(*c.output_path, text);
    else
        out << text;
}

int run_covariants(const RunConfig& c, std::ostream& out) {
    const BinaryQuantic u = io::read_quantic(c.input_path);
    std::vector<std::string> names = c.emit;
    if (names.empty()) {
        for (const auto& spec : kCovariants)
            if (u.order() >= spec.min_order)
                names.emplace_back(spec.name);
    }
    json covs = json::object();
    for (const auto& name : names) {
        require_order(u.order(), min_order_of(name), "covariant " + name);
        covs[name] = io::to_json(compute_named(u, name));
    }
    json j = io::to_json(u);
    j["covariants"] = covs;
    emit(c, out, j.dump(2) + "\n");
    return exit_code::ok;
}

int run_syzygy(const RunConfig& c, std::ostream& out) {
    const BinaryQuantic u = io::read_quantic(c.input_path);
    require_order(u.order(), 5, "syzygy");
    const CovariantSet cov = compute_covariants(u);
    auto verdict = [](const HomogeneousPoly& r) { return r.is_zero() ? "zero" : "nonzero"; };
    const HomogeneousPoly main = syzygy_main(cov);
    const HomogeneousPoly sw = syzygy_switch(cov);
    const HomogeneousPoly three = syzygy_three(cov.H, cov.S, cov.u);
    const HomogeneousPoly grad = syzygy_gradient(cov);
    json j;
    j["order"] = u.order();
    j["main"] = verdict(main);
    j["switch"] = verdict(sw);
    j["three"] = verdict(three);
    j["gradient"] = verdict(grad);
    emit(c, out, j.dump(2) + "\n");
    const bool ok = main.is_zero() && sw.is_zero() && three.is_zero() && grad.is_zero();
    return ok ? exit_code::ok : exit_code::verification;
}

int run_classify(const RunConfig& c, std::ostream& out) {
    if (!c.start)
        throw PreconditionError("classify requires --start \"p,q\"");
    const BinaryQuantic u = io::read_quantic(c.input_path);
    const Classification cls = classify(u, io::parse_point(*c.start));
    json j = io::to_json(cls);
    j["order"] = u.order();
    emit(c, out, j.dump(2) + "\n");
    return exit_code::ok;
}

int run_flow(const RunConfig& c, std::ostream& out) {
    if (!c.start)
        throw PreconditionError("flow requires --start \"p,q\"");
    const BinaryQuantic u = io::read_quantic(c.input_path);
    const Point<Rational> start = io::parse_point(*c.start);
    FlowOptions opts;
    opts.t_end = c.t_end.value_or(opts.t_end);
    opts.dt = c.dt.value_or(opts.dt);
    opts.method = c.method;
    opts.stride = c.stride;
    opts.rtol = tolerance(c, "rtol", opts.rtol);
    opts.atol = tolerance(c, "atol", opts.atol);
    const FlowReport report = integrate(u, {to_double(start.p), to_double(start.q)}, opts);

    if (c.output_path) {
        std::ostringstream csv;
        io::write_csv(csv, report);
        io::write_file(*c.output_path, csv.str());
    }
    json j;
    j["u_drift_max"] = report.u_drift_max;
    j["residual_max"] = report.residual_max;
    j["second_order_error_max"] = report.second_order_error_max;
    j["fd_consistency_error"] = report.fd_consistency_error;
    j["proper"] = monitor_properness(report, tolerance(c, "proper", 1e-8));
    j["lame_parameter"] = report.lame_parameter;
    j["diverged"] = report.diverged;
    j["samples"] = report.samples.size();
    out << j.dump(2) << "\n";
    return exit_code::ok;
}

int run_report_command(const RunConfig& c, std::ostream& out) {
    const json j = run_report(c.seed, c.sweep_count);
    emit(c, out, j.dump(2) + "\n");
    return j["all_passed"].get<bool>() ? exit_code::ok : exit_code::verification;
}

// Bookkeeping for run_report: named checks plus the set of operations
// touched along the way.
class Ledger {
  public:
    void touch(std::initializer_list<const char*> ops) {
        for (const char* op : ops)
            ops_.insert(op);
    }
    void check(const std::string& name, bool ok) {
        checks_[name] = ok;
        all_ &= ok;
    }
    bool all() const { return all_; }
    json checks() const { return json(checks_); }
    json operations() const { return json(std::vector<std::string>(ops_.begin(), ops_.end())); }

  private:
    std::set<std::string> ops_;
    std::map<std::string, bool> checks_;
    bool all_ = true;
};

HomogeneousPoly poly_of(int degree, std::initializer_list<int> cs) {
    std::vector<Rational> v;
    for (int c : cs)
        v.emplace_back(c);
    return HomogeneousPoly(degree, std::move(v));
}

json sweep_syzygies(std::mt19937_64& rng, int count, Ledger& ledger) {
    json out = json::object();
    for (int n = 5; n <= 9; ++n) {
        int main_ok = 0;
        int switch_ok = 0;
        int gradient_ok = 0;
        int three_ok = 0;
        for (int i = 0; i < count; ++i) {
            const CovariantSet cov = compute_covariants(random_quantic(rng, n));
            main_ok += syzygy_main(cov).is_zero();
            switch_ok += syzygy_switch(cov).is_zero();
            gradient_ok += syzygy_gradient(cov).is_zero();
            std::uniform_int_distribution<int> deg(0, 6);
            three_ok += syzygy_three(random_poly(rng, deg(rng)), random_poly(rng, deg(rng)),
                                     random_poly(rng, deg(rng)))
                            .is_zero();
        }
        out[std::to_string(n)] =
            json{{"count", count}, {"main", main_ok}, {"switch", switch_ok}, {"three", three_ok},
                 {"gradient", gradient_ok}};
        ledger.check("syzygy_sweep_N" + std::to_string(n),
                     main_ok == count && switch_ok == count && three_ok == count && gradient_ok == count);
    }
    ledger.touch({"expand", "hessian", "covariant_G", "emanant4", "covariant_S", "covariant_T", "grad_S", "grad_T",
                  "jacobian", "mul", "pow", "add", "scale", "syzygy_main", "syzygy_switch", "syzygy_three",
                  "syzygy_gradient"});
    return out;
}

json sweep_sources(std::mt19937_64& rng, int count, Ledger& ledger) {
    json out = json::object();
    for (int n = 5; n <= 7; ++n) {
        int ok = 0;
        for (int i = 0; i < count; ++i) {
            const BinaryQuantic u = random_quantic(rng, n);
            const CovariantSet cov = compute_covariants(u);
            const Rational k = n * (n - 4);
            ok += source(cov.H) == sources::hessian(u) && cov.H[1] == sources::hessian_second(u) &&
                  source(cov.G) == sources::covariant_G(u) && source(cov.S) == sources::covariant_S(u) &&
                  source(cov.T) == sources::covariant_T(u) && source(cov.dS) == k * sources::grad_S0(u) &&
                  source(cov.dT) == k * sources::grad_T0(u) && source(cov.u) == u.a(0);
        }
        out[std::to_string(n)] = json{{"count", count}, {"passed", ok}};
        ledger.check("source_anchors_N" + std::to_string(n), ok == count);
    }
    ledger.touch({"source"});
    return out;
}

void ring_checks(std::mt19937_64& rng, Ledger& ledger) {
    bool euler = true;
    bool antisym = true;
    bool roundtrip = true;
    const HomogeneousPoly p = HomogeneousPoly::p();
    const HomogeneousPoly q = HomogeneousPoly::q();
    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<int> deg(1, 8);
        const HomogeneousPoly x = random_poly(rng, deg(rng));
        const HomogeneousPoly y = random_poly(rng, deg(rng));
        euler &= add(p * partial_p(x), q * partial_q(x)) == scale(x, x.degree());
        antisym &= (poisson(x, y) + poisson(y, x)).is_zero() && poisson(x, y) == jacobian(y, x);
        const BinaryQuantic u = random_quantic(rng, deg(rng));
        roundtrip &= contract(expand(u)) == u;
        // Homogeneity of evaluation.
        const Rational lam(3, 2);
        euler &= eval(x, lam * 2, lam * -1) == pow(lam, static_cast<unsigned>(x.degree())) * eval(x, Rational(2), Rational(-1));
    }
    ledger.check("euler_identity", euler);
    ledger.check("poisson_antisymmetry", antisym);
    ledger.check("expand_contract_round_trip", roundtrip);
    ledger.touch({"partial_p", "partial_q", "poisson", "eval", "contract", "add", "scale"});
}

void fixture_checks(Ledger& ledger) {
    const BinaryQuantic quintic(5, {1, 0, 0, 0, 0, 1});  // p^5 + q^5
    const CovariantSet c = compute_covariants(quintic);
    ledger.check("fixture_quintic_H", c.H == poly_of(6, {0, 0, 0, 1, 0, 0, 0}));
    ledger.check("fixture_quintic_G", c.G == poly_of(9, {0, 0, 1, 0, 0, 0, 0, -1, 0, 0}));
    ledger.check("fixture_quintic_S", c.S == poly_of(2, {0, 1, 0}));
    ledger.check("fixture_quintic_T", c.T.is_zero() && c.T.degree() == 3);
    ledger.check("fixture_quintic_dS", c.dS == poly_of(5, {5, 0, 0, 0, 0, -5}));
    ledger.check("fixture_quintic_dT", c.dT.is_zero() && c.dT.degree() == 6);

    const WeierstrassData w = build_weierstrass(c);
    const Rational one = 1;
    ledger.check("fixture_quintic_residual_1_1", sgn(pointwise_residual(w, one, one)) == 0);
    ledger.check("fixture_quintic_phi_1_1", eval(w.phi, one, one) == -225);
    ledger.check("fixture_quintic_g2_1_1", eval(w.g2poly, one, one) == 202500);
    ledger.check("fixture_quintic_g3_1_1", sgn(eval(w.g3poly, one, one)) == 0);
    ledger.check("discriminant_3_1", sgn(discriminant(3, 1)) == 0);

    const Classification improper = classify(quintic, {1, 0});
    ledger.check("classify_quintic_1_0_improper", improper.category == Category::improper && !improper.proper);
    const Classification onzero = classify(quintic, {1, -1});
    ledger.check("classify_quintic_1_m1_inverse_square", onzero.category == Category::u_zero_inverse_square);

    const BinaryQuantic lead(5, {0, 1, 0, 0, 0, 0});  // 5 p^4 q
    const Classification elem = classify(lead, {1, 1});
    ledger.check("classify_5p4q_proper_elementary",
                 elem.proper && elem.category == Category::proper_elementary && sgn(elem.g2) == 0 &&
                     sgn(elem.g3) == 0 && elem.delta && sgn(*elem.delta) == 0);

    // wp series: the truncated series satisfies its own differential equation.
    double worst = 0.0;
    for (double z : {0.05, 0.1, 0.15, 0.2}) {
        const double g2 = 20.0;
        const double g3 = 3.0;
        const double wp = wp_series(g2, g3, z);
        const double dwp = wp_series_derivative(g2, g3, z);
        const double rhs = 4.0 * wp * wp * wp - g2 * wp - g3;
        worst = std::max(worst, std::abs(dwp * dwp - rhs) / std::abs(rhs));
    }
    ledger.check("wp_series_self_consistency", worst < 1e-9);
    ledger.touch({"build_weierstrass", "pointwise_residual", "discriminant", "classify", "wp_series"});
}

json flow_checks(Ledger& ledger) {
    json out = json::object();
    FlowOptions opts;  // rk4, dt = 1e-4, t_end = 0.1

    const BinaryQuantic lead(5, {0, 1, 0, 0, 0, 0});
    const auto [pdot, qdot] = hamilton_rhs(lead, 1.0, 1.0);
    ledger.check("hamilton_rhs_5p4q", pdot == -5.0 && qdot == 20.0);

    const FlowReport a = integrate(lead, {1.0, 1.0}, opts);
    double phi_err = 0.0;
    for (const auto& s : a.samples) {
        const double exact = 1.0 / ((s.t + 1.0 / 15.0) * (s.t + 1.0 / 15.0));
        phi_err = std::max(phi_err, std::abs(s.phi - exact) / exact);
    }
    ledger.check("flow_5p4q_phi_closed_form", phi_err < 1e-8);
    ledger.check("flow_5p4q_energy", a.u_drift_max < 1e-9);
    ledger.check("flow_5p4q_proper", monitor_properness(a, 1e-8));
    out["5p4q"] = json{{"phi_rel_err", phi_err}, {"u_drift_max", a.u_drift_max}, {"residual_max", a.residual_max}};

    const BinaryQuantic quintic(5, {1, 0, 0, 0, 0, 1});
    const FlowReport b = integrate(quintic, {1.0, 0.5}, opts);
    ledger.check("flow_quintic_energy", b.u_drift_max < 1e-9);
    ledger.check("flow_quintic_improper", !monitor_properness(b, 1e-8));
    ledger.check("flow_quintic_residual", b.residual_max < 1e-9);
    const double coarse = monitor_second_order(quintic, thin(b, 20));
    const double fine = monitor_second_order(quintic, thin(b, 10));
    const double ratio = coarse / fine;
    ledger.check("flow_second_order_convergence", ratio > 3.6 && ratio < 4.4);
    out["quintic_1_0.5"] = json{{"u_drift_max", b.u_drift_max},
                                {"residual_max", b.residual_max},
                                {"second_order_ratio", ratio},
                                {"fd_consistency_error", b.fd_consistency_error}};

    const FlowReport c = integrate(quintic, {1.0, -1.0}, opts);
    double g_max = 0.0;
    for (const auto& s : c.samples)
        g_max = std::max({g_max, std::abs(s.g2), std::abs(s.g3)});
    ledger.check("flow_quintic_on_zero_set", g_max < 1e-6);

    FlowOptions adaptive = opts;
    adaptive.method = Method::rk45_adaptive;
    const FlowReport d = integrate(lead, {1.0, 1.0}, adaptive);
    double adaptive_err = 0.0;
    for (const auto& s : d.samples)
        adaptive_err = std::max(adaptive_err, std::abs(s.p - std::cbrt(1.0 / (1.0 + 15.0 * s.t))));
    ledger.check("flow_adaptive_closed_form", adaptive_err < 1e-8);

    ledger.touch({"hamilton_rhs", "integrate", "monitor_second_order", "monitor_properness"});
    return out;
}

}  // namespace

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw PreconditionError(std::string("QH_SEED is not an unsigned integer: ") + env);
        }
    }
    return kDefaultSeed;
}

void validate(const RunConfig& c) {
    if (c.t_end && !(*c.t_end >= 0.0))
        throw PreconditionError("--t-end must be non-negative");
    if (c.dt && !(*c.dt > 0.0))
        throw PreconditionError("--dt must be positive");
    if (c.stride < 1)
        throw PreconditionError("--stride must be at least 1");
    if (c.sweep_count < 1)
        throw PreconditionError("--count must be at least 1");
    for (const auto& [key, value] : c.tolerances)
        if (!(value > 0.0))
            throw PreconditionError("tolerance " + key + " must be positive");
    if (c.subcommand != Subcommand::report && c.input_path.empty())
        throw PreconditionError("--in is required");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        switch (config.subcommand) {
        case Subcommand::covariants: return run_covariants(config, out);
        case Subcommand::syzygy: return run_syzygy(config, out);
        case Subcommand::classify: return run_classify(config, out);
        case Subcommand::flow: return run_flow(config, out);
        case Subcommand::report: return run_report_command(config, out);
        }
    } catch (const InternalError& e) {
        err << "verification failure: " << e.what() << "\n";
        return exit_code::verification;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    return exit_code::usage;
}

BinaryQuantic random_quantic(std::mt19937_64& rng, int order, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<Rational> a;
    a.reserve(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        a.emplace_back(dist(rng));
    return BinaryQuantic(order, std::move(a));
}

HomogeneousPoly random_poly(std::mt19937_64& rng, int degree, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i)
        c.emplace_back(dist(rng));
    return HomogeneousPoly(degree, std::move(c));
}

const std::vector<std::string>& report_operations() {
    static const std::vector<std::string> ops = {
        "add", "build_weierstrass", "classify", "contract", "covariant_G", "covariant_S", "covariant_T",
        "discriminant", "emanant4", "eval", "expand", "grad_S", "grad_T", "hamilton_rhs", "hessian",
        "integrate", "jacobian", "monitor_properness", "monitor_second_order", "mul", "partial_p", "partial_q",
        "pointwise_residual", "poisson", "pow", "scale", "source", "syzygy_gradient", "syzygy_main",
        "syzygy_switch", "syzygy_three", "wp_series",
    };
    return ops;
}

json run_report(std::uint64_t seed, int sweep_count) {
    std::mt19937_64 rng(seed);
    Ledger ledger;
    json j;
    j["seed"] = seed;
    j["syzygy_sweep"] = sweep_syzygies(rng, sweep_count, ledger);
    j["source_anchors"] = sweep_sources(rng, sweep_count, ledger);
    ring_checks(rng, ledger);
    fixture_checks(ledger);
    j["flow"] = flow_checks(ledger);
    j["checks"] = ledger.checks();
    j["operations"] = ledger.operations();
    j["all_passed"] = ledger.all();
    return j;
}

}  // namespace quantic
