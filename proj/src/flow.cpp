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

#include "quantic/flow.hpp"

#include "quantic/errors.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace quantic {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 2>;

// Everything a sample needs, evaluated in double precision from the exact
// covariants.
class SampleEvaluator {
  public:
    explicit SampleEvaluator(const BinaryQuantic& u)
        : n_(u.order()), lame_(1.0 / (u.order() - 2)) {
        const CovariantSet cov = compute_covariants(u);
        const WeierstrassData w = build_weierstrass(cov);
        u_ = NumericPoly(cov.u);
        phi_ = NumericPoly(w.phi);
        phi_dot_ = NumericPoly(w.phi_dot);
        g2_ = NumericPoly(w.g2poly);
        g3_ = NumericPoly(w.g3poly);
    }

    int order() const { return n_; }

    FlowSample operator()(double t, const State& x) const {
        FlowSample s;
        s.t = t;
        s.p = x[0];
        s.q = x[1];
        s.u = u_(s.p, s.q);
        s.phi = phi_(s.p, s.q);
        s.phi_dot_analytic = phi_dot_(s.p, s.q);
        s.g2 = g2_(s.p, s.q);
        s.g3 = g3_(s.p, s.q);
        s.weierstrass_residual =
            s.phi_dot_analytic * s.phi_dot_analytic - 4.0 * s.phi * s.phi * s.phi + s.g2 * s.phi + s.g3;
        s.lame_parameter = lame_;
        return s;
    }

  private:
    int n_;
    double lame_;
    NumericPoly u_, phi_, phi_dot_, g2_, g3_;
};

double relative_residual(const FlowSample& s) {
    const double scale = std::max({1.0, s.phi_dot_analytic * s.phi_dot_analytic, std::abs(4.0 * s.phi * s.phi * s.phi),
                                   std::abs(s.g2 * s.phi), std::abs(s.g3)});
    return std::abs(s.weierstrass_residual) / scale;
}

void summarize(FlowReport& r) {
    r.u_drift_max = 0.0;
    r.residual_max = 0.0;
    if (r.samples.empty())
        return;
    const double u0 = r.samples.front().u;
    const double denom = std::max(1.0, std::abs(u0));
    for (const auto& s : r.samples) {
        r.u_drift_max = std::max(r.u_drift_max, std::abs(s.u - u0) / denom);
        r.residual_max = std::max(r.residual_max, relative_residual(s));
    }
}

bool escaped(const State& x, double cap) {
    return !std::isfinite(x[0]) || !std::isfinite(x[1]) || std::abs(x[0]) > cap || std::abs(x[1]) > cap;
}

double uniform_spacing(const FlowReport& r) {
    const auto& s = r.samples;
    const double h = s[1].t - s[0].t;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double hi = s[i + 1].t - s[i].t;
        if (std::abs(hi - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw PreconditionError("finite-difference monitor needs uniformly spaced samples");
    }
    return h;
}

}  // namespace

Method parse_method(std::string_view name) {
    if (name == "rk4")
        return Method::rk4;
    if (name == "rk45_adaptive" || name == "rk45")
        return Method::rk45_adaptive;
    throw PreconditionError("unknown method \"" + std::string(name) + "\" (expected rk4 or rk45_adaptive)");
}

std::string_view to_string(Method m) {
    return m == Method::rk4 ? "rk4" : "rk45_adaptive";
}

HamiltonField::HamiltonField(const BinaryQuantic& u) {
    const HomogeneousPoly x = expand(u);
    up_ = NumericPoly(partial_p(x));
    uq_ = NumericPoly(partial_q(x));
}

std::pair<double, double> HamiltonField::operator()(double p, double q) const {
    return {-uq_(p, q), up_(p, q)};
}

std::pair<double, double> hamilton_rhs(const BinaryQuantic& u, double p, double q) {
    return HamiltonField(u)(p, q);
}

FlowReport integrate(const BinaryQuantic& u, Point<double> start, const FlowOptions& opts) {
    require_order(u.order(), 5, "integrate");
    if (!(opts.dt > 0.0) || !std::isfinite(opts.dt))
        throw PreconditionError("integrate: dt must be positive");
    if (!(opts.t_end >= 0.0) || !std::isfinite(opts.t_end))
        throw PreconditionError("integrate: t_end must be non-negative");
    if (opts.stride < 1)
        throw PreconditionError("integrate: stride must be at least 1");
    if (!std::isfinite(start.p) || !std::isfinite(start.q))
        throw PreconditionError("integrate: start point must be finite");
    if (opts.method == Method::rk45_adaptive && (!(opts.rtol > 0.0) || !(opts.atol > 0.0)))
        throw PreconditionError("integrate: tolerances must be positive");

    const HamiltonField field(u);
    const SampleEvaluator evaluate(u);
    auto rhs = [&field](const State& x, State& dxdt, double /*t*/) {
        const auto [pdot, qdot] = field(x[0], x[1]);
        dxdt[0] = pdot;
        dxdt[1] = qdot;
    };

    FlowReport report;
    report.order = u.order();
    report.lame_parameter = 1.0 / (u.order() - 2);

    State x{start.p, start.q};
    report.samples.push_back(evaluate(0.0, x));

    // Output grid t_k = k dt, with the last step shortened onto t_end.
    const auto steps = static_cast<long>(std::ceil(opts.t_end / opts.dt - 1e-9));
    auto time_at = [&](long k) { return k == steps ? opts.t_end : static_cast<double>(k) * opts.dt; };

    if (opts.method == Method::rk4) {
        odeint::runge_kutta4<State> stepper;
        for (long k = 1; k <= steps; ++k) {
            const double t0 = time_at(k - 1);
            const double t1 = time_at(k);
            stepper.do_step(rhs, x, t0, t1 - t0);
            if (escaped(x, opts.blowup_cap)) {
                report.diverged = true;
                break;
            }
            if (k % opts.stride == 0 || k == steps)
                report.samples.push_back(evaluate(t1, x));
        }
    } else {
        auto stepper = odeint::make_dense_output(opts.atol, opts.rtol, odeint::runge_kutta_dopri5<State>());
        stepper.initialize(x, 0.0, opts.dt);
        State out = x;
        for (long k = 1; k <= steps; ++k) {
            const double t1 = time_at(k);
            while (stepper.current_time() < t1) {
                stepper.do_step(rhs);
                if (escaped(stepper.current_state(), opts.blowup_cap)) {
                    report.diverged = true;
                    break;
                }
            }
            if (report.diverged)
                break;
            stepper.calc_state(t1, out);
            if (k % opts.stride == 0 || k == steps)
                report.samples.push_back(evaluate(t1, out));
        }
    }

    summarize(report);
    if (report.samples.size() >= 3 && !report.diverged) {
        const auto& s = report.samples;
        // The final sample may sit off the uniform grid when t_end is not a
        // multiple of the output spacing; leave it out of the FD monitors.
        FlowReport grid = report;
        const double h = s[1].t - s[0].t;
        if (std::abs((s.back().t - s[s.size() - 2].t) - h) > 1e-9 * h)
            grid.samples.pop_back();
        if (grid.samples.size() >= 3) {
            report.second_order_error_max = monitor_second_order(u, grid);
            report.fd_consistency_error = monitor_phi_derivative(grid);
        }
    }
    return report;
}

FlowReport thin(const FlowReport& report, int every) {
    if (every < 1)
        throw PreconditionError("thin: stride must be at least 1");
    FlowReport out;
    out.order = report.order;
    out.diverged = report.diverged;
    out.lame_parameter = report.lame_parameter;
    for (std::size_t i = 0; i < report.samples.size(); i += static_cast<std::size_t>(every))
        out.samples.push_back(report.samples[i]);
    summarize(out);
    return out;
}

double monitor_second_order(const BinaryQuantic& u, const FlowReport& report) {
    if (report.samples.size() < 3)
        throw PreconditionError("monitor_second_order needs at least 3 samples");
    const int n = u.order();
    const double h = uniform_spacing(report);
    const NumericPoly hess(hessian(u));
    const double factor = static_cast<double>(n) * n * (n - 1);

    double worst = 0.0;
    const auto& s = report.samples;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double pdd = (s[i + 1].p - 2.0 * s[i].p + s[i - 1].p) / (h * h);
        const double qdd = (s[i + 1].q - 2.0 * s[i].q + s[i - 1].q) / (h * h);
        const double k = factor * hess(s[i].p, s[i].q);
        const double fp = -k * s[i].p;
        const double fq = -k * s[i].q;
        const double err = std::hypot(pdd - fp, qdd - fq);
        worst = std::max(worst, err / std::max(1.0, std::hypot(fp, fq)));
    }
    return worst;
}

double monitor_phi_derivative(const FlowReport& report) {
    if (report.samples.size() < 3)
        throw PreconditionError("monitor_phi_derivative needs at least 3 samples");
    const double h = uniform_spacing(report);
    double worst = 0.0;
    const auto& s = report.samples;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double fd = (s[i + 1].phi - s[i - 1].phi) / (2.0 * h);
        const double exact = s[i].phi_dot_analytic;
        worst = std::max(worst, std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
    }
    return worst;
}

bool monitor_properness(const FlowReport& report, double tol) {
    if (report.samples.empty())
        return true;
    const double g2_0 = report.samples.front().g2;
    const double g3_0 = report.samples.front().g3;
    double d2 = 0.0;
    double d3 = 0.0;
    for (const auto& s : report.samples) {
        d2 = std::max(d2, std::abs(s.g2 - g2_0) / std::max(1.0, std::abs(g2_0)));
        d3 = std::max(d3, std::abs(s.g3 - g3_0) / std::max(1.0, std::abs(g3_0)));
    }
    return d2 < tol && d3 < tol;
}

}  // namespace quantic
