// check.cpp: Built-in invariant suite behind the `check` subcommand

#include "otto/check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "otto/gslc.hpp"
#include "otto/limit_cycle.hpp"
#include "otto/thermo.hpp"

namespace otto::check {

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

CycleParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> w(0.2, 6.0), g(0.0, 4.0), b(0.05, 2.0);
    double wh = w(rng), wc = w(rng), bh = b(rng), bc = b(rng);
    if (wh < wc) std::swap(wh, wc);
    if (bh > bc) std::swap(bh, bc);
    if (bh == bc) bc += 0.1;
    return CycleParams(wh, wc, g(rng), g(rng), bh, bc, 1.0, 1.0);
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

} // namespace

std::vector<CheckResult> run_checks(unsigned seed) {
    std::vector<CheckResult> out;

    out.push_back(guarded("uncoupled-engine-anchor", [] {
        const CycleParams p(2.0, 1.0, 0.0, 0.0, 0.2, 1.0);
        const auto s = gslc::gslc_limit_cycle(p);
        const double eta = thermo::efficiency(thermo::energy_flows(s.rho_h, s.rho_c, p));
        return CheckResult{"uncoupled-engine-anchor", std::abs(eta - 0.5) <= 1e-12, "eta=" + fmt("%.17g", eta)};
    }));

    out.push_back(guarded("uncoupled-refrigerator-anchor", [] {
        const CycleParams p(7.0, 1.0, 0.0, 0.0, 0.2, 1.0);
        const auto s = gslc::gslc_limit_cycle(p);
        const double xi = thermo::cop(thermo::energy_flows(s.rho_h, s.rho_c, p));
        return CheckResult{"uncoupled-refrigerator-anchor", std::abs(xi - 1.0 / 6.0) <= 1e-12,
                           "xi=" + fmt("%.17g", xi)};
    }));

    out.push_back(guarded("first-law-and-carnot", [seed] {
        std::mt19937_64 rng(seed);
        double worst = 0.0;
        int violations = 0;
        for (int i = 0; i < 500; ++i) {
            const CycleParams p = random_params(rng);
            const auto s = gslc::gslc_limit_cycle(p);
            const auto f = thermo::energy_flows(s.rho_h, s.rho_c, p);
            worst = std::max(worst, std::abs(f.w + f.q_h + f.q_c));
            const auto r = thermo::classify(f, thermo::flow_dead_band(p));
            if (r.regime == thermo::Regime::Engine && *r.figure_of_merit > thermo::carnot_efficiency(p) + 1e-12) ++violations;
            if (r.regime == thermo::Regime::Refrigerator && *r.figure_of_merit > thermo::carnot_cop(p) + 1e-12) ++violations;
        }
        return CheckResult{"first-law-and-carnot", worst <= 1e-12 && violations == 0,
                           "max|W+Q_h+Q_c|=" + fmt("%.3g", worst) + " carnot_violations=" + std::to_string(violations)};
    }));

    out.push_back(guarded("global-steady-state-is-gibbs", [seed] {
        std::mt19937_64 rng(seed + 1);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const CycleParams p = random_params(rng);
            const auto bath = lindblad::default_bath(p);
            const auto elc = limit_cycle::elc_state(p, bath);
            const auto gibbs = gslc::gslc_limit_cycle(p);
            worst = std::max(worst, (elc.rho_h.entries() - gibbs.rho_h.entries()).cwiseAbs().maxCoeff());
            worst = std::max(worst, (elc.rho_c.entries() - gibbs.rho_c.entries()).cwiseAbs().maxCoeff());
        }
        return CheckResult{"global-steady-state-is-gibbs", worst <= 1e-10, "max entry error=" + fmt("%.3g", worst)};
    }));

    out.push_back(guarded("global-spectrum-biorthogonal", [seed] {
        std::mt19937_64 rng(seed + 2);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const CycleParams p = random_params(rng);
            const auto frame = hot_frame(p);
            const auto bath = lindblad::default_bath(p);
            const auto s = lindblad::global_spectrum(frame, p.beta_h(), bath);
            const SuperOp l = lindblad::global_liouvillian(frame, p.beta_h(), bath);
            for (int a = 0; a < 4; ++a) {
                const Vec4 r = flatten(s.right[a]);
                worst = std::max(worst, (l * r - s.eigenvalues[a] * r).cwiseAbs().maxCoeff());
                for (int b = 0; b < 4; ++b) {
                    const cplx d = (s.left[a] * s.right[b]).trace();
                    worst = std::max(worst, std::abs(d - (a == b ? 1.0 : 0.0)));
                }
            }
        }
        return CheckResult{"global-spectrum-biorthogonal", worst <= 1e-10, "max error=" + fmt("%.3g", worst)};
    }));

    out.push_back(guarded("nelc-matches-iteration", [] {
        const CycleParams p(5.0, 1.0, 4.0, 1.0, 0.2, 1.0, 10.0, 10.0);
        const auto bath = lindblad::default_bath(p);
        const auto fixed = limit_cycle::solve_nelc(p, bath);
        const auto tr = limit_cycle::iterate_cycle(DensityMatrix::ground(), p, bath, 20000);
        const double d = trace_norm(tr.states.back().entries() - fixed.solution.rho_c.entries());
        return CheckResult{"nelc-matches-iteration", d <= 1e-8, "trace norm=" + fmt("%.3g", d)};
    }));

    out.push_back(guarded("zero-flow-line", [] {
        double worst = 0.0;
        for (int i = 1; i <= 10; ++i) {
            const double k = 0.1 * i;
            const CycleParams p(5.0, 1.0, 5.0 * k, k, 0.2, 1.0);
            const auto s = gslc::gslc_limit_cycle(p);
            const auto f = thermo::energy_flows(s.rho_h, s.rho_c, p);
            worst = std::max({worst, std::abs(f.q_h), std::abs(f.q_c), std::abs(f.w)});
        }
        return CheckResult{"zero-flow-line", worst <= 1e-12, "max|flow|=" + fmt("%.3g", worst)};
    }));

    return out;
}

} // namespace otto::check
