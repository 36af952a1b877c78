// sweep.cpp: Parameter sweeps, tau-scans and time averaging over the three limit cycles

#include "otto/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "otto/gslc.hpp"
#include "otto/limit_cycle.hpp"

namespace otto::sweep {

namespace {

constexpr std::string_view kAxisNames[] = {"g_h", "g_c", "omega_h", "omega_c", "beta_h", "beta_c", "tau"};

bool known_axis(std::string_view name) {
    return std::find(std::begin(kAxisNames), std::end(kAxisNames), name) != std::end(kAxisNames);
}

// Row-major: the last axis varies fastest.
std::vector<double> axis_point(const std::vector<std::vector<double>>& grids, std::size_t index) {
    std::vector<double> out(grids.size());
    for (std::size_t k = grids.size(); k-- > 0;) {
        const std::size_t n = grids[k].size();
        out[k] = grids[k][index % n];
        index /= n;
    }
    return out;
}

std::string failure_status(const std::exception& e) {
    if (dynamic_cast<const DegenerateError*>(&e)) return "degenerate";
    if (dynamic_cast<const NumericalError*>(&e)) return "numerical";
    if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid";
    return "error";
}

template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    }
}

} // namespace

std::string_view to_string(Mode m) {
    switch (m) {
    case Mode::Gslc: return "gslc";
    case Mode::Elc: return "elc";
    case Mode::Nelc: return "nelc";
    }
    return "gslc";
}

Mode mode_from_string(std::string_view s) {
    if (s == "gslc") return Mode::Gslc;
    if (s == "elc") return Mode::Elc;
    if (s == "nelc") return Mode::Nelc;
    throw std::invalid_argument("unknown mode '" + std::string(s) + "' (expected gslc, elc or nelc)");
}

void Axis::validate() const {
    if (!known_axis(name)) {
        throw std::invalid_argument("unknown axis '" + name + "'");
    }
    if (count < 2) {
        throw std::invalid_argument("axis '" + name + "' needs count >= 2");
    }
    if (!std::isfinite(min) || !std::isfinite(max)) {
        throw std::invalid_argument("axis '" + name + "' has non-finite bounds");
    }
    if (log && !(min > 0.0 && max > 0.0)) {
        throw std::invalid_argument("log axis '" + name + "' needs positive bounds");
    }
}

std::vector<double> Axis::values() const {
    validate();
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double s = static_cast<double>(i) / (count - 1);
        v[i] = log ? std::exp(std::log(min) + s * (std::log(max) - std::log(min)))
                   : min + s * (max - min);
    }
    v.front() = min;
    v.back() = max;
    return v;
}

void SweepConfig::validate() const {
    for (const auto& a : axes) a.validate();
    for (std::size_t i = 0; i < axes.size(); ++i) {
        for (std::size_t j = i + 1; j < axes.size(); ++j) {
            if (axes[i].name == axes[j].name) {
                throw std::invalid_argument("axis '" + axes[i].name + "' declared twice");
            }
        }
    }
    if (!(gamma > 0.0)) throw std::invalid_argument("bath.gamma must be positive");
    if (cutoff && !(*cutoff > 0.0)) throw std::invalid_argument("bath.cutoff must be positive");
    if (averaging.samples < 1) throw std::invalid_argument("averaging.samples must be >= 1");
    if (!(averaging.window > 0.0)) throw std::invalid_argument("averaging.window must be positive");
    if (svg_width < 1 || svg_height < 1) throw std::invalid_argument("svg size must be positive");
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
    if (mode == Mode::Nelc) {
        const bool tau_axis = std::any_of(axes.begin(), axes.end(), [](const Axis& a) { return a.name == "tau"; });
        if (!tau_axis && !(tau > 0.0)) throw std::invalid_argument("nelc mode needs tau > 0");
    }
}

CycleParams SweepConfig::base_params() const {
    return CycleParams(omega_h, omega_c, g_h, g_c, beta_h, beta_c, tau, tau);
}

CycleParams point_params(const SweepConfig& c, const std::vector<double>& axis_values) {
    double v[] = {c.g_h, c.g_c, c.omega_h, c.omega_c, c.beta_h, c.beta_c, c.tau};
    for (std::size_t k = 0; k < c.axes.size(); ++k) {
        const auto it = std::find(std::begin(kAxisNames), std::end(kAxisNames), c.axes[k].name);
        v[it - std::begin(kAxisNames)] = axis_values.at(k);
    }
    return CycleParams(v[2], v[3], v[0], v[1], v[4], v[5], v[6], v[6]);
}

lindblad::BathSpec point_bath(const SweepConfig& c, const CycleParams& p) {
    lindblad::BathSpec b = lindblad::default_bath(p, c.gamma);
    if (c.cutoff) b.omega_cutoff = *c.cutoff;
    return b;
}

std::vector<double> averaging_samples(double tau0, double period, int samples) {
    if (!(tau0 > 0.0)) throw std::invalid_argument("time averaging needs tau0 > 0");
    if (!(period > 0.0) || samples < 1) throw std::invalid_argument("bad averaging window");
    const double lo = std::max(0.0, tau0 - 0.5 * period);
    const double hi = tau0 + 0.5 * period;
    const double step = (hi - lo) / samples;
    std::vector<double> t(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) t[k] = lo + (k + 0.5) * step;
    return t;
}

double averaging_period(const EigenFrame& hot, const EigenFrame& cold, double window) {
    return window * 2.0 * std::numbers::pi / std::min(hot.omega_tilde, cold.omega_tilde);
}

double time_average(const std::function<double(double)>& q, double tau0,
                    const EigenFrame& hot, const EigenFrame& cold, int samples, double window) {
    const auto ts = averaging_samples(tau0, averaging_period(hot, cold, window), samples);
    double sum = 0.0;
    for (double t : ts) sum += q(t);
    return sum / static_cast<double>(ts.size());
}

thermo::EnergyFlows averaged_nelc_flows(const CycleParams& p, const lindblad::BathSpec& bath,
                                        int samples, double window, double* residual) {
    const auto ts = averaging_samples(p.t_h(), averaging_period(hot_frame(p), cold_frame(p), window),
                                      samples);
    thermo::EnergyFlows acc;
    double worst = 0.0;
    for (double t : ts) {
        const CycleParams q = p.with_tau(t);
        const auto res = limit_cycle::solve_nelc(q, bath);
        const auto f = thermo::energy_flows(res.solution.rho_h, res.solution.rho_c, q);
        acc.q_h += f.q_h;
        acc.q_c += f.q_c;
        acc.w_1 += f.w_1;
        acc.w_2 += f.w_2;
        worst = std::max(worst, res.report.final_residual);
    }
    const double n = static_cast<double>(ts.size());
    acc.q_h /= n;
    acc.q_c /= n;
    acc.w_1 /= n;
    acc.w_2 /= n;
    acc.w = acc.w_1 + acc.w_2;
    if (residual) *residual = worst;
    return acc;
}

PointRecord evaluate_point(const SweepConfig& c, const std::vector<double>& axis_values) {
    PointRecord rec;
    rec.axis_values = axis_values;
    try {
        const CycleParams p = point_params(c, axis_values);
        const auto bath = point_bath(c, p);
        const double band = thermo::flow_dead_band(p);
        switch (c.mode) {
        case Mode::Gslc: {
            const auto s = gslc::gslc_limit_cycle(p);
            rec.flows = thermo::energy_flows(s.rho_h, s.rho_c, p);
            rec.report = thermo::classify(rec.flows, band);
            break;
        }
        case Mode::Elc: {
            const auto s = limit_cycle::elc_state(p, bath);
            rec.flows = thermo::energy_flows(s.rho_h, s.rho_c, p);
            rec.report = thermo::classify(rec.flows, band);
            break;
        }
        case Mode::Nelc: {
            if (!(p.t_h() > 0.0)) throw std::invalid_argument("nelc needs tau > 0");
            double residual = 0.0;
            if (c.averaging.enabled) {
                rec.flows = averaged_nelc_flows(p, bath, c.averaging.samples, c.averaging.window, &residual);
            } else {
                const auto res = limit_cycle::solve_nelc(p, bath);
                rec.flows = thermo::energy_flows(res.solution.rho_h, res.solution.rho_c, p);
                residual = res.report.final_residual;
            }
            rec.residual = residual;
            rec.report = thermo::classify(rec.flows, band, p.t_h(), p.t_c());
            break;
        }
        }
    } catch (const std::exception& e) {
        PointRecord failed;
        failed.axis_values = axis_values;
        failed.status = failure_status(e);
        return failed;
    }
    return rec;
}

int resolve_threads(int requested) {
    int n = requested > 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("OTTO_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0) n = std::min(n, static_cast<int>(cap));
    }
    return std::max(1, n);
}

GridResult run_phase_sweep(const SweepConfig& config) {
    config.validate();
    std::vector<std::vector<double>> grids;
    std::size_t total = 1;
    for (const auto& a : config.axes) {
        grids.push_back(a.values());
        total *= grids.back().size();
    }
    GridResult out;
    out.config = config;
    out.points.resize(total);
    parallel_for(total, resolve_threads(config.threads), [&](std::size_t i) {
        out.points[i] = evaluate_point(config, axis_point(grids, i));
    });
    return out;
}

GridResult run_tau_scan(const SweepConfig& config) {
    if (config.mode != Mode::Nelc) throw std::invalid_argument("tau-scan needs mode nelc");
    if (config.axes.size() != 1 || config.axes.front().name != "tau") {
        throw std::invalid_argument("tau-scan needs exactly one axis, named tau");
    }
    GridResult out = run_phase_sweep(config);
    out.tau_scan = true;

    // The asymptotes do not depend on tau.
    std::optional<thermo::EnergyFlows> gslc_flows;
    std::optional<double> gslc_fom;
    std::optional<double> elc_fom;
    try {
        const CycleParams p = config.base_params();
        const double band = thermo::flow_dead_band(p);
        const auto g = gslc::gslc_limit_cycle(p);
        gslc_flows = thermo::energy_flows(g.rho_h, g.rho_c, p);
        gslc_fom = thermo::classify(*gslc_flows, band).figure_of_merit;
        const auto e = limit_cycle::elc_state(p, point_bath(config, p));
        elc_fom = thermo::classify(thermo::energy_flows(e.rho_h, e.rho_c, p), band).figure_of_merit;
    } catch (const std::exception&) {
    }
    for (auto& rec : out.points) {
        rec.gslc_flows = gslc_flows;
        rec.gslc_figure_of_merit = gslc_fom;
        rec.elc_figure_of_merit = elc_fom;
    }
    return out;
}

} // namespace otto::sweep
