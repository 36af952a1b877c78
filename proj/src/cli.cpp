// cli.cpp: Command-line front end

#include "otto/cli.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "otto/check.hpp"
#include "otto/config.hpp"
#include "otto/output.hpp"
#include "otto/sweep.hpp"

namespace otto::cli {

namespace {

struct RunOptions {
    std::string config_path;
    std::vector<std::string> overrides;
};

sweep::SweepConfig load(const RunOptions& opts, std::optional<sweep::Mode> forced) {
    config::FlatConfig flat;
    if (!opts.config_path.empty()) flat = config::load_file(opts.config_path);
    if (forced) flat["mode"] = std::string(sweep::to_string(*forced));
    for (const auto& s : opts.overrides) config::apply_override(flat, s);
    if (forced) flat["mode"] = std::string(sweep::to_string(*forced));
    return config::build(flat);
}

void add_run_options(CLI::App* sub, RunOptions& opts) {
    sub->add_option("-c,--config", opts.config_path, "JSON run configuration");
    sub->add_option("-s,--set", opts.overrides, "Override a config key (key=value), repeatable");
}

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string g12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int print_point(const sweep::SweepConfig& cfg) {
    const auto rec = sweep::evaluate_point(cfg, {});
    std::cout << "mode=" << sweep::to_string(cfg.mode) << '\n';
    if (!rec.ok()) {
        std::cout << "status=" << rec.status << '\n';
        return rec.status == "invalid" ? 2 : 1;
    }
    std::cout << "Q_h=" << g17(rec.flows.q_h) << '\n'
              << "Q_c=" << g17(rec.flows.q_c) << '\n'
              << "W=" << g17(rec.flows.w) << '\n'
              << "regime=" << thermo::to_string(rec.report.regime) << '\n';
    if (rec.report.regime == thermo::Regime::Engine) {
        std::cout << "eta=" << g12(*rec.report.figure_of_merit) << '\n';
    } else if (rec.report.regime == thermo::Regime::Refrigerator) {
        std::cout << "xi=" << g12(*rec.report.figure_of_merit) << '\n';
    }
    if (rec.report.power) std::cout << "power=" << g17(*rec.report.power) << '\n';
    if (rec.residual) std::cout << "residual=" << g17(*rec.residual) << '\n';
    return 0;
}

int finish_sweep(const sweep::GridResult& result, std::chrono::steady_clock::time_point start) {
    output::emit_declared(result);
    std::map<std::string, int> counts;
    for (const auto& p : result.points) {
        ++counts[p.ok() ? std::string(thermo::to_string(p.report.regime)) : "failed"];
    }
    std::cout << "points=" << result.points.size() << " engine=" << counts["engine"]
              << " refrigerator=" << counts["refrigerator"] << " none=" << counts["none"]
              << " failed=" << counts["failed"] << '\n';
    for (const auto& o : result.config.outputs) std::cout << "wrote " << o.path << '\n';
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "wall time " << g12(secs) << " s\n";
    return 0;
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Internally coupled qubit Otto cycle: limit cycles, sweeps and phase diagrams", "otto"};
    app.set_version_flag("--version", std::string(OTTO_VERSION));
    app.require_subcommand(1, 1);

    RunOptions gslc_opts, elc_opts, nelc_opts, tau_opts, phase_opts;
    auto* gslc = app.add_subcommand("gslc", "Gibbs-state limit cycle (single point, or sweep when axes are set)");
    auto* elc = app.add_subcommand("elc", "Equilibrating limit cycle of the global master equation");
    auto* nelc = app.add_subcommand("nelc", "Non-equilibrating limit cycle at finite stroke duration tau");
    auto* tau = app.add_subcommand("tau-scan", "NELC flows, efficiency and power along a tau axis");
    auto* phase = app.add_subcommand("phase", "Phase-diagram sweep in the configured mode");
    auto* chk = app.add_subcommand("check", "Run the built-in invariant suite");
    add_run_options(gslc, gslc_opts);
    add_run_options(elc, elc_opts);
    add_run_options(nelc, nelc_opts);
    add_run_options(tau, tau_opts);
    add_run_options(phase, phase_opts);
    app.footer("Config keys: mode, omega_h, omega_c, g_h, g_c, beta_h, beta_c, tau, bath.gamma, bath.cutoff,\n"
               "averaging.enabled, averaging.samples, averaging.window, axes, outputs, svg.width, svg.height,\n"
               "threads. Axes: name:min:max:count[:log]. Outputs: csv:PATH, json:PATH, svg:PATH[:FIELD].\n"
               "OTTO_THREADS caps the worker count.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (chk->parsed()) {
            bool ok = true;
            for (const auto& r : check::run_checks()) {
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
                ok = ok && r.passed;
            }
            return ok ? 0 : 1;
        }

        const std::pair<CLI::App*, std::pair<RunOptions*, sweep::Mode>> single[] = {
            {gslc, {&gslc_opts, sweep::Mode::Gslc}},
            {elc, {&elc_opts, sweep::Mode::Elc}},
            {nelc, {&nelc_opts, sweep::Mode::Nelc}}};
        for (const auto& [sub, rest] : single) {
            if (!sub->parsed()) continue;
            const auto cfg = load(*rest.first, rest.second);
            if (cfg.axes.empty()) return print_point(cfg);
            return finish_sweep(sweep::run_phase_sweep(cfg), start);
        }
        if (tau->parsed()) {
            const auto cfg = load(tau_opts, sweep::Mode::Nelc);
            return finish_sweep(sweep::run_tau_scan(cfg), start);
        }
        if (phase->parsed()) {
            const auto cfg = load(phase_opts, std::nullopt);
            if (cfg.axes.empty()) {
                std::cerr << "phase: no axes configured\n";
                return 2;
            }
            return finish_sweep(sweep::run_phase_sweep(cfg), start);
        }
    } catch (const config::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace otto::cli
