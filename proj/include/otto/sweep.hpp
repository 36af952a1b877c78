// sweep.hpp: Parameter sweeps, tau-scans and time averaging over the three limit cycles

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "otto/lindblad.hpp"
#include "otto/thermo.hpp"

namespace otto::sweep {

enum class Mode { Gslc, Elc, Nelc };

std::string_view to_string(Mode m);
Mode mode_from_string(std::string_view s);  // throws std::invalid_argument

struct Axis {
    std::string name;  // g_h, g_c, omega_h, omega_c, beta_h, beta_c or tau
    double min{};
    double max{};
    int count = 2;
    bool log = false;

    void validate() const;
    std::vector<double> values() const;
};

struct Averaging {
    bool enabled = false;
    int samples = 64;
    double window = 1.0;  // fraction of the slowest coherence period
};

struct OutputSpec {
    enum class Kind { Csv, Json, Svg };
    Kind kind = Kind::Csv;
    std::string path;
    std::string field = "regime";  // svg only
};

struct SweepConfig {
    Mode mode = Mode::Gslc;
    // Reference parameter set
    double omega_h = 5.0;
    double omega_c = 1.0;
    double g_h = 4.0;
    double g_c = 1.0;
    double beta_h = 0.2;
    double beta_c = 1.0;
    double tau = 100.0;
    double gamma = 0.01;
    std::optional<double> cutoff;  // empty: 10^3 times the largest dressed gap
    std::vector<Axis> axes;
    Averaging averaging;
    std::vector<OutputSpec> outputs;
    int svg_width = 900;
    int svg_height = 700;
    int threads = 0;  // 0 = auto

    void validate() const;
    CycleParams base_params() const;  // fixed values with t_h = t_c = tau
};

struct PointRecord {
    std::vector<double> axis_values;
    thermo::EnergyFlows flows;
    thermo::RegimeReport report;
    std::optional<double> residual;  // nelc only
    // tau-scan reference columns
    std::optional<thermo::EnergyFlows> gslc_flows;
    std::optional<double> gslc_figure_of_merit;
    std::optional<double> elc_figure_of_merit;
    std::string status = "ok";

    bool ok() const { return status == "ok"; }
};

struct GridResult {
    SweepConfig config;
    bool tau_scan = false;
    std::vector<PointRecord> points;  // row-major over config.axes
};

// Stroke parameters of one grid point; t_h = t_c = tau.
CycleParams point_params(const SweepConfig& config, const std::vector<double>& axis_values);

lindblad::BathSpec point_bath(const SweepConfig& config, const CycleParams& params);

// Flows of one limit cycle at one point, honouring mode and averaging.
PointRecord evaluate_point(const SweepConfig& config, const std::vector<double>& axis_values);

GridResult run_phase_sweep(const SweepConfig& config);

// Requires mode nelc and exactly one axis, named tau.
GridResult run_tau_scan(const SweepConfig& config);

// Midpoint sample positions of the averaging window around tau0, clipped at 0.
std::vector<double> averaging_samples(double tau0, double period, int samples);

// Slowest coherence period 2 pi / min(omega_tilde_h, omega_tilde_c), times window.
double averaging_period(const EigenFrame& hot, const EigenFrame& cold, double window = 1.0);

double time_average(const std::function<double(double)>& quantity, double tau0,
                    const EigenFrame& hot, const EigenFrame& cold,
                    int samples = 64, double window = 1.0);

// NELC flows averaged component-wise over the window; residual receives the
// largest fixed-point residual among the samples.
thermo::EnergyFlows averaged_nelc_flows(const CycleParams& params, const lindblad::BathSpec& bath,
                                        int samples, double window, double* residual = nullptr);

// Worker count after OTTO_THREADS and the config cap; at least 1.
int resolve_threads(int requested);

} // namespace otto::sweep
