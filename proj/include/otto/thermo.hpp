// thermo.hpp: Energy flows, operating regimes, efficiency/COP/power and the coherence predicates

#pragma once

#include <optional>
#include <string_view>

#include "otto/qubit.hpp"

namespace otto::thermo {

// Positive values flow into the system.
struct EnergyFlows {
    double q_h{};
    double q_c{};
    double w_1{};
    double w_2{};
    double w{};
};

enum class Regime { Engine, Refrigerator, None };

std::string_view to_string(Regime r);

struct RegimeReport {
    Regime regime = Regime::None;
    std::optional<double> figure_of_merit;  // eta for engines, xi for refrigerators
    std::optional<double> power;            // output power, engines with known durations
};

enum class Comparison { Less, Equal, Greater };

std::string_view to_string(Comparison c);

// Coherence-based prediction of how the coupled cycle compares to the bare Otto
// cycle. Derived from eta = 1 - F_A omega_c/omega_h and xi = xi_Otto F_B with
// the sign of the engine (resp. refrigerator) denominators fixed.
struct PredicateRecord {
    double f_h{};
    double f_c{};
    Comparison f_order = Comparison::Equal;          // sign(f_h - f_c)
    Comparison coupling_ratio = Comparison::Equal;   // sign(g_h/omega_h - g_c/omega_c)
    // sign((g_h - g_c)/(omega_h - omega_c) - g_c/omega_c); absent when omega_h = omega_c
    std::optional<Comparison> cop_ratio;
    double eta_otto{};
    std::optional<double> xi_otto;
    Comparison eta_vs_otto = Comparison::Equal;      // prediction, valid inside the engine regime
    std::optional<Comparison> xi_vs_otto;            // prediction, valid inside the refrigerator regime
    bool equal_levels = false;                       // omega_h == omega_c branch
    // With omega_h == omega_c: 1 - g_c/g_h bounds eta from above for every
    // Gibbs-state engine; g_c/(g_h - g_c) is the COP when the excited
    // populations of both strokes coincide.
    std::optional<double> eta_equal_levels_bound;
    std::optional<double> xi_equal_levels;
};

EnergyFlows energy_flows(const DensityMatrix& rho_h, const DensityMatrix& rho_c,
                         const RealMat2& h_h, const RealMat2& h_c);

// Same, with the Hamiltonians taken from params.
EnergyFlows energy_flows(const DensityMatrix& rho_h, const DensityMatrix& rho_c,
                         const CycleParams& params);

// 1e-12 * max(omega_h, omega_c)
double flow_dead_band(const CycleParams& params);

RegimeReport classify(const EnergyFlows& flows, double dead_band = 1e-12);

// Adds the output power when the regime is Engine.
RegimeReport classify(const EnergyFlows& flows, double dead_band, double t_h, double t_c);

// -W/Q_h; throws ContractError outside the engine regime.
double efficiency(const EnergyFlows& flows, double dead_band = 1e-12);

// Q_c/W; throws ContractError outside the refrigerator regime.
double cop(const EnergyFlows& flows, double dead_band = 1e-12);

// Output power -W/(t_h + t_c) of an engine.
double power(const EnergyFlows& flows, double t_h, double t_c, double dead_band = 1e-12);

double carnot_efficiency(const CycleParams& params);
double carnot_cop(const CycleParams& params);
double otto_efficiency(const CycleParams& params);
double otto_cop(const CycleParams& params);  // infinite when omega_h == omega_c

PredicateRecord f_ratio_predicates(const CycleParams& params, double equality_band = 1e-10);

} // namespace otto::thermo
