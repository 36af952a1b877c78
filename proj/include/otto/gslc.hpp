// gslc.hpp: Gibbs-state limit cycle: thermal states per stroke and closed-form energy flows

#pragma once

#include "otto/qubit.hpp"

namespace otto::gslc {

struct GibbsPair {
    DensityMatrix rho_h;
    DensityMatrix rho_c;
    double f_h;  // sum of off-diagonal entries of rho_h
    double f_c;
};

struct ClosedFormFlows {
    double q_h;
    double q_c;
    double w;
};

// Thermal state e^{-beta H}/Z in the original basis, written as
// (I - tanh(beta Delta) (H - omega/2) / Delta) / 2.
DensityMatrix gibbs_state(double omega, double g, double beta);

// Off-diagonal coherence sum of the Gibbs state: -(g/Delta) tanh(beta Delta).
double coherence_f(double omega, double g, double beta);

ClosedFormFlows gslc_energy_flows(const CycleParams& params);

GibbsPair gslc_limit_cycle(const CycleParams& params);

} // namespace otto::gslc
