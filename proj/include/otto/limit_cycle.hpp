// limit_cycle.hpp: Stroboscopic one-cycle map, NELC/ELC limit cycles and the iteration oracle
//
// A cycle starts at the end of the cold stroke: rotate into the hot frame,
// relax for t_h, rotate back, rotate into the cold frame, relax for t_c,
// rotate back. The adiabatic strokes are instantaneous Hamiltonian swaps.

#pragma once

#include <vector>

#include "otto/lindblad.hpp"

namespace otto::limit_cycle {

// Coefficient-space representation of the cycle map in the Liouvillian
// eigenbases of the two strokes.
struct CycleMapMatrices {
    SuperOp m_h;           // c^h -> c^h over one full cycle
    SuperOp m_c;           // c^c -> c^c over one full cycle
    SuperOp overlap_c_from_h;  // (k, i) = Tr[sigma^c_k  U_c^T U_h rho^h_i U_h^T U_c]
    SuperOp overlap_h_from_c;  // (k, i) = Tr[sigma^h_k  U_h^T U_c rho^c_i U_c^T U_h]
    Vec4 decay_h;          // e^{lambda^h_k t_h}
    Vec4 decay_c;          // e^{lambda^c_k t_c}
    EigenFrame frame_h;
    EigenFrame frame_c;
    lindblad::LiouvillianSpectrum spectrum_h;
    lindblad::LiouvillianSpectrum spectrum_c;

    // Half-cycle maps: state at the end of the cold stroke -> end of the hot stroke, and back.
    Vec4 cold_to_hot(const Vec4& c_c) const;
    Vec4 hot_to_cold(const Vec4& c_h) const;
};

enum class CycleKind { NELC, ELC };

struct ConvergenceReport {
    int cycles_run = 0;
    double final_residual = 0.0;       // trace norm between successive end-of-cycle states
    double subdominant_modulus = 0.0;
};

struct LimitCycleSolution {
    DensityMatrix rho_h;  // end of hot stroke, original basis
    DensityMatrix rho_c;  // end of cold stroke, original basis
    Vec4 coeffs_h;
    Vec4 coeffs_c;
    CycleKind kind;
};

struct NelcResult {
    LimitCycleSolution solution;
    ConvergenceReport report;
};

struct Trajectory {
    std::vector<DensityMatrix> states;  // states[n] = end of cycle n (states[0] = rho0)
    std::vector<double> residuals;      // residuals[n] = ||states[n+1] - states[n]||_1
    ConvergenceReport report;           // subdominant_modulus estimated from the residual tail
};

struct FloquetReport {
    int peripheral_count = 0;
    double subdominant_modulus = 0.0;
};

// Both strokes' global spectra with positive durations; rejects the omega = 0
// symmetry point through DegenerateError.
CycleMapMatrices build_cycle_map(const CycleParams& params, const lindblad::BathSpec& bath);

// Fixed point of the cycle map with c_0 = 1. Throws DegenerateError when the
// unit eigenvalue is not simple and NumericalError when the reconstructed
// state is not positive within -1e-9.
NelcResult solve_nelc(const CycleParams& params, const lindblad::BathSpec& bath);

// Same, reusing an already assembled map.
NelcResult solve_nelc(const CycleMapMatrices& mats);

// Stationary states of both strokes (infinite stroke durations).
LimitCycleSolution elc_state(const CycleParams& params, const lindblad::BathSpec& bath);

// Brute-force iteration of the cycle from rho0 (original basis).
Trajectory iterate_cycle(const DensityMatrix& rho0, const CycleParams& params,
                         const lindblad::BathSpec& bath, int n_cycles);

// One full cycle applied to an original-basis state.
DensityMatrix apply_cycle(const DensityMatrix& rho, const CycleParams& params,
                          const lindblad::BathSpec& bath);

FloquetReport floquet_check(const CycleMapMatrices& mats);

// Decay ratio per cycle estimated from a residual sequence (geometric mean over
// the part of the tail above the round-off floor). Returns 0 if fewer than two
// usable residuals exist.
double residual_decay_ratio(const std::vector<double>& residuals, double floor = 1e-13);

} // namespace otto::limit_cycle
