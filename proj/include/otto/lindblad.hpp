// lindblad.hpp: Ohmic bath rates, local/global GKSL Liouvillians and their spectra

#pragma once

#include <array>

#include "otto/qubit.hpp"

namespace otto::lindblad {

// Ohmic spectral density J(w) = gamma_scale * w * exp(-w / omega_cutoff).
struct BathSpec {
    double gamma_scale = 0.01;
    double omega_cutoff = 1e6;
    double s_exponent = 1.0;

    void validate() const;
};

// Default bath for a parameter point: gamma_scale = 0.01 and a cutoff
// 10^3 times the largest dressed gap, so the cutoff is inert.
BathSpec default_bath(const CycleParams& params, double gamma_scale = 0.01);

struct RateSet {
    double gamma_plus{};   // emission, gamma(+w)
    double gamma_minus{};  // absorption, gamma(-w)
    double gamma_zero{};   // dephasing weight gamma(0); zero for Ohmic baths
};

// Dressed rates of the global equation.
struct GlobalRates {
    RateSet bare;                // gamma(+-omega_tilde)
    double weight{};             // cos^2(2 theta)
    double Gamma_plus{};         // weight * gamma_plus
    double Gamma_minus{};
    double total() const { return Gamma_plus + Gamma_minus; }
};

// Four eigen-triples of a 4x4 Liouvillian. Expansion coefficients of a state
// are Tr[left[i] rho]; the reconstruction is sum_i coeff_i * right[i].
// Index 0 is the stationary mode.
struct LiouvillianSpectrum {
    std::array<cplx, 4> eigenvalues{};
    std::array<Mat2, 4> left{};
    std::array<Mat2, 4> right{};
    Basis basis = Basis::Original;
};

double spectral_density(double omega, const BathSpec& bath);

// 1 / (e^{beta omega} - 1); returns e^{-beta omega} once beta*omega > 700.
double bose_occupation(double beta, double omega);

// KMS rate: J(w)(n+1) for w > 0, J(|w|) n(|w|) for w < 0.
double rate(double omega_signed, double beta, const BathSpec& bath);

GlobalRates global_rates(const EigenFrame& frame, double beta, const BathSpec& bath);

// Eigenbasis Liouvillian with population block [[-G-, G+], [G-, -G+]] and
// coherences decaying at (G+ + G-)/2 while rotating at omega_tilde.
SuperOp global_liouvillian(const EigenFrame& frame, double beta, const BathSpec& bath);

// Closed-form spectrum of global_liouvillian. Throws DegenerateError when
// G+ + G- = 0 (no unique stationary state).
LiouvillianSpectrum global_spectrum(const EigenFrame& frame, double beta, const BathSpec& bath);

// Local (bare-level) GKSL generator in the original basis.
SuperOp local_liouvillian(double omega, double g, double beta, const BathSpec& bath);

// Numerical eigendecomposition of local_liouvillian, normalized so that
// Tr[right_i] = delta_i0 and Tr[left_i right_j] = delta_ij. Throws
// DegenerateError when two eigenvalues are closer than 1e-10.
LiouvillianSpectrum local_spectrum(double omega, double g, double beta, const BathSpec& bath);

// Eigen-decomposition of an arbitrary 4x4 generator, normalized as above.
LiouvillianSpectrum numeric_spectrum(const SuperOp& generator, Basis basis);

// The printed characteristic cubic of the local generator; its roots are the
// three non-zero eigenvalues.
cplx local_cubic(cplx lambda, double omega, double g, double gamma_plus, double gamma_minus);

// rho(t) = sum_i Tr[left_i rho] e^{lambda_i t} right_i, re-Hermitized and
// trace-renormalized.
DensityMatrix propagate(const DensityMatrix& rho, const LiouvillianSpectrum& spectrum, double t);

// Matrix of the propagator e^{L t} on flattened states, built from the spectrum.
SuperOp propagator(const LiouvillianSpectrum& spectrum, double t);

} // namespace otto::lindblad
