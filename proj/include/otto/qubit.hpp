// qubit.hpp: Coupled qubit Hamiltonian, cycle parameters, density matrices and eigenframes

#pragma once

#include <string>
#include <string_view>

#include "otto/types.hpp"

namespace otto {

enum class Basis { Original, EigenH, EigenC };

std::string_view to_string(Basis b);

// The six physical parameters of the cycle plus the two stroke durations.
// Hot bath must be hotter (beta_h < beta_c) and omega_h >= omega_c.
class CycleParams {
public:
    CycleParams(double omega_h, double omega_c, double g_h, double g_c,
                double beta_h, double beta_c, double t_h = 0.0, double t_c = 0.0);

    double omega_h() const { return omega_h_; }
    double omega_c() const { return omega_c_; }
    double g_h() const { return g_h_; }
    double g_c() const { return g_c_; }
    double beta_h() const { return beta_h_; }
    double beta_c() const { return beta_c_; }
    double t_h() const { return t_h_; }
    double t_c() const { return t_c_; }

    // Copy with one named field replaced; names are omega_h, omega_c, g_h, g_c,
    // beta_h, beta_c, t_h, t_c and tau (sets both durations).
    CycleParams with(std::string_view name, double value) const;

    // Same, for both stroke durations.
    CycleParams with_tau(double tau) const { return with("tau", tau); }

    double get(std::string_view name) const;

private:
    double omega_h_, omega_c_, g_h_, g_c_, beta_h_, beta_c_, t_h_, t_c_;
};

// 2x2 Hermitian unit-trace positive matrix, tagged with the basis it is written in.
class DensityMatrix {
public:
    // Validates Hermiticity (1e-12), unit trace (1e-12) and positivity (-1e-10).
    DensityMatrix(const Mat2& entries, Basis basis);

    // Symmetrizes and renormalizes before validating; for results of numerical maps.
    static DensityMatrix from_numeric(const Mat2& entries, Basis basis);

    static DensityMatrix maximally_mixed(Basis basis = Basis::Original);
    static DensityMatrix ground(Basis basis = Basis::Original);

    const Mat2& entries() const { return entries_; }
    Basis basis() const { return basis_; }
    cplx operator()(int i, int j) const { return entries_(i, j); }

private:
    Mat2 entries_;
    Basis basis_;
};

// Diagonalization data of one stroke's Hamiltonian.
// Columns of u are P- (ground) and P+ (excited). The eigenvector gauge is chosen
// so that u is a proper rotation that reduces to the identity at g = 0.
struct EigenFrame {
    double eps_minus{};
    double eps_plus{};
    double theta{};        // radians, theta = atan(eps_plus / g), pi/2 at g = 0
    double delta{};        // sqrt(g^2 + omega^2/4)
    double omega_tilde{};  // eps_plus - eps_minus
    RealMat2 u = RealMat2::Identity();
    Basis basis = Basis::EigenH;

    // cos^2(2 theta): weight of the sigma_x bath coupling on the dressed transition.
    double transition_weight() const;
};

// [[0, g], [g, omega]]
RealMat2 build_hamiltonian(double omega, double g);

EigenFrame eigenframe(double omega, double g, Basis tag = Basis::EigenH);

// Frames of both strokes, tagged EigenH / EigenC.
EigenFrame hot_frame(const CycleParams& p);
EigenFrame cold_frame(const CycleParams& p);

// u^T rho u; rho must be in the Original basis.
DensityMatrix to_eigenbasis(const DensityMatrix& rho, const EigenFrame& frame);

// u rho u^T; rho must carry the frame's basis tag.
DensityMatrix from_eigenbasis(const DensityMatrix& rho, const EigenFrame& frame);

} // namespace otto
