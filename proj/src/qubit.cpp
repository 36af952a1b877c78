// qubit.cpp: Coupled qubit Hamiltonian, cycle parameters, density matrices and eigenframes

#include "otto/qubit.hpp"

#include <cmath>
#include <numbers>

namespace otto {

namespace {

// Eigenvalues of the Hermitian part of m, ascending.
std::pair<double, double> hermitian_eigenvalues(const Mat2& m) {
    const Mat2 h = hermitize(m);
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
    return {mean - radius, mean + radius};
}

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

} // namespace

double trace_norm(const Mat2& m) {
    const auto [lo, hi] = hermitian_eigenvalues(m);
    return std::abs(lo) + std::abs(hi);
}

double min_eigenvalue(const Mat2& m) {
    return hermitian_eigenvalues(m).first;
}

std::string_view to_string(Basis b) {
    switch (b) {
    case Basis::Original: return "original";
    case Basis::EigenH: return "eigen_h";
    case Basis::EigenC: return "eigen_c";
    }
    return "?";
}

CycleParams::CycleParams(double omega_h, double omega_c, double g_h, double g_c,
                         double beta_h, double beta_c, double t_h, double t_c)
    : omega_h_(omega_h), omega_c_(omega_c), g_h_(g_h), g_c_(g_c),
      beta_h_(beta_h), beta_c_(beta_c), t_h_(t_h), t_c_(t_c) {
    for (auto [v, n] : {std::pair{omega_h, "omega_h"}, {omega_c, "omega_c"}, {g_h, "g_h"},
                        {g_c, "g_c"}, {beta_h, "beta_h"}, {beta_c, "beta_c"},
                        {t_h, "t_h"}, {t_c, "t_c"}}) {
        require_finite(v, n);
    }
    if (omega_h <= 0.0 || omega_c <= 0.0) {
        throw std::invalid_argument("omega_h and omega_c must be positive");
    }
    if (beta_h <= 0.0 || beta_c <= 0.0) {
        throw std::invalid_argument("beta_h and beta_c must be positive");
    }
    if (g_h < 0.0 || g_c < 0.0) {
        throw std::invalid_argument("coupling strengths must be non-negative");
    }
    if (t_h < 0.0 || t_c < 0.0) {
        throw std::invalid_argument("stroke durations must be non-negative");
    }
    if (!(beta_h < beta_c)) {
        throw std::invalid_argument("hot bath must be hotter: beta_h < beta_c");
    }
    if (omega_h < omega_c) {
        throw std::invalid_argument("omega_h >= omega_c is required");
    }
}

CycleParams CycleParams::with(std::string_view name, double value) const {
    double oh = omega_h_, oc = omega_c_, gh = g_h_, gc = g_c_;
    double bh = beta_h_, bc = beta_c_, th = t_h_, tc = t_c_;
    if (name == "omega_h") oh = value;
    else if (name == "omega_c") oc = value;
    else if (name == "g_h") gh = value;
    else if (name == "g_c") gc = value;
    else if (name == "beta_h") bh = value;
    else if (name == "beta_c") bc = value;
    else if (name == "t_h") th = value;
    else if (name == "t_c") tc = value;
    else if (name == "tau") th = tc = value;
    else throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
    return {oh, oc, gh, gc, bh, bc, th, tc};
}

double CycleParams::get(std::string_view name) const {
    if (name == "omega_h") return omega_h_;
    if (name == "omega_c") return omega_c_;
    if (name == "g_h") return g_h_;
    if (name == "g_c") return g_c_;
    if (name == "beta_h") return beta_h_;
    if (name == "beta_c") return beta_c_;
    if (name == "t_h") return t_h_;
    if (name == "t_c") return t_c_;
    if (name == "tau") return t_h_;
    throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

DensityMatrix::DensityMatrix(const Mat2& entries, Basis basis) : entries_(entries), basis_(basis) {
    if (!entries.allFinite()) {
        throw std::invalid_argument("density matrix has non-finite entries");
    }
    if (std::abs(entries(1, 0) - std::conj(entries(0, 1))) > 1e-12 ||
        std::abs(entries(0, 0).imag()) > 1e-12 || std::abs(entries(1, 1).imag()) > 1e-12) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(entries.trace() - 1.0) > 1e-12) {
        throw std::invalid_argument("density matrix trace differs from 1");
    }
    if (min_eigenvalue(entries) < -1e-10) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::from_numeric(const Mat2& entries, Basis basis) {
    Mat2 h = hermitize(entries);
    h(0, 0) = h(0, 0).real();
    h(1, 1) = h(1, 1).real();
    const double tr = h.trace().real();
    if (!(tr > 0.0)) {
        throw NumericalError("state has non-positive trace");
    }
    return {h / tr, basis};
}

DensityMatrix DensityMatrix::maximally_mixed(Basis basis) {
    return {Mat2::Identity() * 0.5, basis};
}

DensityMatrix DensityMatrix::ground(Basis basis) {
    Mat2 m = Mat2::Zero();
    m(0, 0) = 1.0;
    return {m, basis};
}

double EigenFrame::transition_weight() const {
    const double c = std::cos(2.0 * theta);
    return c * c;
}

RealMat2 build_hamiltonian(double omega, double g) {
    require_finite(omega, "omega");
    require_finite(g, "g");
    RealMat2 h;
    h << 0.0, g, g, omega;
    return h;
}

EigenFrame eigenframe(double omega, double g, Basis tag) {
    require_finite(omega, "omega");
    require_finite(g, "g");
    if (omega <= 0.0) throw std::invalid_argument("omega must be positive");
    if (g < 0.0) throw std::invalid_argument("g must be non-negative");
    if (tag == Basis::Original) throw std::invalid_argument("eigenframe needs a stroke tag");

    EigenFrame f;
    f.basis = tag;
    f.delta = std::hypot(g, 0.5 * omega);
    f.omega_tilde = 2.0 * f.delta;
    f.eps_plus = 0.5 * omega + f.delta;
    // eps_plus * eps_minus = -g^2 avoids cancellation for g << omega.
    f.eps_minus = -(g * g) / f.eps_plus;
    f.theta = std::atan2(f.eps_plus, g);
    const double s = std::sin(f.theta);
    const double c = std::cos(f.theta);
    if (g == 0.0) {
        f.u = RealMat2::Identity();
    } else {
        // P- = (sin, -cos), P+ = (cos, sin)
        f.u << s, c, -c, s;
    }
    return f;
}

EigenFrame hot_frame(const CycleParams& p) {
    return eigenframe(p.omega_h(), p.g_h(), Basis::EigenH);
}

EigenFrame cold_frame(const CycleParams& p) {
    return eigenframe(p.omega_c(), p.g_c(), Basis::EigenC);
}

DensityMatrix to_eigenbasis(const DensityMatrix& rho, const EigenFrame& frame) {
    if (rho.basis() != Basis::Original) {
        throw ContractError("to_eigenbasis expects a state in the original basis, got " +
                            std::string(to_string(rho.basis())));
    }
    const Mat2 u = frame.u.cast<cplx>();
    return DensityMatrix::from_numeric(u.transpose() * rho.entries() * u, frame.basis);
}

DensityMatrix from_eigenbasis(const DensityMatrix& rho, const EigenFrame& frame) {
    if (rho.basis() != frame.basis) {
        throw ContractError("from_eigenbasis: state basis " + std::string(to_string(rho.basis())) +
                            " does not match frame basis " + std::string(to_string(frame.basis)));
    }
    const Mat2 u = frame.u.cast<cplx>();
    return DensityMatrix::from_numeric(u * rho.entries() * u.transpose(), Basis::Original);
}

} // namespace otto
