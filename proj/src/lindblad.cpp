// lindblad.cpp: Ohmic bath rates, local/global GKSL Liouvillians and their spectra

#include "otto/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace otto::lindblad {

namespace {

constexpr cplx I{0.0, 1.0};

// Left eigenmatrix sigma with Tr[sigma rho] = l . flatten(rho).
Mat2 left_from_row(const Eigen::RowVector4cd& l) {
    Mat2 s;
    s << l(0), l(2), l(1), l(3);
    return s;
}

} // namespace

void BathSpec::validate() const {
    if (!(gamma_scale > 0.0) || !std::isfinite(gamma_scale)) {
        throw std::invalid_argument("bath gamma_scale must be positive");
    }
    if (!(omega_cutoff > 0.0) || !std::isfinite(omega_cutoff)) {
        throw std::invalid_argument("bath omega_cutoff must be positive");
    }
    if (s_exponent != 1.0) {
        throw std::invalid_argument("only Ohmic baths (s = 1) are supported");
    }
}

BathSpec default_bath(const CycleParams& p, double gamma_scale) {
    const double gap = std::max(hot_frame(p).omega_tilde, cold_frame(p).omega_tilde);
    BathSpec b;
    b.gamma_scale = gamma_scale;
    b.omega_cutoff = 1e3 * gap;
    return b;
}

double spectral_density(double omega, const BathSpec& bath) {
    bath.validate();
    if (!(omega > 0.0)) {
        throw std::invalid_argument("spectral_density needs omega > 0");
    }
    return bath.gamma_scale * omega * std::exp(-omega / bath.omega_cutoff);
}

double bose_occupation(double beta, double omega) {
    const double x = beta * omega;
    if (!(x > 0.0)) {
        throw std::invalid_argument("bose_occupation needs beta * omega > 0");
    }
    if (x > 700.0) return std::exp(-x);
    return 1.0 / std::expm1(x);
}

double rate(double omega_signed, double beta, const BathSpec& bath) {
    if (omega_signed == 0.0 || !std::isfinite(omega_signed)) {
        throw std::invalid_argument("rate is undefined at omega = 0");
    }
    const double w = std::abs(omega_signed);
    const double j = spectral_density(w, bath);
    const double n = bose_occupation(beta, w);
    return omega_signed > 0.0 ? j * (n + 1.0) : j * n;
}

GlobalRates global_rates(const EigenFrame& frame, double beta, const BathSpec& bath) {
    GlobalRates r;
    r.bare.gamma_plus = rate(frame.omega_tilde, beta, bath);
    r.bare.gamma_minus = rate(-frame.omega_tilde, beta, bath);
    r.bare.gamma_zero = 0.0;
    r.weight = frame.transition_weight();
    r.Gamma_plus = r.weight * r.bare.gamma_plus;
    r.Gamma_minus = r.weight * r.bare.gamma_minus;
    return r;
}

SuperOp global_liouvillian(const EigenFrame& frame, double beta, const BathSpec& bath) {
    const auto r = global_rates(frame, beta, bath);
    const double half = 0.5 * r.total();
    SuperOp l = SuperOp::Zero();
    l(0, 0) = -r.Gamma_minus;
    l(0, 3) = r.Gamma_plus;
    l(3, 0) = r.Gamma_minus;
    l(3, 3) = -r.Gamma_plus;
    l(1, 1) = cplx(-half, frame.omega_tilde);
    l(2, 2) = cplx(-half, -frame.omega_tilde);
    return l;
}

LiouvillianSpectrum global_spectrum(const EigenFrame& frame, double beta, const BathSpec& bath) {
    const auto r = global_rates(frame, beta, bath);
    const double sum = r.total();
    if (!(sum > 0.0)) {
        throw DegenerateError("global Liouvillian has no dissipation (G+ + G- = 0)");
    }
    LiouvillianSpectrum s;
    s.basis = frame.basis;
    s.eigenvalues = {cplx(0.0), cplx(-0.5 * sum, frame.omega_tilde),
                     cplx(-0.5 * sum, -frame.omega_tilde), cplx(-sum)};

    s.left[0] = Mat2::Identity();
    s.left[1] << 0.0, 0.0, 1.0, 0.0;
    s.left[2] << 0.0, 1.0, 0.0, 0.0;
    s.left[3] << r.Gamma_minus, 0.0, 0.0, -r.Gamma_plus;

    s.right[0] << r.Gamma_plus / sum, 0.0, 0.0, r.Gamma_minus / sum;
    s.right[1] << 0.0, 1.0, 0.0, 0.0;
    s.right[2] << 0.0, 0.0, 1.0, 0.0;
    s.right[3] << 1.0 / sum, 0.0, 0.0, -1.0 / sum;
    return s;
}

SuperOp local_liouvillian(double omega, double g, double beta, const BathSpec& bath) {
    if (!(omega > 0.0) || g < 0.0) {
        throw std::invalid_argument("local_liouvillian needs omega > 0, g >= 0");
    }
    const double gp = rate(omega, beta, bath);
    const double gm = rate(-omega, beta, bath);
    const double half = 0.5 * (gp + gm);
    SuperOp l;
    l << -gm, I * g, -I * g, gp,
         I * g, cplx(-half, omega), 0.0, -I * g,
         -I * g, 0.0, cplx(-half, -omega), I * g,
         gm, -I * g, I * g, -gp;
    return l;
}

LiouvillianSpectrum numeric_spectrum(const SuperOp& generator, Basis basis) {
    Eigen::ComplexEigenSolver<SuperOp> solver(generator, true);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigen-decomposition of the Liouvillian failed");
    }
    const Vec4 vals = solver.eigenvalues();
    SuperOp vecs = solver.eigenvectors();

    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (std::abs(vals(i) - vals(j)) < 1e-10) {
                throw DegenerateError("Liouvillian eigenvalues are (nearly) degenerate");
            }
        }
    }

    // Stationary mode first, the rest in descending real part (then imaginary part).
    std::array<int, 4> order{};
    std::iota(order.begin(), order.end(), 0);
    const int zero = static_cast<int>(
        std::min_element(order.begin(), order.end(),
                         [&](int a, int b) { return std::abs(vals(a)) < std::abs(vals(b)); }) -
        order.begin());
    std::swap(order[0], order[zero]);
    std::sort(order.begin() + 1, order.end(), [&](int a, int b) {
        if (vals(a).real() != vals(b).real()) return vals(a).real() > vals(b).real();
        return vals(a).imag() > vals(b).imag();
    });

    SuperOp right;
    for (int k = 0; k < 4; ++k) right.col(k) = vecs.col(order[k]);
    const cplx tr0 = right(0, 0) + right(3, 0);
    if (std::abs(tr0) < 1e-14) {
        throw NumericalError("stationary mode has vanishing trace");
    }
    right.col(0) /= tr0;
    const SuperOp left = right.inverse();

    LiouvillianSpectrum s;
    s.basis = basis;
    for (int k = 0; k < 4; ++k) {
        s.eigenvalues[k] = vals(order[k]);
        s.right[k] = unflatten(right.col(k));
        s.left[k] = left_from_row(left.row(k));
    }
    return s;
}

LiouvillianSpectrum local_spectrum(double omega, double g, double beta, const BathSpec& bath) {
    return numeric_spectrum(local_liouvillian(omega, g, beta, bath), Basis::Original);
}

cplx local_cubic(cplx lambda, double omega, double g, double gp, double gm) {
    const cplx sum = gm + gp;
    return 8.0 * g * g * (sum + 2.0 * lambda) +
           (sum + lambda) * (gm * gm + gp * gp + 4.0 * gp * lambda +
                             2.0 * gm * (gp + 2.0 * lambda) + 4.0 * (lambda * lambda + omega * omega));
}

SuperOp propagator(const LiouvillianSpectrum& s, double t) {
    SuperOp out = SuperOp::Zero();
    for (int k = 0; k < 4; ++k) {
        const cplx decay = std::exp(s.eigenvalues[k] * t);
        // |right_k> <left_k| with <left_k| rho> = Tr[left_k rho]
        const Vec4 r = flatten(s.right[k]);
        const Vec4 l = flatten(s.left[k].transpose());
        out += decay * r * l.transpose();
    }
    return out;
}

DensityMatrix propagate(const DensityMatrix& rho, const LiouvillianSpectrum& s, double t) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("propagate needs t >= 0");
    }
    if (rho.basis() != s.basis) {
        throw ContractError("propagate: state basis " + std::string(to_string(rho.basis())) +
                            " does not match spectrum basis " + std::string(to_string(s.basis)));
    }
    Mat2 out = Mat2::Zero();
    for (int k = 0; k < 4; ++k) {
        const cplx c = (s.left[k] * rho.entries()).trace();
        const cplx decay = std::exp(s.eigenvalues[k] * t);
        out += c * decay * s.right[k];
    }
    return DensityMatrix::from_numeric(out, rho.basis());
}

} // namespace otto::lindblad
