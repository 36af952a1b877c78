// limit_cycle.cpp: Stroboscopic one-cycle map, NELC/ELC limit cycles and the iteration oracle

#include "otto/limit_cycle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace otto::limit_cycle {

namespace {

using lindblad::LiouvillianSpectrum;

// (k, i) = Tr[to.left[k] R from.right[i] R^T], R = U_to^T U_from
SuperOp overlap(const LiouvillianSpectrum& to, const EigenFrame& to_frame,
                const LiouvillianSpectrum& from, const EigenFrame& from_frame) {
    const Mat2 r = (to_frame.u.transpose() * from_frame.u).cast<cplx>();
    SuperOp o;
    for (int i = 0; i < 4; ++i) {
        const Mat2 moved = r * from.right[i] * r.transpose();
        for (int k = 0; k < 4; ++k) {
            o(k, i) = (to.left[k] * moved).trace();
        }
    }
    return o;
}

// Long strokes leave entries near the underflow limit, where the QR iteration
// of the eigensolver stalls. Anything this small is invisible next to the unit mode.
SuperOp flush_tiny(const SuperOp& m) {
    return m.unaryExpr([](const cplx& z) { return std::abs(z) < 1e-100 ? cplx(0.0) : z; });
}

Vec4 decay_factors(const LiouvillianSpectrum& s, double t) {
    Vec4 d;
    for (int k = 0; k < 4; ++k) d(k) = std::exp(s.eigenvalues[k] * t);
    return d;
}

Mat2 reconstruct(const LiouvillianSpectrum& s, const Vec4& c) {
    Mat2 out = Mat2::Zero();
    for (int k = 0; k < 4; ++k) out += c(k) * s.right[k];
    return out;
}

DensityMatrix physical_state(const LiouvillianSpectrum& s, const EigenFrame& frame, const Vec4& c) {
    Mat2 eig = hermitize(reconstruct(s, c));
    const double lo = min_eigenvalue(eig);
    if (lo < -1e-9) {
        throw NumericalError("limit-cycle state is not positive (min eigenvalue " +
                             std::to_string(lo) + ")");
    }
    if (lo < 0.0) eig -= lo * Mat2::Identity();
    const Mat2 u = frame.u.cast<cplx>();
    return DensityMatrix::from_numeric(u * eig * u.transpose(), Basis::Original);
}

void require_durations(const CycleParams& p) {
    if (!(p.t_h() > 0.0) || !(p.t_c() > 0.0)) {
        throw std::invalid_argument("cycle map needs positive stroke durations t_h, t_c");
    }
}

} // namespace

Vec4 CycleMapMatrices::cold_to_hot(const Vec4& c_c) const {
    return decay_h.cwiseProduct(overlap_h_from_c * c_c);
}

Vec4 CycleMapMatrices::hot_to_cold(const Vec4& c_h) const {
    return decay_c.cwiseProduct(overlap_c_from_h * c_h);
}

CycleMapMatrices build_cycle_map(const CycleParams& p, const lindblad::BathSpec& bath) {
    require_durations(p);
    CycleMapMatrices m{.m_h = {}, .m_c = {}, .overlap_c_from_h = {}, .overlap_h_from_c = {},
                       .decay_h = {}, .decay_c = {},
                       .frame_h = hot_frame(p), .frame_c = cold_frame(p),
                       .spectrum_h = {}, .spectrum_c = {}};
    m.spectrum_h = lindblad::global_spectrum(m.frame_h, p.beta_h(), bath);
    m.spectrum_c = lindblad::global_spectrum(m.frame_c, p.beta_c(), bath);
    m.overlap_c_from_h = overlap(m.spectrum_c, m.frame_c, m.spectrum_h, m.frame_h);
    m.overlap_h_from_c = overlap(m.spectrum_h, m.frame_h, m.spectrum_c, m.frame_c);
    m.decay_h = decay_factors(m.spectrum_h, p.t_h());
    m.decay_c = decay_factors(m.spectrum_c, p.t_c());

    const SuperOp dh = m.decay_h.asDiagonal();
    const SuperOp dc = m.decay_c.asDiagonal();
    m.m_h = dh * m.overlap_h_from_c * dc * m.overlap_c_from_h;
    m.m_c = dc * m.overlap_c_from_h * dh * m.overlap_h_from_c;
    return m;
}

FloquetReport floquet_check(const CycleMapMatrices& mats) {
    Eigen::ComplexEigenSolver<SuperOp> solver(flush_tiny(mats.m_c), false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigenvalues of the cycle map could not be computed");
    }
    FloquetReport r;
    for (int k = 0; k < 4; ++k) {
        const double modulus = std::abs(solver.eigenvalues()(k));
        if (std::abs(modulus - 1.0) <= 1e-10) {
            ++r.peripheral_count;
        } else {
            r.subdominant_modulus = std::max(r.subdominant_modulus, modulus);
        }
    }
    return r;
}

NelcResult solve_nelc(const CycleMapMatrices& mats) {
    const FloquetReport fl = floquet_check(mats);
    if (fl.peripheral_count != 1) {
        throw DegenerateError("cycle map is not primitive: " + std::to_string(fl.peripheral_count) +
                              " unimodular eigenvalues");
    }
    Eigen::ComplexEigenSolver<SuperOp> solver(flush_tiny(mats.m_c), true);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigen-decomposition of the cycle map failed");
    }
    int best = 0;
    for (int k = 1; k < 4; ++k) {
        if (std::abs(solver.eigenvalues()(k) - 1.0) < std::abs(solver.eigenvalues()(best) - 1.0)) {
            best = k;
        }
    }
    Vec4 c_c = solver.eigenvectors().col(best);
    if (std::abs(c_c(0)) < 1e-12) {
        throw DegenerateError("fixed point of the cycle map carries no trace");
    }
    c_c /= c_c(0);
    c_c(0) = 1.0;
    Vec4 c_h = mats.cold_to_hot(c_c);
    c_h(0) = 1.0;

    const Vec4 next = mats.hot_to_cold(c_h);
    const double residual = trace_norm(reconstruct(mats.spectrum_c, next - c_c));

    NelcResult out{
        .solution = {.rho_h = physical_state(mats.spectrum_h, mats.frame_h, c_h),
                     .rho_c = physical_state(mats.spectrum_c, mats.frame_c, c_c),
                     .coeffs_h = c_h,
                     .coeffs_c = c_c,
                     .kind = CycleKind::NELC},
        .report = {.cycles_run = 0, .final_residual = residual,
                   .subdominant_modulus = fl.subdominant_modulus}};
    return out;
}

NelcResult solve_nelc(const CycleParams& params, const lindblad::BathSpec& bath) {
    return solve_nelc(build_cycle_map(params, bath));
}

LimitCycleSolution elc_state(const CycleParams& p, const lindblad::BathSpec& bath) {
    const EigenFrame fh = hot_frame(p);
    const EigenFrame fc = cold_frame(p);
    const auto sh = lindblad::global_spectrum(fh, p.beta_h(), bath);
    const auto sc = lindblad::global_spectrum(fc, p.beta_c(), bath);
    const Vec4 unit(1.0, 0.0, 0.0, 0.0);
    return {.rho_h = physical_state(sh, fh, unit),
            .rho_c = physical_state(sc, fc, unit),
            .coeffs_h = unit,
            .coeffs_c = unit,
            .kind = CycleKind::ELC};
}

namespace {

struct StrokeData {
    EigenFrame frame;
    LiouvillianSpectrum spectrum;
    double duration;
};

DensityMatrix run_stroke(const DensityMatrix& rho, const StrokeData& s) {
    const auto eig = to_eigenbasis(rho, s.frame);
    return from_eigenbasis(lindblad::propagate(eig, s.spectrum, s.duration), s.frame);
}

std::pair<StrokeData, StrokeData> strokes(const CycleParams& p, const lindblad::BathSpec& bath) {
    require_durations(p);
    StrokeData hot{hot_frame(p), {}, p.t_h()};
    StrokeData cold{cold_frame(p), {}, p.t_c()};
    hot.spectrum = lindblad::global_spectrum(hot.frame, p.beta_h(), bath);
    cold.spectrum = lindblad::global_spectrum(cold.frame, p.beta_c(), bath);
    return {hot, cold};
}

} // namespace

DensityMatrix apply_cycle(const DensityMatrix& rho, const CycleParams& params,
                          const lindblad::BathSpec& bath) {
    const auto [hot, cold] = strokes(params, bath);
    return run_stroke(run_stroke(rho, hot), cold);
}

Trajectory iterate_cycle(const DensityMatrix& rho0, const CycleParams& params,
                         const lindblad::BathSpec& bath, int n_cycles) {
    if (n_cycles < 1) {
        throw std::invalid_argument("iterate_cycle needs n_cycles >= 1");
    }
    if (rho0.basis() != Basis::Original) {
        throw ContractError("iterate_cycle expects an initial state in the original basis");
    }
    const auto [hot, cold] = strokes(params, bath);
    Trajectory tr;
    tr.states.reserve(static_cast<std::size_t>(n_cycles) + 1);
    tr.residuals.reserve(static_cast<std::size_t>(n_cycles));
    tr.states.push_back(rho0);
    for (int n = 0; n < n_cycles; ++n) {
        auto next = run_stroke(run_stroke(tr.states.back(), hot), cold);
        tr.residuals.push_back(trace_norm(next.entries() - tr.states.back().entries()));
        tr.states.push_back(std::move(next));
    }
    tr.report.cycles_run = n_cycles;
    tr.report.final_residual = tr.residuals.back();
    tr.report.subdominant_modulus = residual_decay_ratio(tr.residuals);
    return tr;
}

double residual_decay_ratio(const std::vector<double>& residuals, double floor) {
    std::size_t usable = 0;
    while (usable < residuals.size() && residuals[usable] > floor) ++usable;
    if (usable < 3) return 0.0;
    const std::size_t a = usable / 2;
    const std::size_t b = usable - 1;
    if (b <= a) return 0.0;
    return std::pow(residuals[b] / residuals[a], 1.0 / static_cast<double>(b - a));
}

} // namespace otto::limit_cycle
