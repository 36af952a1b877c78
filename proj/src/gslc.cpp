// gslc.cpp: Gibbs-state limit cycle

#include "otto/gslc.hpp"

#include <cmath>

namespace otto::gslc {

namespace {

double clamped_tanh(double x) {
    if (x > 350.0) return 1.0;
    if (x < -350.0) return -1.0;
    return std::tanh(x);
}

double half_gap(double omega, double g) {
    return std::hypot(g, 0.5 * omega);
}

void validate(double omega, double g, double beta) {
    if (!std::isfinite(omega) || !std::isfinite(g) || !std::isfinite(beta)) {
        throw std::invalid_argument("gibbs parameters must be finite");
    }
    if (omega <= 0.0 || g < 0.0 || beta <= 0.0) {
        throw std::invalid_argument("gibbs parameters need omega > 0, g >= 0, beta > 0");
    }
}

} // namespace

DensityMatrix gibbs_state(double omega, double g, double beta) {
    validate(omega, g, beta);
    const double delta = half_gap(omega, g);
    const double t = clamped_tanh(beta * delta) / delta;
    Mat2 rho;
    rho << 0.5 * (1.0 + 0.5 * omega * t), -0.5 * g * t,
           -0.5 * g * t, 0.5 * (1.0 - 0.5 * omega * t);
    return DensityMatrix::from_numeric(rho, Basis::Original);
}

double coherence_f(double omega, double g, double beta) {
    validate(omega, g, beta);
    const double delta = half_gap(omega, g);
    return -(g / delta) * clamped_tanh(beta * delta);
}

ClosedFormFlows gslc_energy_flows(const CycleParams& p) {
    const double dh = half_gap(p.omega_h(), p.g_h());
    const double dc = half_gap(p.omega_c(), p.g_c());
    const double th = clamped_tanh(p.beta_h() * dh);
    const double tc = clamped_tanh(p.beta_c() * dc);
    const double gh = p.g_h(), gc = p.g_c(), oh = p.omega_h(), oc = p.omega_c();

    const double cross = gc * gh + oc * oh / 4.0;
    ClosedFormFlows out{};
    out.q_h = cross * tc / dc - dh * th;
    out.q_c = cross * th / dh - dc * tc;
    out.w = (gc * (gc - gh) + oc * (oc - oh) / 4.0) * tc / dc +
            (gh * (gh - gc) + oh * (oh - oc) / 4.0) * th / dh;
    return out;
}

GibbsPair gslc_limit_cycle(const CycleParams& p) {
    auto rho_h = gibbs_state(p.omega_h(), p.g_h(), p.beta_h());
    auto rho_c = gibbs_state(p.omega_c(), p.g_c(), p.beta_c());
    const double f_h = (rho_h(0, 1) + rho_h(1, 0)).real();
    const double f_c = (rho_c(0, 1) + rho_c(1, 0)).real();
    return {std::move(rho_h), std::move(rho_c), f_h, f_c};
}

} // namespace otto::gslc
