// thermo.cpp: Energy flows, operating regimes, efficiency/COP/power and the coherence predicates

#include "otto/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "otto/gslc.hpp"

namespace otto::thermo {

namespace {

Comparison compare(double a, double b, double band) {
    const double d = a - b;
    if (std::abs(d) <= band) return Comparison::Equal;
    return d > 0.0 ? Comparison::Greater : Comparison::Less;
}

int sign(Comparison c) {
    switch (c) {
    case Comparison::Less: return -1;
    case Comparison::Equal: return 0;
    case Comparison::Greater: return 1;
    }
    return 0;
}

Comparison from_sign(int s) {
    return s > 0 ? Comparison::Greater : (s < 0 ? Comparison::Less : Comparison::Equal);
}

double real_trace(const Mat2& m) {
    const cplx t = m.trace();
    if (std::abs(t.imag()) > 1e-12) {
        throw NumericalError("energy trace has an imaginary residue of " + std::to_string(t.imag()));
    }
    return t.real();
}

} // namespace

std::string_view to_string(Regime r) {
    switch (r) {
    case Regime::Engine: return "engine";
    case Regime::Refrigerator: return "refrigerator";
    case Regime::None: return "none";
    }
    return "none";
}

std::string_view to_string(Comparison c) {
    switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Equal: return "equal";
    case Comparison::Greater: return "greater";
    }
    return "equal";
}

EnergyFlows energy_flows(const DensityMatrix& rho_h, const DensityMatrix& rho_c,
                         const RealMat2& h_h, const RealMat2& h_c) {
    if (rho_h.basis() != Basis::Original || rho_c.basis() != Basis::Original) {
        throw ContractError("energy_flows expects states in the original basis");
    }
    const Mat2 hh = h_h.cast<cplx>();
    const Mat2 hc = h_c.cast<cplx>();
    const Mat2& a = rho_h.entries();
    const Mat2& b = rho_c.entries();
    EnergyFlows f;
    f.q_h = real_trace(hh * (a - b));
    f.q_c = real_trace(hc * (b - a));
    f.w_1 = real_trace((hc - hh) * a);
    f.w_2 = real_trace((hh - hc) * b);
    f.w = f.w_1 + f.w_2;
    return f;
}

EnergyFlows energy_flows(const DensityMatrix& rho_h, const DensityMatrix& rho_c,
                         const CycleParams& p) {
    return energy_flows(rho_h, rho_c, build_hamiltonian(p.omega_h(), p.g_h()),
                        build_hamiltonian(p.omega_c(), p.g_c()));
}

double flow_dead_band(const CycleParams& p) {
    return 1e-12 * std::max(p.omega_h(), p.omega_c());
}

RegimeReport classify(const EnergyFlows& f, double eps) {
    RegimeReport r;
    if (f.w < -eps && f.q_h > eps && f.q_c < -eps) {
        r.regime = Regime::Engine;
        r.figure_of_merit = -f.w / f.q_h;
    } else if (f.w > eps && f.q_h < -eps && f.q_c > eps) {
        r.regime = Regime::Refrigerator;
        r.figure_of_merit = f.q_c / f.w;
    }
    return r;
}

RegimeReport classify(const EnergyFlows& f, double eps, double t_h, double t_c) {
    RegimeReport r = classify(f, eps);
    if (r.regime == Regime::Engine) r.power = power(f, t_h, t_c, eps);
    return r;
}

double efficiency(const EnergyFlows& f, double eps) {
    const auto r = classify(f, eps);
    if (r.regime != Regime::Engine) {
        throw ContractError("efficiency is only defined in the engine regime");
    }
    return *r.figure_of_merit;
}

double cop(const EnergyFlows& f, double eps) {
    const auto r = classify(f, eps);
    if (r.regime != Regime::Refrigerator) {
        throw ContractError("COP is only defined in the refrigerator regime");
    }
    return *r.figure_of_merit;
}

double power(const EnergyFlows& f, double t_h, double t_c, double eps) {
    const double total = t_h + t_c;
    if (!(total > 0.0)) {
        throw std::invalid_argument("power needs a positive cycle duration");
    }
    if (classify(f, eps).regime != Regime::Engine) {
        throw ContractError("power is only defined in the engine regime");
    }
    return -f.w / total;
}

double carnot_efficiency(const CycleParams& p) {
    return 1.0 - p.beta_h() / p.beta_c();
}

double carnot_cop(const CycleParams& p) {
    return p.beta_h() / (p.beta_c() - p.beta_h());
}

double otto_efficiency(const CycleParams& p) {
    return 1.0 - p.omega_c() / p.omega_h();
}

double otto_cop(const CycleParams& p) {
    if (p.omega_h() == p.omega_c()) return std::numeric_limits<double>::infinity();
    return p.omega_c() / (p.omega_h() - p.omega_c());
}

PredicateRecord f_ratio_predicates(const CycleParams& p, double band) {
    PredicateRecord rec;
    rec.f_h = gslc::coherence_f(p.omega_h(), p.g_h(), p.beta_h());
    rec.f_c = gslc::coherence_f(p.omega_c(), p.g_c(), p.beta_c());
    rec.f_order = compare(rec.f_h, rec.f_c, band);
    rec.coupling_ratio = compare(p.g_h() / p.omega_h(), p.g_c() / p.omega_c(), band);
    rec.eta_otto = otto_efficiency(p);

    // Engine: Q_h > 0 fixes the sign of the F_A denominator, so
    // F_A < 1  <=>  (f_h - f_c)(g_h/omega_h - g_c/omega_c) > 0.
    rec.eta_vs_otto = from_sign(sign(rec.f_order) * sign(rec.coupling_ratio));

    if (p.omega_h() == p.omega_c()) {
        rec.equal_levels = true;
        // eta_Otto = 0 here, so every engine beats it; xi_Otto is unbounded.
        rec.eta_vs_otto = Comparison::Greater;
        if (p.g_h() > 0.0) rec.eta_equal_levels_bound = 1.0 - p.g_c() / p.g_h();
        if (p.g_h() != p.g_c()) rec.xi_equal_levels = p.g_c() / (p.g_h() - p.g_c());
        return rec;
    }

    rec.xi_otto = otto_cop(p);
    const double slope = (p.g_h() - p.g_c()) / (p.omega_h() - p.omega_c());
    rec.cop_ratio = compare(slope, p.g_c() / p.omega_c(), band);
    // Refrigerator: W > 0 fixes the sign of the F_B denominator, so
    // F_B > 1  <=>  (f_c - f_h)(g_c/omega_c - slope) > 0.
    rec.xi_vs_otto = from_sign(sign(rec.f_order) * sign(*rec.cop_ratio));
    return rec;
}

} // namespace otto::thermo
