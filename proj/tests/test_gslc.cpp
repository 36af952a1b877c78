#include <doctest.h>

#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "otto/gslc.hpp"
#include "otto/thermo.hpp"

using namespace otto;

namespace {

Mat2 gibbs_oracle(double omega, double g, double beta) {
    const Eigen::Matrix2d e = (-beta * build_hamiltonian(omega, g)).exp();
    return (e / e.trace()).cast<cplx>();
}

CycleParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> w(0.1, 6.0), g(0.0, 4.0), b(0.05, 3.0);
    double wh = w(rng), wc = w(rng), bh = b(rng), bc = b(rng);
    if (wh < wc) std::swap(wh, wc);
    if (bh > bc) std::swap(bh, bc);
    return CycleParams(wh, wc, g(rng), g(rng), bh, bc + 1e-3);
}

} // namespace

TEST_CASE("gibbs state equals the normalized matrix exponential") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> w(0.05, 8.0), g(0.0, 5.0), b(0.01, 5.0);
    for (int i = 0; i < 500; ++i) {
        const double omega = w(rng), coupling = g(rng), beta = b(rng);
        const auto rho = gslc::gibbs_state(omega, coupling, beta);
        CHECK((rho.entries() - gibbs_oracle(omega, coupling, beta)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(gslc::coherence_f(omega, coupling, beta) ==
              doctest::Approx((rho(0, 1) + rho(1, 0)).real()).epsilon(1e-12));
    }
}

TEST_CASE("gibbs state stays finite at extreme inverse temperature") {
    const auto cold = gslc::gibbs_state(1.0, 0.5, 1e6);
    CHECK(std::isfinite(cold(0, 0).real()));
    const auto f = eigenframe(1.0, 0.5);
    CHECK(cold(0, 0).real() == doctest::Approx(f.u(0, 0) * f.u(0, 0)).epsilon(1e-12));
    const auto hot = gslc::gibbs_state(1.0, 0.5, 1e-8);
    CHECK(hot(0, 0).real() == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("closed-form flows agree with traces over the Gibbs states") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        const CycleParams p = random_params(rng);
        const auto pair = gslc::gslc_limit_cycle(p);
        const auto traced = thermo::energy_flows(pair.rho_h, pair.rho_c, p);
        const auto closed = gslc::gslc_energy_flows(p);
        CHECK(closed.q_h == doctest::Approx(traced.q_h).epsilon(1e-12).scale(1.0));
        CHECK(closed.q_c == doctest::Approx(traced.q_c).epsilon(1e-12).scale(1.0));
        CHECK(closed.w == doctest::Approx(traced.w).epsilon(1e-12).scale(1.0));
        CHECK(std::abs(closed.q_h + closed.q_c + closed.w) < 1e-12);
    }
}

TEST_CASE("uncoupled cycle reproduces the Otto flows") {
    const CycleParams p(2.0, 1.0, 0.0, 0.0, 0.2, 1.0);
    const auto c = gslc::gslc_energy_flows(p);
    const double pe_h = 1.0 / (1.0 + std::exp(0.2 * 2.0));
    const double pe_c = 1.0 / (1.0 + std::exp(1.0));
    CHECK(c.q_h == doctest::Approx(2.0 * (pe_h - pe_c)).epsilon(1e-13));
    CHECK(c.q_c == doctest::Approx(1.0 * (pe_c - pe_h)).epsilon(1e-13));
}

TEST_CASE("flows vanish on the zero-flow line") {
    for (int i = 1; i <= 20; ++i) {
        const double k = 0.05 * i;
        const CycleParams p(5.0, 1.0, 5.0 * k, k, 0.2, 1.0);
        const auto c = gslc::gslc_energy_flows(p);
        CHECK(std::abs(c.q_h) < 1e-12);
        CHECK(std::abs(c.q_c) < 1e-12);
        CHECK(std::abs(c.w) < 1e-12);
    }
}
