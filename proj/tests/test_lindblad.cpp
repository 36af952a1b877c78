#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "otto/gslc.hpp"
#include "otto/lindblad.hpp"

using namespace otto;
using namespace otto::lindblad;

namespace {

// Choi matrix of a superoperator acting on row-major flattened 2x2 matrices.
Eigen::Matrix4cd choi(const SuperOp& s) {
    Eigen::Matrix4cd c;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) c(2 * k + i, 2 * l + j) = s(2 * i + j, 2 * k + l);
    return c;
}

double min_choi_eigenvalue(const SuperOp& s) {
    const Eigen::Matrix4cd c = choi(s);
    CHECK((c - c.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(0.5 * (c + c.adjoint()));
    return es.eigenvalues()(0);
}

struct Draw {
    double omega, g, beta, t;
};

Draw random_draw(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> w(0.1, 6.0), g(0.0, 4.0), b(0.05, 3.0), lt(-1.0, 3.0);
    return {w(rng), g(rng), b(rng), std::pow(10.0, lt(rng))};
}

} // namespace

TEST_CASE("rates obey detailed balance and the Ohmic form") {
    const BathSpec bath{0.01, 50.0, 1.0};
    for (double w : {0.1, 1.0, 3.0, 10.0}) {
        for (double beta : {0.1, 1.0, 5.0}) {
            CHECK(rate(w, beta, bath) / rate(-w, beta, bath) == doctest::Approx(std::exp(beta * w)).epsilon(1e-12));
        }
        CHECK(spectral_density(w, bath) == doctest::Approx(0.01 * w * std::exp(-w / 50.0)).epsilon(1e-15));
    }
    CHECK(bose_occupation(1.0, 800.0) == doctest::Approx(std::exp(-800.0)));
    CHECK(bose_occupation(2.0, 0.5) == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-14));
    CHECK_THROWS_AS(rate(0.0, 1.0, bath), std::invalid_argument);
    CHECK_THROWS_AS(spectral_density(-1.0, bath), std::invalid_argument);
    CHECK_THROWS_AS(BathSpec({0.01, 10.0, 2.0}).validate(), std::invalid_argument);
}

TEST_CASE("global spectrum matches numerical eigensolves and is bi-orthogonal") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        const auto d = random_draw(rng);
        const auto frame = eigenframe(d.omega, d.g);
        const BathSpec bath{0.01, 1e3 * frame.omega_tilde, 1.0};
        const auto s = global_spectrum(frame, d.beta, bath);
        const SuperOp l = global_liouvillian(frame, d.beta, bath);

        Eigen::ComplexEigenSolver<SuperOp> es(l, false);
        std::vector<cplx> numeric(es.eigenvalues().data(), es.eigenvalues().data() + 4);
        for (const cplx& lam : s.eigenvalues) {
            double best = 1e300;
            for (const cplx& n : numeric) best = std::min(best, std::abs(n - lam));
            CHECK(best < 1e-10);
        }
        for (int a = 0; a < 4; ++a) {
            const Vec4 r = flatten(s.right[a]);
            const Vec4 lrow = flatten(s.left[a].transpose());
            CHECK((l * r - s.eigenvalues[a] * r).cwiseAbs().maxCoeff() < 1e-10);
            CHECK((lrow.transpose() * l - s.eigenvalues[a] * lrow.transpose()).cwiseAbs().maxCoeff() < 1e-10);
            for (int b = 0; b < 4; ++b) {
                CHECK(std::abs((s.left[a] * s.right[b]).trace() - (a == b ? 1.0 : 0.0)) < 1e-10);
            }
        }
    }
}

TEST_CASE("global stationary state is the Gibbs state") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 300; ++i) {
        const auto d = random_draw(rng);
        const auto frame = eigenframe(d.omega, d.g);
        const auto s = global_spectrum(frame, d.beta, default_bath(CycleParams(d.omega, d.omega, d.g, d.g, d.beta, d.beta + 1)));
        const Mat2 u = frame.u.cast<cplx>();
        const Mat2 stationary = u * s.right[0] * u.transpose();
        CHECK((stationary - gslc::gibbs_state(d.omega, d.g, d.beta).entries()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("propagator equals the matrix exponential of the generator") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const auto d = random_draw(rng);
        const auto frame = eigenframe(d.omega, d.g);
        const BathSpec bath{0.05, 1e3 * frame.omega_tilde, 1.0};
        const SuperOp l = global_liouvillian(frame, d.beta, bath);
        const SuperOp oracle = (l * d.t).exp();
        CHECK((propagator(global_spectrum(frame, d.beta, bath), d.t) - oracle).cwiseAbs().maxCoeff() < 1e-10);

        const SuperOp ll = local_liouvillian(d.omega, d.g, d.beta, bath);
        const SuperOp local_oracle = (ll * d.t).exp();
        CHECK((propagator(local_spectrum(d.omega, d.g, d.beta, bath), d.t) - local_oracle).cwiseAbs().maxCoeff() <
              1e-9);
    }
}

TEST_CASE("propagation is completely positive") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 100; ++i) {
        const auto d = random_draw(rng);
        const auto frame = eigenframe(d.omega, d.g);
        const BathSpec bath{0.01, 1e3 * frame.omega_tilde, 1.0};
        CHECK(min_choi_eigenvalue(propagator(global_spectrum(frame, d.beta, bath), d.t)) > -1e-12);
        const SuperOp local = (local_liouvillian(d.omega, d.g, d.beta, bath) * d.t).exp();
        CHECK(min_choi_eigenvalue(local) > -1e-12);
    }
}

TEST_CASE("propagate preserves trace and checks its contract") {
    const auto frame = eigenframe(2.0, 0.5, Basis::EigenH);
    const auto s = global_spectrum(frame, 1.0, BathSpec{});
    const auto rho = DensityMatrix::ground(Basis::EigenH);
    const auto out = propagate(rho, s, 37.0);
    CHECK(out.entries().trace().real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(propagate(DensityMatrix::ground(), s, 1.0), ContractError);
    CHECK_THROWS_AS(propagate(rho, s, -1.0), std::invalid_argument);
    CHECK((propagate(rho, s, 0.0).entries() - rho.entries()).norm() < 1e-14);
}

TEST_CASE("local nonzero eigenvalues solve the characteristic cubic") {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 200; ++i) {
        const auto d = random_draw(rng);
        const BathSpec bath{0.01, 1e6, 1.0};
        const double gp = rate(d.omega, d.beta, bath);
        const double gm = rate(-d.omega, d.beta, bath);
        const auto s = local_spectrum(d.omega, d.g, d.beta, bath);
        CHECK(std::abs(s.eigenvalues[0]) < 1e-12);
        for (int k = 1; k < 4; ++k) {
            const cplx lam = s.eigenvalues[k];
            CHECK(std::abs(local_cubic(lam, d.omega, d.g, gp, gm)) <= 1e-8);
        }
    }
}

TEST_CASE("local steady state differs from the Gibbs state") {
    const BathSpec bath{0.01, 1e6, 1.0};
    const auto s = local_spectrum(3.0, 2.0, 1.0, bath);
    const Mat2 local_ss = s.right[0];
    const double d = trace_distance(local_ss, gslc::gibbs_state(3.0, 2.0, 1.0).entries());
    CHECK(d > 1e-3);
}

TEST_CASE("numeric spectrum rejects degenerate generators") {
    CHECK_THROWS_AS(numeric_spectrum(SuperOp::Zero(), Basis::Original), DegenerateError);
}
