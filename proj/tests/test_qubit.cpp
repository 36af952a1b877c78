#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "otto/qubit.hpp"

using namespace otto;

TEST_CASE("eigenframe matches a numerical eigensolve") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> w(0.01, 20.0), g(0.0, 10.0);
    for (int i = 0; i < 500; ++i) {
        const double omega = w(rng), coupling = g(rng);
        const RealMat2 h = build_hamiltonian(omega, coupling);
        Eigen::SelfAdjointEigenSolver<RealMat2> es(h);
        const auto f = eigenframe(omega, coupling);
        CHECK(f.eps_minus == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-13));
        CHECK(f.eps_plus == doctest::Approx(es.eigenvalues()(1)).epsilon(1e-13));
        CHECK(f.omega_tilde == doctest::Approx(f.eps_plus - f.eps_minus).epsilon(1e-13));
        CHECK(f.delta == doctest::Approx(0.5 * f.omega_tilde).epsilon(1e-14));

        // Columns of u diagonalize H and are orthonormal.
        const RealMat2 d = f.u.transpose() * h * f.u;
        CHECK(std::abs(d(0, 1)) < 1e-12 * (1.0 + omega + coupling));
        CHECK(d(0, 0) == doctest::Approx(f.eps_minus).epsilon(1e-12));
        CHECK(d(1, 1) == doctest::Approx(f.eps_plus).epsilon(1e-12));
        CHECK((f.u.transpose() * f.u - RealMat2::Identity()).norm() < 1e-14);
    }
}

TEST_CASE("uncoupled frame is the identity") {
    const auto f = eigenframe(3.0, 0.0);
    CHECK(f.eps_minus == 0.0);
    CHECK(f.eps_plus == 3.0);
    CHECK(f.theta == doctest::Approx(M_PI / 2));
    CHECK((f.u - RealMat2::Identity()).norm() < 1e-15);
    CHECK(f.transition_weight() == doctest::Approx(1.0));
}

TEST_CASE("lower level stays accurate at tiny coupling") {
    const auto f = eigenframe(1.0, 1e-9);
    CHECK(f.eps_minus == doctest::Approx(-1e-18).epsilon(1e-9));
}

TEST_CASE("transition weight equals cos^2(2 theta) = (omega/omega_tilde)^2") {
    for (double g : {0.0, 0.3, 1.0, 4.0}) {
        const auto f = eigenframe(2.0, g);
        CHECK(f.transition_weight() == doctest::Approx(std::pow(2.0 / f.omega_tilde, 2)).epsilon(1e-13));
    }
}

TEST_CASE("eigenframe rejects bad input") {
    CHECK_THROWS_AS(eigenframe(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(eigenframe(1.0, -0.1), std::invalid_argument);
    CHECK_THROWS(eigenframe(1.0, 0.5, Basis::Original));
}

TEST_CASE("basis changes round-trip and check tags") {
    const auto f = eigenframe(2.0, 0.7, Basis::EigenH);
    Mat2 m;
    m << 0.7, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.3;
    const DensityMatrix rho(m, Basis::Original);
    const auto e = to_eigenbasis(rho, f);
    CHECK(e.basis() == Basis::EigenH);
    const auto back = from_eigenbasis(e, f);
    CHECK((back.entries() - m).norm() < 1e-15);
    CHECK_THROWS_AS(to_eigenbasis(e, f), ContractError);
    const auto fc = eigenframe(2.0, 0.7, Basis::EigenC);
    CHECK_THROWS_AS(from_eigenbasis(e, fc), ContractError);
}

TEST_CASE("density matrix validation") {
    Mat2 m;
    m << 0.5, 0.0, 0.0, 0.6;
    CHECK_THROWS_AS(DensityMatrix(m, Basis::Original), std::invalid_argument);
    m << 0.5, 0.6, 0.6, 0.5;
    CHECK_THROWS_AS(DensityMatrix(m, Basis::Original), std::invalid_argument);
    m << 0.5, cplx(0.1, 0.1), cplx(0.1, 0.1), 0.5;
    CHECK_THROWS_AS(DensityMatrix(m, Basis::Original), std::invalid_argument);
    CHECK_NOTHROW(DensityMatrix::maximally_mixed());
    CHECK(DensityMatrix::ground()(0, 0) == cplx(1.0));
}

TEST_CASE("cycle parameters validate and update") {
    CHECK_THROWS_AS(CycleParams(1.0, 2.0, 0, 0, 0.2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CycleParams(2.0, 1.0, 0, 0, 1.0, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(CycleParams(2.0, 1.0, -1, 0, 0.2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CycleParams(2.0, 1.0, 0, 0, 0.2, 1.0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CycleParams(NAN, 1.0, 0, 0, 0.2, 1.0), std::invalid_argument);
    const CycleParams p(5.0, 1.0, 4.0, 1.0, 0.2, 1.0);
    const auto q = p.with_tau(10.0);
    CHECK(q.t_h() == 10.0);
    CHECK(q.t_c() == 10.0);
    CHECK(p.with("g_h", 2.0).g_h() == 2.0);
    CHECK(p.get("beta_c") == 1.0);
    CHECK_THROWS(p.with("nope", 1.0));
}

TEST_CASE("trace norm and minimum eigenvalue agree with an eigensolver") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n;
    for (int i = 0; i < 200; ++i) {
        Mat2 m;
        m << n(rng), cplx(n(rng), n(rng)), 0.0, n(rng);
        m(1, 0) = std::conj(m(0, 1));
        Eigen::SelfAdjointEigenSolver<Mat2> es(m);
        const auto ev = es.eigenvalues();
        CHECK(trace_norm(m) == doctest::Approx(std::abs(ev(0)) + std::abs(ev(1))).epsilon(1e-12));
        CHECK(min_eigenvalue(m) == doctest::Approx(ev(0)).epsilon(1e-12));
    }
}
