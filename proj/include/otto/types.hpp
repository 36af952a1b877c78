// types.hpp: Shared matrix aliases, error types and small linear-algebra helpers

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace otto {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using RealMat2 = Eigen::Matrix2d;
using SuperOp = Eigen::Matrix4cd;   // acts on row-major flattened 2x2 matrices (gg, ge, eg, ee)
using Vec4 = Eigen::Vector4cd;

// A numerical routine produced a result outside its accuracy contract.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The problem has no unique answer (zero dissipation, degenerate kernel, ...).
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on the caller's side was violated (wrong regime, wrong basis).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Vec4 flatten(const Mat2& m) {
    return Vec4(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

inline Mat2 unflatten(const Vec4& v) {
    Mat2 m;
    m << v(0), v(1), v(2), v(3);
    return m;
}

// Hermitian part, (m + m^dagger)/2.
inline Mat2 hermitize(const Mat2& m) {
    return 0.5 * (m + m.adjoint());
}

// Trace norm ||m||_1 of a Hermitian 2x2 matrix (sum of |eigenvalues|).
double trace_norm(const Mat2& m);

// Trace distance 1/2 ||a - b||_1.
inline double trace_distance(const Mat2& a, const Mat2& b) {
    return 0.5 * trace_norm(a - b);
}

// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const Mat2& m);

} // namespace otto
