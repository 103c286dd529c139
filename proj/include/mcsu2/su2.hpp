// Copyright 2026 The mcsu2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// 2x2 complex algebra for SU(2): predicates, the closed-form square-root
// solvers used by the multi-controlled constructions, a phase-fixed
// eigendecomposition, and ZYZ / ABC factorizations.
//
// Everything here is a pure function templated on the real scalar type. The
// library instantiates it with double; the templates accept any Eigen
// expression whose scalar is std::complex<Real>.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "mcsu2/error.hpp"

namespace mcsu2 {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using Matrix2 = Eigen::Matrix<Complex<Real>, 2, 2>;

/// Default tolerance for unitarity / determinant / classification checks.
inline constexpr double kDefaultTolerance = 1e-10;

/// Below this value of Re(z) + 1 the square-root solvers switch to the
/// closed form for V = -I.
inline constexpr double kSingularEpsilon = 1e-9;

namespace gates {

template <typename Real = double>
Matrix2<Real> identity() {
  return Matrix2<Real>::Identity();
}

template <typename Real = double>
Matrix2<Real> pauli_x() {
  Matrix2<Real> m;
  m << Real(0), Real(1), Real(1), Real(0);
  return m;
}

template <typename Real = double>
Matrix2<Real> pauli_z() {
  Matrix2<Real> m;
  m << Real(1), Real(0), Real(0), Real(-1);
  return m;
}

template <typename Real = double>
Matrix2<Real> hadamard() {
  const Real r = Real(1) / std::sqrt(Real(2));
  Matrix2<Real> m;
  m << r, r, r, -r;
  return m;
}

/// X H X, so that applying H then X equals applying X then H-tilde.
template <typename Real = double>
Matrix2<Real> h_tilde() {
  const Real r = Real(1) / std::sqrt(Real(2));
  Matrix2<Real> m;
  m << -r, r, r, r;
  return m;
}

/// diag(1, e^{i phi}).
template <typename Real = double>
Matrix2<Real> phase(Real phi) {
  Matrix2<Real> m = Matrix2<Real>::Identity();
  m(1, 1) = std::polar(Real(1), phi);
  return m;
}

template <typename Real = double>
Matrix2<Real> t_gate() {
  return phase<Real>(std::numbers::pi_v<Real> / 4);
}

template <typename Real = double>
Matrix2<Real> t_dagger() {
  return phase<Real>(-std::numbers::pi_v<Real> / 4);
}

template <typename Real = double>
Matrix2<Real> rx(Real theta) {
  const Real c = std::cos(theta / 2), s = std::sin(theta / 2);
  Matrix2<Real> m;
  m << Complex<Real>(c, 0), Complex<Real>(0, -s), Complex<Real>(0, -s),
      Complex<Real>(c, 0);
  return m;
}

template <typename Real = double>
Matrix2<Real> ry(Real theta) {
  const Real c = std::cos(theta / 2), s = std::sin(theta / 2);
  Matrix2<Real> m;
  m << c, -s, s, c;
  return m;
}

template <typename Real = double>
Matrix2<Real> rz(Real theta) {
  Matrix2<Real> m = Matrix2<Real>::Zero();
  m(0, 0) = std::polar(Real(1), -theta / 2);
  m(1, 1) = std::polar(Real(1), theta / 2);
  return m;
}

}  // namespace gates

template <typename Derived>
bool is_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(std::real(m(i, j))) ||
          !std::isfinite(std::imag(m(i, j))))
        return false;
  return true;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m,
                typename Derived::RealScalar tol = kDefaultTolerance) {
  if (m.rows() != m.cols() || !is_finite(m)) return false;
  const auto gram = (m * m.adjoint()).eval();
  const auto eye = decltype(gram)::Identity(m.rows(), m.cols());
  return (gram - eye).cwiseAbs().maxCoeff() < tol;
}

template <typename Derived>
bool is_su2(const Eigen::MatrixBase<Derived>& m,
            typename Derived::RealScalar tol = kDefaultTolerance) {
  using Real = typename Derived::RealScalar;
  if (m.rows() != 2 || m.cols() != 2) return false;
  if (!is_unitary(m, tol)) return false;
  const Complex<Real> det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return std::abs(det - Real(1)) < tol;
}

enum class DiagonalClass { RealOffDiag, RealMainDiag, Both, Neither };

/// Which diagonal of an SU(2) matrix is real-valued.
template <typename Derived>
DiagonalClass classify_diagonal(
    const Eigen::MatrixBase<Derived>& m,
    typename Derived::RealScalar tol = kDefaultTolerance) {
  const bool off = std::abs(std::imag(m(0, 1))) < tol &&
                   std::abs(std::imag(m(1, 0))) < tol;
  const bool main = std::abs(std::imag(m(0, 0))) < tol &&
                    std::abs(std::imag(m(1, 1))) < tol;
  if (off && main) return DiagonalClass::Both;
  if (off) return DiagonalClass::RealOffDiag;
  if (main) return DiagonalClass::RealMainDiag;
  return DiagonalClass::Neither;
}

/// The SU(2) matrix (z*, x; -x, z) with real x.
template <typename Real = double>
struct RealOffDiagForm {
  Complex<Real> z{1, 0};
  Real x{0};

  Matrix2<Real> matrix() const {
    Matrix2<Real> m;
    m << std::conj(z), x, -x, z;
    return m;
  }

  /// Unitarity of the represented matrix: |z|^2 + x^2 = 1.
  bool is_valid(Real tol = Real(kDefaultTolerance)) const {
    return std::isfinite(z.real()) && std::isfinite(z.imag()) &&
           std::isfinite(x) && std::abs(std::norm(z) + x * x - 1) < tol;
  }
};

/// Reads (z, x) off a matrix with real off-diagonal.
template <typename Derived>
RealOffDiagForm<typename Derived::RealScalar> real_off_diag_form(
    const Eigen::MatrixBase<Derived>& m) {
  return {m(1, 1), std::real(m(0, 1))};
}

/// Maps a matrix with real main diagonal through the Hadamard basis change
/// H m H, which has real off-diagonal, and reads its (z, x).
template <typename Derived>
RealOffDiagForm<typename Derived::RealScalar> real_main_diag_form(
    const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  const Matrix2<Real> h = gates::hadamard<Real>();
  const Matrix2<Real> rotated = h * m * h;
  return real_off_diag_form(rotated);
}

template <typename Real = double>
struct OmegaPair {
  Complex<Real> omega1;
  Real omega2;

  /// (omega1*, omega2; -omega2, omega1); squares to the source form.
  Matrix2<Real> matrix() const {
    return RealOffDiagForm<Real>{omega1, omega2}.matrix();
  }
};

/// Square root of a real-off-diagonal SU(2) matrix inside the same family,
/// positive branch: omega1^2 - omega2^2 = z and 2 Re(omega1) omega2 = x.
/// Other sign choices are also valid roots; this one keeps Re(omega1) >= 0.
template <typename Real>
OmegaPair<Real> solve_omega(const RealOffDiagForm<Real>& v) {
  const Real shifted = v.z.real() + Real(1);
  if (!(shifted > Real(kSingularEpsilon)))
    throw Error(ErrorCode::SingularInput,
                "Re(z) + 1 vanishes; the form is -I and has no positive root");
  const Real denom = std::sqrt(Real(2) * shifted);
  return {Complex<Real>(std::sqrt(shifted / Real(2)), v.z.imag() / denom),
          v.x / denom};
}

namespace detail {

template <typename Real>
void require_valid_form(const RealOffDiagForm<Real>& v) {
  if (!v.is_valid(Real(kDefaultTolerance)))
    throw Error(ErrorCode::InvalidMatrix,
                "real-off-diagonal form violates |z|^2 + x^2 = 1");
}

template <typename Real>
Matrix2<Real> su2_from(Complex<Real> alpha, Real beta) {
  Matrix2<Real> m;
  m << alpha, -beta, beta, std::conj(alpha);
  return m;
}

}  // namespace detail

/// B = (a, -b; b, a*) with B^dagger X B X equal to the form's matrix.
template <typename Real>
Matrix2<Real> solve_b_half(const RealOffDiagForm<Real>& v) {
  detail::require_valid_form(v);
  if (v.z.real() + Real(1) < Real(kSingularEpsilon))
    return gates::ry<Real>(std::numbers::pi_v<Real>);
  const OmegaPair<Real> w = solve_omega(v);
  return detail::su2_from(w.omega1, w.omega2);
}

/// A = (alpha, -beta; beta, alpha*) with beta real such that
/// (A^dagger X A X)^2 equals the form's matrix.
template <typename Real>
Matrix2<Real> solve_a_gate(const RealOffDiagForm<Real>& v) {
  detail::require_valid_form(v);
  const Real shifted = v.z.real() + Real(1);
  if (shifted < Real(kSingularEpsilon)) {
    // (A^dagger X A X)^2 = -I exactly for A = Rz(pi/2).
    return gates::rz<Real>(std::numbers::pi_v<Real> / 2);
  }
  const Real root = std::sqrt(shifted / Real(2));
  const Real denom = Real(2) * std::sqrt(shifted * (root + Real(1)));
  Complex<Real> alpha(std::sqrt((root + Real(1)) / Real(2)),
                      v.z.imag() / denom);
  Real beta = v.x / denom;
  // Rounding in the input is amplified by 1 / sqrt(1 + Re z) near z = -1.
  const Real norm = std::sqrt(std::norm(alpha) + beta * beta);
  alpha /= norm;
  beta /= norm;
  return detail::su2_from(alpha, beta);
}

template <typename Real = double>
struct EigenDecomp {
  /// SU(2) eigenvector matrix with real, non-negative main diagonal.
  Matrix2<Real> q;
  /// D = diag(e^{i d_phase}, e^{-i d_phase}).
  Real d_phase{0};

  Matrix2<Real> d() const {
    Matrix2<Real> m = Matrix2<Real>::Zero();
    m(0, 0) = std::polar(Real(1), d_phase);
    m(1, 1) = std::polar(Real(1), -d_phase);
    return m;
  }

  Matrix2<Real> reconstruct() const { return q * d() * q.adjoint(); }
};

/// v = Q D Q^dagger for v in SU(2) away from +-I.
///
/// The eigenvalue whose eigenvector has the larger first component comes
/// first, so |Q(0,0)| >= 1/sqrt(2) and diagonal inputs give Q = I. That
/// eigenvector is rephased to make its first entry real and non-negative;
/// the second column is (-b*, a), which fixes det Q = 1.
template <typename Derived>
EigenDecomp<typename Derived::RealScalar> eigendecompose(
    const Eigen::MatrixBase<Derived>& v,
    typename Derived::RealScalar tol = kDefaultTolerance) {
  using Real = typename Derived::RealScalar;
  using C = Complex<Real>;
  if (!is_su2(v, tol))
    throw Error(ErrorCode::InvalidMatrix, "eigendecompose expects SU(2)");

  const Real re = std::real(v(0, 0) + v(1, 1)) / Real(2);
  const Real im = std::sqrt(std::norm((v(0, 0) - v(1, 1)) / Real(2)) +
                            std::abs(v(0, 1) * v(1, 0)));
  if (im < tol)
    throw Error(ErrorCode::DegenerateSpectrum,
                "eigenvalues coincide (matrix is +-I)");

  auto eigenvector = [&](C lambda) {
    Eigen::Matrix<C, 2, 1> from_row0(v(0, 1), lambda - v(0, 0));
    Eigen::Matrix<C, 2, 1> from_row1(lambda - v(1, 1), v(1, 0));
    auto& best =
        from_row0.norm() >= from_row1.norm() ? from_row0 : from_row1;
    return Eigen::Matrix<C, 2, 1>(best / best.norm());
  };

  const C plus(re, im), minus(re, -im);
  auto u_plus = eigenvector(plus);
  auto u_minus = eigenvector(minus);
  const bool take_plus = std::abs(u_plus(0)) > std::abs(u_minus(0));
  Eigen::Matrix<C, 2, 1> u = take_plus ? u_plus : u_minus;
  u *= std::conj(u(0)) / std::abs(u(0));

  EigenDecomp<Real> out;
  out.q << C(std::real(u(0)), 0), -std::conj(u(1)), u(1),
      C(std::real(u(0)), 0);
  out.d_phase = std::atan2(take_plus ? im : -im, re);
  return out;
}

template <typename Real = double>
struct ZyzAngles {
  Real phase{0};
  Real beta{0};
  Real gamma{0};
  Real delta{0};

  /// e^{i phase} Rz(beta) Ry(gamma) Rz(delta).
  Matrix2<Real> matrix() const {
    return std::polar(Real(1), phase) * gates::rz(beta) * gates::ry(gamma) *
           gates::rz(delta);
  }
};

namespace detail {

template <typename Real>
Real wrap_angle(Real a) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  a = std::remainder(a, Real(2) * pi);
  return a <= -pi ? a + Real(2) * pi : a;
}

}  // namespace detail

/// u = e^{i phase} Rz(beta) Ry(gamma) Rz(delta) with beta, delta, phase in
/// (-pi, pi] and gamma in [0, pi].
template <typename Derived>
ZyzAngles<typename Derived::RealScalar> zyz_angles(
    const Eigen::MatrixBase<Derived>& u) {
  using Real = typename Derived::RealScalar;
  using C = Complex<Real>;
  constexpr Real pi = std::numbers::pi_v<Real>;

  const C det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  ZyzAngles<Real> out;
  out.phase = std::arg(det) / Real(2);
  const Matrix2<Real> w = u * std::polar(Real(1), -out.phase);

  const Real c = std::abs(w(0, 0));
  const Real s = std::abs(w(1, 0));
  out.gamma = Real(2) * std::atan2(s, c);
  const Real half_sum = c > Real(0) ? std::arg(w(1, 1)) : Real(0);
  const Real half_diff = s > Real(0) ? std::arg(w(1, 0)) : Real(0);
  if (s == Real(0)) {
    out.beta = out.delta = half_sum;
  } else if (c == Real(0)) {
    out.beta = half_diff;
    out.delta = -half_diff;
  } else {
    out.beta = half_sum + half_diff;
    out.delta = half_sum - half_diff;
  }

  // Each 2 pi shift of a Z angle flips the sign of that rotation.
  for (Real* angle : {&out.beta, &out.delta}) {
    const Real wrapped = detail::wrap_angle(*angle);
    const long turns = std::lround((*angle - wrapped) / (Real(2) * pi));
    if (turns % 2 != 0) out.phase += pi;
    *angle = wrapped;
  }
  out.phase = detail::wrap_angle(out.phase);
  return out;
}

template <typename Real = double>
struct AbcFactors {
  Matrix2<Real> a;
  Matrix2<Real> b;
  Matrix2<Real> c;
};

/// w = A X B X C with A B C = I, all in SU(2).
template <typename Derived>
AbcFactors<typename Derived::RealScalar> abc_decompose(
    const Eigen::MatrixBase<Derived>& w) {
  using Real = typename Derived::RealScalar;
  if (!is_su2(w))
    throw Error(ErrorCode::InvalidMatrix, "abc_decompose expects SU(2)");
  ZyzAngles<Real> e = zyz_angles(w);
  // For SU(2) the phase is 0 or pi; -1 = Rz(2 pi) folds into beta.
  Real beta = e.beta;
  if (std::abs(e.phase) > std::numbers::pi_v<Real> / 2)
    beta += Real(2) * std::numbers::pi_v<Real>;
  AbcFactors<Real> out;
  out.a = gates::rz(beta) * gates::ry(e.gamma / 2);
  out.b = gates::ry(-e.gamma / 2) * gates::rz(-(e.delta + beta) / 2);
  out.c = gates::rz((e.delta - beta) / 2);
  return out;
}

/// A square root of a 2x2 unitary via Cayley-Hamilton:
/// sqrt(M) = (M + s I) / sqrt(tr M + 2 s), s = +-sqrt(det M).
template <typename Derived>
Matrix2<typename Derived::RealScalar> unitary_sqrt(
    const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  using C = Complex<Real>;
  const C det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const C tr = m(0, 0) + m(1, 1);
  C s = std::sqrt(det);
  if (std::abs(tr + Real(2) * s) < std::abs(tr - Real(2) * s)) s = -s;
  const C t = std::sqrt(tr + Real(2) * s);
  return (m + s * Matrix2<Real>::Identity()) / t;
}

}  // namespace mcsu2
