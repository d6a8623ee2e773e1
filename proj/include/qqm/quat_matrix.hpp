#pragma once

#include <Eigen/Dense>
#include <complex>
#include <sstream>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>
#include <utility>

#include "qqm/error.hpp"
#include "qqm/quaternion.hpp"

namespace qqm {

/// Quaternion-valued dense matrix stored as the complex pair M = A + j B.
///
/// Fixed storage convention (everything else is derived from it):
///   * action on a column vector psi = psi_alpha + j psi_beta:
///       alpha part:  A psi_alpha - conj(B) psi_beta
///       beta  part:  B psi_alpha + conj(A) psi_beta
///   * a column vector is itself an N x 1 QuatMatrix, so the action rule is
///     the matrix product rule.
/// Left and right multiplication by a complex scalar c differ:
///   c M = (c A) + j (conj(c) B),   M c = (A c) + j (B c).
template <typename Scalar = double>
class QuatMatrix {
 public:
  using Complex = std::complex<Scalar>;
  using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  QuatMatrix() = default;
  QuatMatrix(ComplexMatrix A, ComplexMatrix B) : a_(std::move(A)), b_(std::move(B)) {
    if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
      throw InvalidInput("QuatMatrix: A and B blocks must have identical shape");
  }

  static QuatMatrix Zero(Eigen::Index rows, Eigen::Index cols) {
    return {ComplexMatrix::Zero(rows, cols), ComplexMatrix::Zero(rows, cols)};
  }
  static QuatMatrix Identity(Eigen::Index n) {
    return {ComplexMatrix::Identity(n, n), ComplexMatrix::Zero(n, n)};
  }
  /// q * I_n as a quaternion-scalar matrix.
  static QuatMatrix ScalarMatrix(const Quaternion<Scalar>& q, Eigen::Index n) {
    const SymplecticPair<Scalar> s = to_symplectic(q);
    QuatMatrix m = Zero(n, n);
    m.a_.diagonal().setConstant(s.alpha);
    m.b_.diagonal().setConstant(s.beta);
    return m;
  }
  static QuatMatrix FromQuaternion(const Quaternion<Scalar>& q) { return ScalarMatrix(q, 1); }

  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }
  bool isSquare() const { return a_.rows() == a_.cols(); }

  const ComplexMatrix& A() const { return a_; }
  const ComplexMatrix& B() const { return b_; }
  ComplexMatrix& A() { return a_; }
  ComplexMatrix& B() { return b_; }

  Quaternion<Scalar> operator()(Eigen::Index r, Eigen::Index c) const {
    return from_symplectic(SymplecticPair<Scalar>{a_(r, c), b_(r, c)});
  }
  void set(Eigen::Index r, Eigen::Index c, const Quaternion<Scalar>& q) {
    const SymplecticPair<Scalar> s = to_symplectic(q);
    a_(r, c) = s.alpha;
    b_(r, c) = s.beta;
  }

  /// Quaternionic conjugate transpose.
  QuatMatrix adjoint() const { return {a_.adjoint(), -b_.transpose()}; }

  Scalar squaredNorm() const { return a_.squaredNorm() + b_.squaredNorm(); }
  Scalar norm() const { return std::sqrt(squaredNorm()); }

  friend QuatMatrix operator+(const QuatMatrix& m, const QuatMatrix& n) {
    return {m.a_ + n.a_, m.b_ + n.b_};
  }
  friend QuatMatrix operator-(const QuatMatrix& m, const QuatMatrix& n) {
    return {m.a_ - n.a_, m.b_ - n.b_};
  }
  friend QuatMatrix operator-(const QuatMatrix& m) { return {-m.a_, -m.b_}; }

  friend QuatMatrix operator*(const QuatMatrix& m, const QuatMatrix& n) {
    if (m.cols() != n.rows()) throw InvalidInput("QuatMatrix: product shape mismatch");
    return {m.a_ * n.a_ - m.b_.conjugate() * n.b_,
            m.b_ * n.a_ + m.a_.conjugate() * n.b_};
  }

  friend QuatMatrix operator*(Scalar s, const QuatMatrix& m) { return {s * m.a_, s * m.b_}; }
  friend QuatMatrix operator*(const QuatMatrix& m, Scalar s) { return {m.a_ * s, m.b_ * s}; }
  /// Left multiplication by a complex scalar: c M = cA + j conj(c) B.
  friend QuatMatrix operator*(const Complex& c, const QuatMatrix& m) {
    return {c * m.a_, std::conj(c) * m.b_};
  }
  /// Right multiplication by a complex scalar: M c = Ac + j Bc.
  friend QuatMatrix operator*(const QuatMatrix& m, const Complex& c) {
    return {m.a_ * c, m.b_ * c};
  }
  friend QuatMatrix operator*(const Quaternion<Scalar>& q, const QuatMatrix& m) {
    return ScalarMatrix(q, m.rows()) * m;
  }
  friend QuatMatrix operator*(const QuatMatrix& m, const Quaternion<Scalar>& q) {
    return m * ScalarMatrix(q, m.cols());
  }

 private:
  ComplexMatrix a_, b_;
};

using QuatMatrixd = QuatMatrix<double>;

template <typename Scalar>
QuatMatrix<Scalar> commutator(const QuatMatrix<Scalar>& m, const QuatMatrix<Scalar>& n) {
  return m * n - n * m;
}

/// Complex representation of a square quaternionic matrix:
///   embed(A + jB) = [[A, -conj(B)], [B, conj(A)]]  (2N x 2N).
/// A ring homomorphism; adjoints map to conjugate transposes, and a column
/// vector psi_alpha + j psi_beta maps to the stacked vector (psi_alpha; psi_beta).
template <typename Scalar>
typename QuatMatrix<Scalar>::ComplexMatrix embed_complex(const QuatMatrix<Scalar>& m) {
  if (!m.isSquare()) throw InvalidInput("embed_complex: matrix must be square");
  const Eigen::Index n = m.rows();
  typename QuatMatrix<Scalar>::ComplexMatrix z(2 * n, 2 * n);
  z.topLeftCorner(n, n) = m.A();
  z.topRightCorner(n, n) = -m.B().conjugate();
  z.bottomLeftCorner(n, n) = m.B();
  z.bottomRightCorner(n, n) = m.A().conjugate();
  return z;
}

/// Inverse of embed_complex. The top-left and bottom-left blocks define the
/// result; *residual receives how far the other two blocks deviate from the
/// embedded structure (0 for matrices that genuinely lie in the image).
template <typename Scalar>
QuatMatrix<Scalar> extract_embedded(const typename QuatMatrix<Scalar>::ComplexMatrix& z,
                                    Scalar* residual = nullptr) {
  if (z.rows() != z.cols() || z.rows() % 2 != 0)
    throw InvalidInput("extract_embedded: expected an even-dimensional square matrix");
  const Eigen::Index n = z.rows() / 2;
  QuatMatrix<Scalar> m(z.topLeftCorner(n, n), z.bottomLeftCorner(n, n));
  if (residual) {
    const Scalar ra = (z.topRightCorner(n, n) + m.B().conjugate()).norm();
    const Scalar rb = (z.bottomRightCorner(n, n) - m.A().conjugate()).norm();
    *residual = std::max(ra, rb);
  }
  return m;
}

/// Matrix exponential, computed through the complex embedding. The embedding
/// image is closed under exp, so the structure residual of the extraction is
/// a pure numerical diagnostic; exceeding tolerance means the underlying
/// complex exponential went wrong.
template <typename Scalar>
QuatMatrix<Scalar> expm(const QuatMatrix<Scalar>& m, Scalar structure_tol = Scalar(1e-9)) {
  using ComplexMatrix = typename QuatMatrix<Scalar>::ComplexMatrix;
  const ComplexMatrix z = embed_complex(m).exp();
  Scalar residual = 0;
  QuatMatrix<Scalar> r = extract_embedded<Scalar>(z, &residual);
  const Scalar scale = Scalar(1) + r.norm();
  if (!(residual <= structure_tol * scale)) {
    std::ostringstream msg;
    msg << "expm: extracted exponential violates the embedded structure, residual "
        << residual << " (tolerance " << structure_tol * scale << ")";
    throw NumericalFailure(msg.str());
  }
  return r;
}

template <typename Scalar>
struct AntiHermitianCheck {
  bool ok = false;
  Scalar residual = 0;  ///< ||M + adjoint(M)||
};

template <typename Scalar>
AntiHermitianCheck<Scalar> is_antihermitian(const QuatMatrix<Scalar>& m, Scalar tol) {
  if (!m.isSquare()) throw InvalidInput("is_antihermitian: matrix must be square");
  const Scalar residual = (m + m.adjoint()).norm();
  return {residual <= tol, residual};
}

}  // namespace qqm
