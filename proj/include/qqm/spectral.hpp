#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include "qqm/error.hpp"
#include "qqm/quat_matrix.hpp"

namespace qqm {

/// Eigenstructure of an anti-self-adjoint quaternionic matrix, with every
/// right eigenvalue rotated into the form i*E, E >= 0 (ray representative in
/// the 1,i subalgebra):  H * Q = Q * diag(i E),  Q unitary.
template <typename Scalar = double>
struct SpectralDecomposition {
  QuatMatrix<Scalar> Q;                              ///< columns are eigenvectors
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> energies; ///< ascending, all >= 0
};

using SpectralDecompositiond = SpectralDecomposition<double>;

template <typename Scalar = double>
struct SpectralOptions {
  Scalar antihermitian_tol = Scalar(1e-10);  ///< relative, scaled by 1 + ||H||
  Scalar group_tol = Scalar(1e-8);           ///< energies within group_tol*(1+max E) form one block
};

/// Partition ascending energies into degenerate blocks. Energies within
/// group_tol*(1 + max E) of each other belong to one block; a block whose
/// representative is within that tolerance of zero is the zero block.
template <typename Scalar>
std::vector<std::vector<Eigen::Index>> energy_groups(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& energies,
    Scalar group_tol = Scalar(1e-8)) {
  std::vector<std::vector<Eigen::Index>> groups;
  const Scalar scale = energies.size() ? Scalar(1) + energies.maxCoeff() : Scalar(1);
  const Scalar tol = group_tol * scale;
  for (Eigen::Index n = 0; n < energies.size(); ++n) {
    if (!groups.empty() && std::abs(energies[n] - energies[groups.back().back()]) <= tol)
      groups.back().push_back(n);
    else
      groups.push_back({n});
  }
  return groups;
}

template <typename Scalar>
bool is_zero_energy_group(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& energies,
                          const std::vector<Eigen::Index>& group,
                          Scalar group_tol = Scalar(1e-8)) {
  const Scalar scale = energies.size() ? Scalar(1) + energies.maxCoeff() : Scalar(1);
  return std::abs(energies[group.front()]) <= group_tol * scale;
}

namespace detail {

/// J = [[0, -I], [I, 0]]. The embedded image is exactly the set of complex
/// matrices Z with J conj(Z) = Z J; on vectors, z -> J conj(z) is the
/// embedded form of right multiplication by j.
template <typename Matrix>
Matrix embedding_j(Eigen::Index n) {
  Matrix j = Matrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -Matrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = Matrix::Identity(n, n);
  return j;
}

/// Fix the residual complex-phase gauge of an embedded eigenvector: rotate so
/// that the largest-magnitude entry is real positive (first maximum wins).
template <typename Vector>
void fix_phase(Vector& z) {
  Eigen::Index imax = 0;
  typename Vector::RealScalar best = -1;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const auto a = std::abs(z[i]);
    if (a > best) {
      best = a;
      imax = i;
    }
  }
  if (best > 0) z *= std::conj(z[imax]) / best;
}

}  // namespace detail

/// Spectral theorem for anti-self-adjoint quaternionic matrices.
///
/// Works through the complex embedding: K = embed(H) is anti-hermitian with
/// spectrum in +-i E pairs. The +iE eigenvectors map one-to-one onto
/// quaternionic right eigenvectors with eigenvalue iE. The zero eigenspace
/// has even complex dimension 2m and carries the quaternionic structure
/// z -> J conj(z); a symplectic Gram-Schmidt picks m quaternionically
/// orthonormal vectors from it.
template <typename Scalar>
SpectralDecomposition<Scalar> diagonalize_antihermitian(
    const QuatMatrix<Scalar>& h, const SpectralOptions<Scalar>& opts = {}) {
  using ComplexMatrix = typename QuatMatrix<Scalar>::ComplexMatrix;
  using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
  using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const std::complex<Scalar> I(0, 1);

  if (!h.isSquare()) throw InvalidInput("diagonalize_antihermitian: matrix must be square");
  const auto check = is_antihermitian(h, opts.antihermitian_tol * (Scalar(1) + h.norm()));
  if (!check.ok) {
    std::ostringstream msg;
    msg << "diagonalize_antihermitian: input is not anti-self-adjoint, residual "
        << check.residual;
    throw InvalidInput(msg.str());
  }

  const Eigen::Index n = h.rows();
  // -i*K is hermitian; hermitize to scrub roundoff before the eigensolve.
  ComplexMatrix s = -I * embed_complex(h);
  s = ComplexMatrix((s + s.adjoint()) / Scalar(2));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s);
  if (es.info() != Eigen::Success)
    throw NumericalFailure("diagonalize_antihermitian: embedded eigensolve failed");
  const RealVector lambda = es.eigenvalues();  // ascending
  const Scalar zero_tol = opts.group_tol * (Scalar(1) + lambda.cwiseAbs().maxCoeff());

  std::vector<Eigen::Index> zero_idx, pos_idx;
  for (Eigen::Index m = 0; m < lambda.size(); ++m) {
    if (std::abs(lambda[m]) <= zero_tol)
      zero_idx.push_back(m);
    else if (lambda[m] > 0)
      pos_idx.push_back(m);
  }
  if (zero_idx.size() % 2 != 0)
    throw NumericalFailure(
        "diagonalize_antihermitian: zero eigenspace has odd complex dimension; "
        "spectrum pairing lost");
  const Eigen::Index m_zero = static_cast<Eigen::Index>(zero_idx.size()) / 2;
  if (m_zero + static_cast<Eigen::Index>(pos_idx.size()) != n)
    throw NumericalFailure("diagonalize_antihermitian: eigenvalue pairing miscount");

  std::vector<ComplexVector> columns;
  RealVector energies(n);
  Eigen::Index col = 0;

  if (m_zero > 0) {
    // Symplectic Gram-Schmidt on the zero eigenspace.
    const ComplexMatrix j = detail::embedding_j<ComplexMatrix>(n);
    std::vector<ComplexVector> basis;  // selected z together with J conj(z)
    std::vector<ComplexVector> cand;
    cand.reserve(zero_idx.size());
    for (auto m : zero_idx) cand.push_back(es.eigenvectors().col(m));
    for (Eigen::Index pick = 0; pick < m_zero; ++pick) {
      ComplexVector best_v;
      Scalar best_norm = -1;
      for (const auto& c : cand) {
        ComplexVector v = c;
        for (int pass = 0; pass < 2; ++pass)
          for (const auto& b : basis) v -= b * b.dot(v);
        const Scalar vn = v.norm();
        if (vn > best_norm) {
          best_norm = vn;
          best_v = std::move(v);
        }
      }
      if (best_norm < Scalar(1e-8))
        throw NumericalFailure(
            "diagonalize_antihermitian: symplectic Gram-Schmidt on the zero "
            "eigenspace degenerated");
      best_v /= best_norm;
      detail::fix_phase(best_v);
      basis.push_back(best_v);
      basis.push_back(j * best_v.conjugate());
      columns.push_back(best_v);
      energies[col++] = Scalar(0);
    }
  }

  for (auto m : pos_idx) {
    ComplexVector z = es.eigenvectors().col(m);
    detail::fix_phase(z);
    columns.push_back(std::move(z));
    energies[col++] = lambda[m];
  }

  QuatMatrix<Scalar> q = QuatMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    q.A().col(c) = columns[c].head(n);
    q.B().col(c) = columns[c].tail(n);
  }
  return {std::move(q), std::move(energies)};
}

/// Q * diag(i E) * adjoint(Q).
template <typename Scalar>
QuatMatrix<Scalar> reconstruct(const SpectralDecomposition<Scalar>& dec) {
  using ComplexMatrix = typename QuatMatrix<Scalar>::ComplexMatrix;
  const std::complex<Scalar> I(0, 1);
  const Eigen::Index n = dec.energies.size();
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (Eigen::Index m = 0; m < n; ++m) d(m, m) = I * dec.energies[m];
  QuatMatrix<Scalar> diag(d, ComplexMatrix::Zero(n, n));
  return dec.Q * diag * dec.Q.adjoint();
}

/// Orthogonal projection of X onto the commutant of H0 (anti-self-adjoint).
///
/// In the eigenbasis of H0 an entry a + j b at position (m, n) commutes with
/// diag(iE) iff a vanishes unless E_m = E_n and b vanishes unless
/// E_m = E_n = 0. So: zero all entries between distinct energy blocks, keep
/// only the complex part inside nonzero-energy blocks, keep the zero-energy
/// block in full.
template <typename Scalar>
QuatMatrix<Scalar> commutant_project(const QuatMatrix<Scalar>& h0,
                                     const QuatMatrix<Scalar>& x,
                                     const SpectralOptions<Scalar>& opts = {}) {
  if (x.rows() != h0.rows() || x.cols() != h0.cols())
    throw InvalidInput("commutant_project: X must match the shape of H0");
  const SpectralDecomposition<Scalar> dec = diagonalize_antihermitian(h0, opts);
  const QuatMatrix<Scalar> xt = dec.Q.adjoint() * x * dec.Q;
  const auto groups = energy_groups(dec.energies, opts.group_tol);

  QuatMatrix<Scalar> y = QuatMatrix<Scalar>::Zero(x.rows(), x.cols());
  for (const auto& g : groups) {
    const Eigen::Index lo = g.front();
    const Eigen::Index sz = static_cast<Eigen::Index>(g.size());
    y.A().block(lo, lo, sz, sz) = xt.A().block(lo, lo, sz, sz);
    if (is_zero_energy_group(dec.energies, g, opts.group_tol))
      y.B().block(lo, lo, sz, sz) = xt.B().block(lo, lo, sz, sz);
  }
  return dec.Q * y * dec.Q.adjoint();
}

/// Per-energy-block diagnostics of smatrix_complexity_check.
template <typename Scalar = double>
struct BlockReport {
  Scalar energy = 0;
  bool zero_energy = false;
  /// ||[i, S_block]|| = 2 ||j,k part of S_block||; the complexity criterion.
  Scalar jk_residual = 0;
  bool pass = true;  ///< always true for the zero-energy block
};

template <typename Scalar = double>
struct ComplexityReport {
  Scalar h0_antihermitian_residual = 0;
  Scalar s_unitarity_residual = 0;
  bool preconditions_ok = true;
  Scalar commutation_residual = 0;   ///< ||[H0, S]||
  Scalar max_off_shell_norm = 0;     ///< largest block of S between distinct energies
  std::vector<BlockReport<Scalar>> blocks;
  bool on_shell_pass = false;        ///< max_off_shell_norm <= tol
  bool complexity_pass = false;      ///< every nonzero-energy block passes
  bool pass = false;                 ///< both of the above
};

/// Finite-dimensional statement of the S-matrix complexity theorem: if S
/// commutes with an anti-self-adjoint H0, then in an iE eigenbasis S is
/// block-diagonal over energies and, on blocks with E != 0, commutes with i
/// (has no j,k part). The report quantifies how far a given S is from that.
template <typename Scalar>
ComplexityReport<Scalar> smatrix_complexity_check(const QuatMatrix<Scalar>& h0,
                                                  const QuatMatrix<Scalar>& s,
                                                  Scalar tol,
                                                  const SpectralOptions<Scalar>& opts = {}) {
  if (s.rows() != h0.rows() || s.cols() != h0.cols())
    throw InvalidInput("smatrix_complexity_check: S must match the shape of H0");
  ComplexityReport<Scalar> rep;
  rep.h0_antihermitian_residual = (h0 + h0.adjoint()).norm();
  rep.s_unitarity_residual =
      (s.adjoint() * s - QuatMatrix<Scalar>::Identity(s.rows())).norm();
  const Scalar pre_tol = Scalar(1e-8) * (Scalar(1) + h0.norm());
  rep.preconditions_ok = rep.h0_antihermitian_residual <= pre_tol &&
                         rep.s_unitarity_residual <= Scalar(1e-8) * (Scalar(1) + s.norm());

  rep.commutation_residual = commutator(h0, s).norm();

  const SpectralDecomposition<Scalar> dec = diagonalize_antihermitian(h0, opts);
  const QuatMatrix<Scalar> st = dec.Q.adjoint() * s * dec.Q;
  const auto groups = energy_groups(dec.energies, opts.group_tol);

  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const Eigen::Index lo_i = groups[gi].front();
    const Eigen::Index sz_i = static_cast<Eigen::Index>(groups[gi].size());
    for (std::size_t gj = 0; gj < groups.size(); ++gj) {
      if (gi == gj) continue;
      const Eigen::Index lo_j = groups[gj].front();
      const Eigen::Index sz_j = static_cast<Eigen::Index>(groups[gj].size());
      const Scalar block_norm =
          std::sqrt(st.A().block(lo_i, lo_j, sz_i, sz_j).squaredNorm() +
                    st.B().block(lo_i, lo_j, sz_i, sz_j).squaredNorm());
      rep.max_off_shell_norm = std::max(rep.max_off_shell_norm, block_norm);
    }
    BlockReport<Scalar> br;
    br.energy = dec.energies[lo_i];
    br.zero_energy = is_zero_energy_group(dec.energies, groups[gi], opts.group_tol);
    br.jk_residual = Scalar(2) * st.B().block(lo_i, lo_i, sz_i, sz_i).norm();
    br.pass = br.zero_energy || br.jk_residual <= tol;
    rep.blocks.push_back(br);
  }

  rep.on_shell_pass = rep.max_off_shell_norm <= tol;
  rep.complexity_pass = std::all_of(rep.blocks.begin(), rep.blocks.end(),
                                    [](const BlockReport<Scalar>& b) { return b.pass; });
  rep.pass = rep.on_shell_pass && rep.complexity_pass;
  return rep;
}

}  // namespace qqm
