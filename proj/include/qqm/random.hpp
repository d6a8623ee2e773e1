#pragma once

#include <random>

#include "qqm/quat_matrix.hpp"
#include "qqm/spectral.hpp"

namespace qqm {

using Rng = std::mt19937_64;

/// Dense quaternionic matrix with all eight real components of each entry
/// uniform in [-scale, scale]. Entries are drawn in a fixed row-major order
/// so results are reproducible for a given seed.
template <typename Scalar = double>
QuatMatrix<Scalar> random_quat_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols,
                                      Scalar scale = Scalar(1)) {
  std::uniform_real_distribution<Scalar> u(-scale, scale);
  QuatMatrix<Scalar> m = QuatMatrix<Scalar>::Zero(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      m.A()(r, c) = {u(rng), u(rng)};
      m.B()(r, c) = {u(rng), u(rng)};
    }
  return m;
}

/// X - adjoint(X) for random X; anti-self-adjoint by construction.
template <typename Scalar = double>
QuatMatrix<Scalar> random_antihermitian(Rng& rng, Eigen::Index n, Scalar scale = Scalar(1)) {
  const QuatMatrix<Scalar> x = random_quat_matrix<Scalar>(rng, n, n, scale);
  return x - x.adjoint();
}

/// expm of a random anti-self-adjoint matrix: quaternion-unitary.
template <typename Scalar = double>
QuatMatrix<Scalar> random_quat_unitary(Rng& rng, Eigen::Index n) {
  return expm(random_antihermitian<Scalar>(rng, n, Scalar(0.5)));
}

/// U diag(iE) adjoint(U) with a planted spectrum. Energies are spaced at
/// least min_gap apart (plus a random jitter below min_gap/2) starting from
/// first_energy; with zero_modes > 0 that many exact zeros are planted first.
template <typename Scalar = double>
struct PlantedSpectrum {
  QuatMatrix<Scalar> h0;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> energies;  ///< ascending
};

template <typename Scalar = double>
PlantedSpectrum<Scalar> random_planted_h0(Rng& rng, Eigen::Index n, Eigen::Index zero_modes = 0,
                                          Scalar first_energy = Scalar(1),
                                          Scalar min_gap = Scalar(0.5)) {
  std::uniform_real_distribution<Scalar> u(0, min_gap / 2);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> energies(n);
  Scalar e = first_energy;
  for (Eigen::Index m = 0; m < n; ++m) {
    if (m < zero_modes) {
      energies[m] = Scalar(0);
      continue;
    }
    e += u(rng);
    energies[m] = e;
    e += min_gap;
  }
  const QuatMatrix<Scalar> uq = random_quat_unitary<Scalar>(rng, n);
  SpectralDecomposition<Scalar> dec{uq, energies};
  return {reconstruct(dec), std::move(energies)};
}

}  // namespace qqm
