#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "f2ent/grid.hpp"

namespace f2ent {

using Complex = std::complex<double>;
using VectorXcd = Eigen::VectorXcd;
using MatrixXcd = Eigen::MatrixXcd;

/// Single-particle wave function sampled on a Grid2D; amp[index(i,j)] is
/// psi(x_i, y_j) in 1/nm (so sum |amp|^2 * cell_area = 1 when normalized).
struct WaveFn1P {
  Grid2D grid;
  VectorXcd amp;
};

/// Two-particle wave function; amp(i, j) is Psi(r_i, r_j) where i indexes the
/// first particle's site and j the second's. Units 1/nm^2.
struct WaveFn2P {
  Grid2D grid;
  MatrixXcd amp;
  double time_fs = 0.0;
};

inline double norm_squared(const WaveFn1P& p) {
  return p.amp.squaredNorm() * p.grid.cell_area();
}

inline double norm_squared(const WaveFn2P& p) {
  const double w = p.grid.cell_area();
  return p.amp.squaredNorm() * w * w;
}

/// L2 inner product <a|b> (conjugate-linear in the first argument).
inline Complex inner_product(const WaveFn1P& a, const WaveFn1P& b) {
  if (a.grid != b.grid) {
    throw std::invalid_argument("inner_product: grids differ");
  }
  return a.amp.dot(b.amp) * a.grid.cell_area();
}

inline Complex inner_product(const WaveFn2P& a, const WaveFn2P& b) {
  if (a.grid != b.grid) {
    throw std::invalid_argument("inner_product: grids differ");
  }
  const double w = a.grid.cell_area();
  Complex acc = 0.0;
  for (Eigen::Index c = 0; c < a.amp.cols(); ++c) {
    acc += a.amp.col(c).dot(b.amp.col(c));
  }
  return acc * w * w;
}

template <class Wave>
Wave normalize(Wave psi) {
  const double n2 = norm_squared(psi);
  if (!(n2 > 1e-300)) {
    throw std::invalid_argument("normalize: zero-norm wave function");
  }
  psi.amp *= 1.0 / std::sqrt(n2);
  return psi;
}

/// Particle-exchanged copy: Psi(r2, r1).
inline WaveFn2P swap_particles(const WaveFn2P& p) {
  return {p.grid, p.amp.transpose(), p.time_fs};
}

/// Normalized antisymmetric part (Psi(r1,r2) - Psi(r2,r1)) / sqrt(2)-like;
/// throws if the antisymmetric content vanishes.
inline WaveFn2P antisymmetrize(const WaveFn2P& p) {
  WaveFn2P out{p.grid, 0.5 * (p.amp - p.amp.transpose()), p.time_fs};
  return normalize(std::move(out));
}

/// Relative Frobenius defect from exchange antisymmetry, ||Psi + Psi^T|| / ||Psi||.
inline double antisymmetry_defect(const WaveFn2P& p) {
  const double n = p.amp.norm();
  if (n == 0.0) return 0.0;
  return (p.amp + p.amp.transpose()).norm() / n;
}

}  // namespace f2ent
