#pragma once

#include <cmath>
#include <Eigen/Dense>

#include "f2ent/constants.hpp"
#include "f2ent/grid.hpp"

namespace f2ent {

/// Isotropic parabolic trap, energy quantum hbar_omega (meV), centered at
/// (cx, cy) nm. Both particles feel the same trap.
struct TrapParams {
  double hbar_omega = 0.0;
  double cx = 0.0;
  double cy = 0.0;
};

/// Total potential split as one-body trap samples plus a two-body Coulomb
/// table over the (|di|, |dj|) site displacement. The Coulomb kernel is
/// softened as e^2 / (eps * sqrt(dr^2 + a^2)).
struct PotentialField {
  Grid2D grid;
  Eigen::VectorXd one_body;    ///< meV per site
  Eigen::MatrixXd pair_table;  ///< meV, indexed (|di|, |dj|)
  double softening = 0.0;      ///< nm
  double vmax = 0.0;           ///< max over particle pairs of the total, meV

  double pair(int site_a, int site_b) const {
    const int ny = grid.ny;
    const int dxi = std::abs(site_a / ny - site_b / ny);
    const int dyi = std::abs(site_a % ny - site_b % ny);
    return pair_table(dxi, dyi);
  }

  double total(int site_a, int site_b) const {
    return one_body(site_a) + one_body(site_b) + pair(site_a, site_b);
  }
};

/// Samples the trap plus (optionally) the softened Coulomb repulsion.
/// softening <= 0 selects the default max(dx, dy).
inline PotentialField build_potential(const Grid2D& grid, const UnitSystem& units,
                                      const TrapParams& trap,
                                      bool coulomb_enabled = true,
                                      double softening = 0.0) {
  grid.validate();
  units.validate();
  if (!(trap.hbar_omega >= 0.0)) {
    throw std::invalid_argument("build_potential: hbar_omega must be >= 0");
  }
  PotentialField f;
  f.grid = grid;
  f.softening = softening > 0.0 ? softening : std::max(grid.dx, grid.dy);

  const double omega = trap.hbar_omega / units.hbar;  // 1/fs
  const double half_m_w2 = 0.5 * units.mass() * omega * omega;
  f.one_body.resize(grid.size());
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      const double rx = grid.x(i) - trap.cx;
      const double ry = grid.y(j) - trap.cy;
      f.one_body(grid.index(i, j)) = half_m_w2 * (rx * rx + ry * ry);
    }
  }

  f.pair_table = Eigen::MatrixXd::Zero(grid.nx, grid.ny);
  if (coulomb_enabled) {
    const double a2 = f.softening * f.softening;
    for (int di = 0; di < grid.nx; ++di) {
      for (int dj = 0; dj < grid.ny; ++dj) {
        const double r2 = di * di * grid.dx * grid.dx + dj * dj * grid.dy * grid.dy;
        f.pair_table(di, dj) = units.coulomb_scale / std::sqrt(r2 + a2);
      }
    }
  }

  // The summed potential is maximal with both particles on the worst site:
  // one-body terms peak there simultaneously and the pair term peaks at zero
  // displacement.
  f.vmax = 2.0 * f.one_body.maxCoeff() + f.pair_table(0, 0);
  return f;
}

}  // namespace f2ent
