#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "f2ent/constants.hpp"
#include "f2ent/wavefunction.hpp"

namespace f2ent {

/// Free Gaussian wave packet: width sigma (nm, position spread per axis),
/// mean kinetic energy ek_mev, moving along the (dir_x, dir_y) direction.
struct PacketParams {
  double cx = 0.0;
  double cy = 0.0;
  double sigma = 0.0;
  double ek_mev = 0.0;
  double dir_x = 1.0;
  double dir_y = 0.0;
};

inline WaveFn1P gaussian_packet(const Grid2D& grid, const UnitSystem& units,
                                const PacketParams& p) {
  grid.validate();
  if (!(p.sigma > 0.0)) {
    throw std::invalid_argument("gaussian_packet: sigma must be positive");
  }
  if (p.sigma < 2.0 * std::max(grid.dx, grid.dy)) {
    throw std::invalid_argument(
        "gaussian_packet: sigma must be at least two grid spacings");
  }
  if (!(p.ek_mev >= 0.0)) {
    throw std::invalid_argument("gaussian_packet: negative kinetic energy");
  }
  const double dn = std::hypot(p.dir_x, p.dir_y);
  if (!(dn > 0.0)) {
    throw std::invalid_argument("gaussian_packet: zero direction");
  }
  const double k = std::sqrt(2.0 * units.mass() * p.ek_mev) / units.hbar;
  const double kx = k * p.dir_x / dn;
  const double ky = k * p.dir_y / dn;

  WaveFn1P psi{grid, VectorXcd(grid.size())};
  const double inv4s2 = 1.0 / (4.0 * p.sigma * p.sigma);
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      const double x = grid.x(i), y = grid.y(j);
      const double rx = x - p.cx, ry = y - p.cy;
      const double env = -(rx * rx + ry * ry) * inv4s2;
      psi.amp(grid.index(i, j)) =
          std::exp(Complex(env, kx * x + ky * y));
    }
  }
  return normalize(std::move(psi));
}

/// Eigenstate of the isotropic harmonic trap with per-axis quantum numbers
/// (level_x, level_y); energy (level_x + level_y + 1) * hbar_omega.
inline WaveFn1P ho_eigenstate(const Grid2D& grid, const UnitSystem& units,
                              double hbar_omega, double cx, double cy,
                              int level_x, int level_y) {
  grid.validate();
  if (!(hbar_omega > 0.0)) {
    throw std::invalid_argument("ho_eigenstate: hbar_omega must be positive");
  }
  if (level_x < 0 || level_y < 0) {
    throw std::invalid_argument("ho_eigenstate: negative level");
  }
  const double l = std::sqrt(units.hbar * units.hbar /
                             (units.mass() * hbar_omega));  // oscillator length

  auto hermite = [](int n, double u) {
    double h0 = 1.0;
    if (n == 0) return h0;
    double h1 = 2.0 * u;
    for (int k = 1; k < n; ++k) {
      const double h2 = 2.0 * u * h1 - 2.0 * k * h0;
      h0 = h1;
      h1 = h2;
    }
    return h1;
  };

  WaveFn1P psi{grid, VectorXcd(grid.size())};
  for (int i = 0; i < grid.nx; ++i) {
    const double u = (grid.x(i) - cx) / l;
    const double fx = hermite(level_x, u) * std::exp(-0.5 * u * u);
    for (int j = 0; j < grid.ny; ++j) {
      const double v = (grid.y(j) - cy) / l;
      const double fy = hermite(level_y, v) * std::exp(-0.5 * v * v);
      psi.amp(grid.index(i, j)) = fx * fy;
    }
  }
  return normalize(std::move(psi));
}

/// Trap ground state (Gaussian of width l/sqrt(2) per axis).
inline WaveFn1P ho_ground_state(const Grid2D& grid, const UnitSystem& units,
                                double hbar_omega, double cx, double cy) {
  return ho_eigenstate(grid, units, hbar_omega, cx, cy, 0, 0);
}

/// Unsymmetrized product Psi(r1, r2) = psi(r1) * phi(r2), normalized.
inline WaveFn2P product_initial(const WaveFn1P& packet, const WaveFn1P& bound) {
  if (packet.grid != bound.grid) {
    throw std::invalid_argument("product_initial: grids differ");
  }
  WaveFn2P out{packet.grid, packet.amp * bound.amp.transpose(), 0.0};
  return normalize(std::move(out));
}

}  // namespace f2ent
