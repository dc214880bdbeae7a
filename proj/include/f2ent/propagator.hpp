#pragma once

#include <cmath>
#include <numbers>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "f2ent/constants.hpp"
#include "f2ent/errors.hpp"
#include "f2ent/fourier.hpp"
#include "f2ent/grid.hpp"
#include "f2ent/initial_states.hpp"
#include "f2ent/potential.hpp"
#include "f2ent/wavefunction.hpp"

namespace f2ent {

/// Full description of one two-particle scattering run.
struct ScatteringConfig {
  UnitSystem units = make_gaas_units();
  Grid2D grid;
  PacketParams packet;   ///< incoming wave packet
  TrapParams trap;       ///< confining well holding the target particle
  double dt = 0.5;       ///< time step [fs]
  int n_steps = 1000;
  int snapshot_stride = 20;  ///< deliver every k-th state to the callback
  bool coulomb_enabled = true;
  double softening = 0.0;  ///< Coulomb softening length [nm]; <=0 picks max(dx,dy)
  bool absorber_enabled = false;
  int absorber_margin = 0;  ///< width of the edge damping band [cells]

  void validate() const {
    units.validate();
    grid.validate();
    if (!(dt > 0.0)) throw ConfigError("time step must be positive");
    if (n_steps < 0) throw ConfigError("step count must be non-negative");
    if (snapshot_stride < 1) throw ConfigError("snapshot stride must be >= 1");
    if (trap.hbar_omega < 0.0) throw ConfigError("trap energy must be non-negative");
    if (softening < 0.0) throw ConfigError("softening length must be non-negative");
    const double min_sigma = 2.0 * std::max(grid.dx, grid.dy);
    if (packet.sigma < min_sigma)
      throw ConfigError("packet width under-resolves the grid spacing");
    if (packet.ek_mev < 0.0) throw ConfigError("kinetic energy must be non-negative");
    check_inside(packet.cx, packet.cy, "packet");
    if (trap.hbar_omega > 0.0) {
      check_inside(trap.cx, trap.cy, "trap");
      const double lho = std::sqrt(units.hbar * units.hbar /
                                   (units.mass() * trap.hbar_omega));
      const double dx = packet.cx - trap.cx;
      const double dy = packet.cy - trap.cy;
      const double dist = std::hypot(dx, dy);
      const double needed = 4.0 * packet.sigma + 4.0 * lho;
      if (dist < needed) {
        std::ostringstream msg;
        msg << "packet/trap separation " << dist << " nm is below the overlap bound "
            << needed << " nm";
        throw ConfigError(msg.str());
      }
    }
    if (absorber_enabled) {
      const int limit = std::min(grid.nx, grid.ny) / 2;
      if (absorber_margin < 1 || absorber_margin >= limit)
        throw ConfigError("absorber margin must lie in [1, min(nx,ny)/2)");
    }
  }

 private:
  void check_inside(double x, double y, const char* who) const {
    if (x < 0.0 || x > grid.lx() || y < 0.0 || y > grid.ly()) {
      std::ostringstream msg;
      msg << who << " center (" << x << ", " << y << ") nm lies outside the box "
          << grid.lx() << " x " << grid.ly() << " nm";
      throw ConfigError(msg.str());
    }
  }
};

namespace detail {

/// Largest kinetic energy representable on the grid for one particle [meV].
inline double kinetic_ceiling_1p(const Grid2D& grid, const UnitSystem& units) {
  const double kx = std::numbers::pi / grid.dx;
  const double ky = std::numbers::pi / grid.dy;
  return units.kinetic_factor() * (kx * kx + ky * ky);
}

inline void check_phase_bounds(double dt, double vmax, double tmax,
                               const UnitSystem& units) {
  const double vrot = dt * vmax / units.hbar;
  if (!(vrot < 0.1)) {
    std::ostringstream msg;
    msg << "potential phase per step " << vrot << " exceeds 0.1; shrink dt below "
        << 0.1 * units.hbar / vmax << " fs";
    throw StabilityError(msg.str());
  }
  const double krot = dt * tmax / units.hbar;
  if (!(krot < std::numbers::pi)) {
    std::ostringstream msg;
    msg << "kinetic phase per step " << krot << " reaches the aliasing limit pi";
    throw StabilityError(msg.str());
  }
}

/// Per-site damping profile: 1 in the interior, cos^8 roll-off inside the
/// margin band at each edge.
inline Eigen::VectorXd absorber_profile(const Grid2D& grid, int margin) {
  const auto edge = [margin](int idx, int n) {
    int d = std::min(idx, n - 1 - idx);
    if (d >= margin) return 1.0;
    const double s = std::cos(0.5 * std::numbers::pi * (margin - d) / margin);
    return std::pow(s, 8);
  };
  Eigen::VectorXd w(grid.size());
  for (int i = 0; i < grid.nx; ++i)
    for (int j = 0; j < grid.ny; ++j)
      w[grid.index(i, j)] = edge(i, grid.nx) * edge(j, grid.ny);
  return w;
}

/// Kinetic evolution factor for one particle over one full step, with the
/// 1/M normalization of the unscaled FFT round trip folded in as 1/sqrt(M)
/// per particle factor.
inline VectorXcd kinetic_factor_1p(const Grid2D& grid, const UnitSystem& units,
                                   double dt) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(grid.size()));
  VectorXcd f(grid.size());
  for (int i = 0; i < grid.nx; ++i) {
    const double kx = grid.kx(i);
    for (int j = 0; j < grid.ny; ++j) {
      const double ky = grid.ky(j);
      const double ek = units.kinetic_factor() * (kx * kx + ky * ky);
      f[grid.index(i, j)] = scale * std::exp(Complex(0.0, -ek * dt / units.hbar));
    }
  }
  return f;
}

}  // namespace detail

using Snapshot2PCallback = std::function<void(const WaveFn2P&, int step)>;

/// Split-operator propagation of a two-particle state under
/// H = T1 + T2 + V1 + V2 + V12. Second-order Strang splitting: half a
/// potential phase, a full kinetic phase applied in momentum space, half a
/// potential phase. The callback receives a copy of the state at step 0,
/// every snapshot_stride-th step, and the final step.
inline WaveFn2P propagate(WaveFn2P psi, const ScatteringConfig& cfg,
                          const Snapshot2PCallback& on_snapshot = {}) {
  cfg.validate();
  if (!(psi.grid == cfg.grid))
    throw std::invalid_argument("state grid does not match the configured grid");
  const Grid2D& grid = cfg.grid;
  const int m = static_cast<int>(grid.size());

  const PotentialField field =
      build_potential(grid, cfg.units, cfg.trap, cfg.coulomb_enabled, cfg.softening);
  detail::check_phase_bounds(cfg.dt, field.vmax,
                             2.0 * detail::kinetic_ceiling_1p(grid, cfg.units),
                             cfg.units);

  MatrixXcd half_v(m, m);
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a)
      half_v(a, b) =
          std::exp(Complex(0.0, -0.5 * field.total(a, b) * cfg.dt / cfg.units.hbar));

  // The 4D round trip multiplies amplitudes by m^2 (one factor of m per
  // particle axis pair), so each of the two per-particle kinetic factors must
  // carry 1/m; kinetic_factor_1p ships 1/sqrt(m).
  VectorXcd kin = detail::kinetic_factor_1p(grid, cfg.units, cfg.dt);
  kin /= std::sqrt(static_cast<double>(m));

  Eigen::VectorXd damp;
  if (cfg.absorber_enabled)
    damp = detail::absorber_profile(grid, cfg.absorber_margin);

  FourierTransform fft = make_transform_2p(grid, psi.amp.data());

  const auto snapshot = [&](int step) {
    if (!on_snapshot) return;
    WaveFn2P copy{grid, psi.amp, step * cfg.dt};
    on_snapshot(copy, step);
  };

  psi.time_fs = 0.0;
  snapshot(0);
  for (int step = 1; step <= cfg.n_steps; ++step) {
    psi.amp = psi.amp.cwiseProduct(half_v);
    fft.forward();
    for (int b = 0; b < m; ++b) psi.amp.col(b) = psi.amp.col(b).cwiseProduct(kin) * kin[b];
    fft.backward();
    psi.amp = psi.amp.cwiseProduct(half_v);
    if (cfg.absorber_enabled)
      for (int b = 0; b < m; ++b) psi.amp.col(b) = psi.amp.col(b).cwiseProduct(damp) * damp[b];
    psi.time_fs = step * cfg.dt;
    if (step % cfg.snapshot_stride == 0 || step == cfg.n_steps) snapshot(step);
  }
  return psi;
}

using Snapshot1PCallback = std::function<void(const WaveFn1P&, int step)>;

/// Single-particle run description used by the propagation checks.
struct SingleRun {
  double dt = 0.5;
  int n_steps = 1000;
  int snapshot_stride = 20;
};

/// One-particle analog of propagate() on an arbitrary per-site potential [meV].
inline WaveFn1P propagate_single(WaveFn1P psi, const Eigen::VectorXd& potential,
                                 const UnitSystem& units, const SingleRun& run,
                                 const Snapshot1PCallback& on_snapshot = {}) {
  units.validate();
  psi.grid.validate();
  if (potential.size() != static_cast<Eigen::Index>(psi.grid.size()))
    throw std::invalid_argument("potential size does not match the grid");
  if (!(run.dt > 0.0) || run.n_steps < 0 || run.snapshot_stride < 1)
    throw std::invalid_argument("invalid single-particle run parameters");
  detail::check_phase_bounds(run.dt, potential.cwiseAbs().maxCoeff(),
                             detail::kinetic_ceiling_1p(psi.grid, units), units);

  const Eigen::Index m = potential.size();
  VectorXcd half_v(m);
  for (Eigen::Index a = 0; a < m; ++a)
    half_v[a] = std::exp(Complex(0.0, -0.5 * potential[a] * run.dt / units.hbar));

  // kinetic_factor_1p carries 1/sqrt(M); one more factor completes the 1/M
  // normalization of the unscaled FFT round trip
  VectorXcd kin = detail::kinetic_factor_1p(psi.grid, units, run.dt);
  kin /= std::sqrt(static_cast<double>(psi.grid.size()));

  FourierTransform fft = make_transform_1p(psi.grid, psi.amp.data());

  const auto snapshot = [&](int step) {
    if (!on_snapshot) return;
    WaveFn1P copy{psi.grid, psi.amp};
    on_snapshot(copy, step);
  };

  snapshot(0);
  for (int step = 1; step <= run.n_steps; ++step) {
    psi.amp = psi.amp.cwiseProduct(half_v);
    fft.forward();
    psi.amp = psi.amp.cwiseProduct(kin);
    fft.backward();
    psi.amp = psi.amp.cwiseProduct(half_v);
    if (step % run.snapshot_stride == 0 || step == run.n_steps) snapshot(step);
  }
  return psi;
}

/// <H> for a two-particle state: potential part on the grid, kinetic part in
/// momentum space (Parseval ratio, so FFT normalization cancels).
inline double total_energy(const WaveFn2P& psi, const PotentialField& field,
                           const UnitSystem& units) {
  if (!(psi.grid == field.grid))
    throw std::invalid_argument("state and potential live on different grids");
  const int m = static_cast<int>(psi.grid.size());
  double vsum = 0.0, wsum = 0.0;
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a) {
      const double p = std::norm(psi.amp(a, b));
      vsum += p * field.total(a, b);
      wsum += p;
    }

  MatrixXcd hat = psi.amp;
  FourierTransform fft = make_transform_2p(psi.grid, hat.data());
  fft.forward();
  double tsum = 0.0, hsum = 0.0;
  const Grid2D& g = psi.grid;
  for (int i2 = 0; i2 < g.nx; ++i2)
    for (int j2 = 0; j2 < g.ny; ++j2) {
      const double e2 =
          units.kinetic_factor() * (g.kx(i2) * g.kx(i2) + g.ky(j2) * g.ky(j2));
      const int b = static_cast<int>(g.index(i2, j2));
      for (int i1 = 0; i1 < g.nx; ++i1)
        for (int j1 = 0; j1 < g.ny; ++j1) {
          const double e1 =
              units.kinetic_factor() * (g.kx(i1) * g.kx(i1) + g.ky(j1) * g.ky(j1));
          const double p = std::norm(hat(g.index(i1, j1), b));
          tsum += p * (e1 + e2);
          hsum += p;
        }
    }
  return vsum / wsum + tsum / hsum;
}

/// <H> for a one-particle state on a per-site potential [meV].
inline double single_energy(const WaveFn1P& psi, const Eigen::VectorXd& potential,
                            const UnitSystem& units) {
  if (potential.size() != static_cast<Eigen::Index>(psi.grid.size()))
    throw std::invalid_argument("potential size does not match the grid");
  double vsum = 0.0, wsum = 0.0;
  for (Eigen::Index a = 0; a < potential.size(); ++a) {
    const double p = std::norm(psi.amp[a]);
    vsum += p * potential[a];
    wsum += p;
  }

  VectorXcd hat = psi.amp;
  FourierTransform fft = make_transform_1p(psi.grid, hat.data());
  fft.forward();
  double tsum = 0.0, hsum = 0.0;
  const Grid2D& g = psi.grid;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const double ek = units.kinetic_factor() * (g.kx(i) * g.kx(i) + g.ky(j) * g.ky(j));
      const double p = std::norm(hat[g.index(i, j)]);
      tsum += p * ek;
      hsum += p;
    }
  return vsum / wsum + tsum / hsum;
}

}  // namespace f2ent
