#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "f2ent/constants.hpp"
#include "f2ent/initial_states.hpp"
#include "f2ent/potential.hpp"
#include "f2ent/propagator.hpp"

using namespace f2ent;

namespace {

double weighted_mean_x(const WaveFn1P& psi) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < psi.grid.nx; ++i)
    for (int j = 0; j < psi.grid.ny; ++j) {
      const double p = std::norm(psi.amp[psi.grid.index(i, j)]);
      num += p * psi.grid.x(i);
      den += p;
    }
  return num / den;
}

double weighted_var_x(const WaveFn1P& psi) {
  const double mean = weighted_mean_x(psi);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < psi.grid.nx; ++i)
    for (int j = 0; j < psi.grid.ny; ++j) {
      const double p = std::norm(psi.amp[psi.grid.index(i, j)]);
      const double d = psi.grid.x(i) - mean;
      num += p * d * d;
      den += p;
    }
  return num / den;
}

}  // namespace

TEST_CASE("frozen unit-system values") {
  const UnitSystem u = make_gaas_units();
  CHECK(u.kinetic_factor() == Catch::Approx(568.654047).margin(1e-3));
  CHECK(u.coulomb_scale == Catch::Approx(111.6251).margin(1e-3));
  // trap length at 2 meV and packet wavenumber at 10 meV
  const double lho = std::sqrt(u.hbar * u.hbar / (u.mass() * 2.0));
  CHECK(lho == Catch::Approx(23.846468).margin(1e-5));
  const double k10 = std::sqrt(2.0 * u.mass() * 10.0) / u.hbar;
  CHECK(k10 == Catch::Approx(0.1326099).margin(1e-6));
}

TEST_CASE("free packet spreads at the analytic rate") {
  const Grid2D g{32, 32, 6.0, 6.0};
  const UnitSystem units = make_gaas_units();
  const double sigma0 = 12.0;
  WaveFn1P psi = gaussian_packet(g, units, {96.0, 96.0, sigma0, 0.0, 1.0, 0.0});

  const double t_final = 200.0;
  const SingleRun run{1.0, 200, 200};
  psi = propagate_single(std::move(psi), Eigen::VectorXd::Zero(g.size()), units, run);

  const double widen = units.hbar * t_final / (2.0 * units.mass() * sigma0 * sigma0);
  const double expected = sigma0 * sigma0 * (1.0 + widen * widen);
  CHECK(weighted_var_x(psi) == Catch::Approx(expected).epsilon(0.01));
  CHECK(norm_squared(psi) == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("displaced trap state oscillates with the trap period") {
  const Grid2D g{32, 32, 6.0, 6.0};
  const UnitSystem units = make_gaas_units();
  const double hbar_omega = 2.0;
  const double cx = 96.0, cy = 96.0, shift = 24.0;
  const double lho = std::sqrt(units.hbar * units.hbar / (units.mass() * hbar_omega));

  // minimum-uncertainty packet matching the trap length makes a coherent state
  WaveFn1P psi = gaussian_packet(
      g, units, {cx - shift, cy, lho / std::sqrt(2.0), 0.0, 1.0, 0.0});
  const Eigen::VectorXd trap =
      build_potential(g, units, {hbar_omega, cx, cy}, false, 0.0).one_body;

  std::vector<double> ts, xs;
  const SingleRun run{1.0, 4200, 10};
  propagate_single(std::move(psi), trap, units, run,
                   [&](const WaveFn1P& snap, int step) {
                     ts.push_back(step * run.dt);
                     xs.push_back(weighted_mean_x(snap) - cx);
                   });

  std::vector<double> crossings;
  for (std::size_t k = 1; k < xs.size(); ++k)
    if (xs[k - 1] < 0.0 && xs[k] >= 0.0)
      crossings.push_back(ts[k - 1] + (ts[k] - ts[k - 1]) * (-xs[k - 1]) /
                                          (xs[k] - xs[k - 1]));
  REQUIRE(crossings.size() >= 2);
  const double period = crossings[1] - crossings[0];
  CHECK(period == Catch::Approx(2067.83).margin(21.0));
}

TEST_CASE("trap eigenstates carry the expected energies") {
  const Grid2D g{32, 32, 4.0, 4.0};
  const UnitSystem units = make_gaas_units();
  const double hbar_omega = 8.0, cx = 64.0, cy = 64.0;
  const Eigen::VectorXd trap =
      build_potential(g, units, {hbar_omega, cx, cy}, false, 0.0).one_body;

  const WaveFn1P e00 = ho_ground_state(g, units, hbar_omega, cx, cy);
  const WaveFn1P e11 = ho_eigenstate(g, units, hbar_omega, cx, cy, 1, 1);
  CHECK(single_energy(e00, trap, units) == Catch::Approx(hbar_omega).epsilon(1e-6));
  CHECK(single_energy(e11, trap, units) ==
        Catch::Approx(3.0 * hbar_omega).epsilon(1e-6));
}

namespace {

ScatteringConfig free_pair_config() {
  ScatteringConfig cfg;
  cfg.grid = {16, 16, 6.0, 6.0};
  cfg.packet = {24.0, 48.0, 12.0, 3.0, 1.0, 0.0};
  cfg.trap = {0.0, 72.0, 48.0};  // no trap; the partner packet sits here
  cfg.dt = 1.0;
  cfg.n_steps = 150;
  cfg.snapshot_stride = 50;
  return cfg;
}

WaveFn2P colliding_pair(const ScatteringConfig& cfg) {
  const WaveFn1P a = gaussian_packet(cfg.grid, cfg.units, cfg.packet);
  const WaveFn1P b = gaussian_packet(
      cfg.grid, cfg.units, {cfg.trap.cx, cfg.trap.cy, 12.0, 0.0, 1.0, 0.0});
  return product_initial(a, b);
}

}  // namespace

TEST_CASE("two-particle propagation conserves norm and energy") {
  const ScatteringConfig cfg = free_pair_config();
  WaveFn2P psi = colliding_pair(cfg);
  const PotentialField field =
      build_potential(cfg.grid, cfg.units, cfg.trap, cfg.coulomb_enabled, cfg.softening);
  const double e0 = total_energy(psi, field, cfg.units);

  psi = propagate(std::move(psi), cfg);
  CHECK(psi.time_fs == Catch::Approx(150.0));
  CHECK(norm_squared(psi) == Catch::Approx(1.0).margin(1e-10));
  const double e1 = total_energy(psi, field, cfg.units);
  CHECK(e1 == Catch::Approx(e0).epsilon(0.005));
}

TEST_CASE("exchange antisymmetry survives propagation") {
  const ScatteringConfig cfg = free_pair_config();
  WaveFn2P psi = antisymmetrize(colliding_pair(cfg));
  REQUIRE(antisymmetry_defect(psi) < 1e-13);
  psi = propagate(std::move(psi), cfg);
  CHECK(antisymmetry_defect(psi) < 1e-11);
}

TEST_CASE("snapshot callback fires at step zero, on the stride, and at the end") {
  ScatteringConfig cfg = free_pair_config();
  cfg.n_steps = 110;
  cfg.snapshot_stride = 50;
  std::vector<int> steps;
  std::vector<double> times;
  propagate(colliding_pair(cfg), cfg, [&](const WaveFn2P& snap, int step) {
    steps.push_back(step);
    times.push_back(snap.time_fs);
  });
  CHECK(steps == std::vector<int>{0, 50, 100, 110});
  CHECK(times[3] == Catch::Approx(110.0));
}

TEST_CASE("splitting error shrinks at second order") {
  ScatteringConfig cfg = free_pair_config();
  const WaveFn2P psi0 = colliding_pair(cfg);
  const double t_total = 8.0;

  const auto evolve = [&](double dt) {
    ScatteringConfig c = cfg;
    c.dt = dt;
    c.n_steps = static_cast<int>(std::lround(t_total / dt));
    return propagate(psi0, c);
  };
  const WaveFn2P ref = evolve(0.125);
  const double err_coarse = (evolve(1.0).amp - ref.amp).norm();
  const double err_fine = (evolve(0.5).amp - ref.amp).norm();
  REQUIRE(err_fine > 0.0);
  const double ratio = err_coarse / err_fine;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}

TEST_CASE("unsafe step sizes are refused") {
  {
    ScatteringConfig cfg = free_pair_config();
    cfg.dt = 10.0;  // potential phase bound
    CHECK_THROWS_AS(propagate(colliding_pair(cfg), cfg), StabilityError);
  }
  {
    ScatteringConfig cfg = free_pair_config();
    cfg.coulomb_enabled = false;  // vmax = 0, only the kinetic bound remains
    cfg.dt = 5.0;
    CHECK_THROWS_AS(propagate(colliding_pair(cfg), cfg), StabilityError);
  }
  {
    SingleRun run{50.0, 10, 5};
    const Grid2D g{16, 16, 6.0, 6.0};
    const UnitSystem units = make_gaas_units();
    WaveFn1P psi = gaussian_packet(g, units, {48.0, 48.0, 12.0, 0.0, 1.0, 0.0});
    CHECK_THROWS_AS(propagate_single(std::move(psi), Eigen::VectorXd::Zero(g.size()),
                                     units, run),
                    StabilityError);
  }
}

TEST_CASE("configuration errors are rejected before any work") {
  ScatteringConfig cfg = free_pair_config();
  cfg.packet.sigma = 5.0;  // under twice the spacing
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  ScatteringConfig off = free_pair_config();
  off.packet.cx = -5.0;
  CHECK_THROWS_AS(off.validate(), ConfigError);

  ScatteringConfig overlap = free_pair_config();
  overlap.trap.hbar_omega = 2.0;  // trap length 23.8 nm, box is far too small
  CHECK_THROWS_AS(overlap.validate(), ConfigError);

  ScatteringConfig stride = free_pair_config();
  stride.snapshot_stride = 0;
  CHECK_THROWS_AS(stride.validate(), ConfigError);
}
