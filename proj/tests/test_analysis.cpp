#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "f2ent/analysis.hpp"
#include "f2ent/initial_states.hpp"

using namespace f2ent;

TEST_CASE("projection onto trap levels resolves a product state") {
  const Grid2D g{32, 32, 4.0, 4.0};
  const UnitSystem units = make_gaas_units();
  const double w0 = 8.0, cx = 64.0, cy = 64.0;
  const WaveFn1P packet = gaussian_packet(g, units, {32.0, 96.0, 9.0, 4.0, 1.0, 0.0});
  const WaveFn1P e00 = ho_ground_state(g, units, w0, cx, cy);
  const WaveFn1P e10 = ho_eigenstate(g, units, w0, cx, cy, 1, 0);

  const WaveFn2P psi = product_initial(packet, e00);
  const TrapLevelProjection onto00 = project_trap_level(psi, e00);
  const TrapLevelProjection onto10 = project_trap_level(psi, e10);

  CHECK(onto00.population == Catch::Approx(1.0).margin(1e-9));
  CHECK(onto10.population == Catch::Approx(0.0).margin(1e-9));
  // the conditional amplitude is the free packet itself
  const Complex overlap = inner_product(onto00.conditional, packet);
  CHECK(std::abs(overlap) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("plateau statistics summarize the tail") {
  std::vector<double> v;
  for (int k = 0; k < 80; ++k) v.push_back(1.0 - std::exp(-k / 6.0));
  const PlateauStats stats = stationary_value(v, 0.2);
  CHECK(stats.value == Catch::Approx(1.0).margin(1e-4));
  CHECK(stats.tail_std < 2e-5);
  CHECK(stats.steady);

  std::vector<double> noisy;
  for (int k = 0; k < 50; ++k) noisy.push_back(k % 2 == 0 ? 0.5 : 1.5);
  CHECK_FALSE(stationary_value(noisy, 0.4).steady);

  CHECK_THROWS(stationary_value({}, 0.2));
  CHECK_THROWS(stationary_value(v, 0.0));
}

TEST_CASE("formation time finds the settling point") {
  std::vector<double> t, v;
  for (int k = 0; k <= 100; ++k) {
    t.push_back(10.0 * k);
    v.push_back(0.5 + 0.4 * (1.0 - std::exp(-k / 10.0)));
  }
  const double plateau = stationary_value(v, 0.1).value;
  const double tf = formation_time(t, v, plateau, 0.05);
  // exp(-k/10) falls below 5 percent of the rise near k = 30
  CHECK(tf > 250.0);
  CHECK(tf < 350.0);

  // affine rescaling must not move the formation time
  std::vector<double> scaled = v;
  for (double& x : scaled) x = 3.0 * x - 1.0;
  const double tf_scaled =
      formation_time(t, scaled, 3.0 * plateau - 1.0, 0.05);
  CHECK(tf_scaled == Catch::Approx(tf).margin(1e-9));
}

TEST_CASE("formation time edge cases") {
  const std::vector<double> t{0.0, 1.0, 2.0, 3.0};

  // never settles: the last point is still outside the band
  const std::vector<double> rising{0.0, 0.2, 0.4, 0.8};
  CHECK(std::isnan(formation_time(t, rising, 1.0, 0.05)));

  // flat series forms immediately
  const std::vector<double> flat{0.7, 0.7, 0.7, 0.7};
  CHECK(formation_time(t, flat, 0.7, 0.05) == 0.0);

  CHECK_THROWS(formation_time({0.0, 1.0}, {0.5}, 0.5, 0.05));
}
