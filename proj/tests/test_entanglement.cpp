#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "f2ent/dense_kernels.hpp"
#include "f2ent/entanglement.hpp"
#include "oracles.hpp"

using namespace f2ent;

namespace {

OmegaMatrix wrap(const Eigen::MatrixXcd& m) {
  OmegaMatrix omega;
  omega.m = m;
  omega.validate();
  return omega;
}

/// Coefficient matrix with the given pair weights: one 2x2 antisymmetric
/// block per weight along the diagonal.
OmegaMatrix from_pair_weights(const Eigen::VectorXd& w) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * w.size(), 2 * w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    const double amp = std::sqrt(w[k]);
    m(2 * k, 2 * k + 1) = amp;
    m(2 * k + 1, 2 * k) = -amp;
  }
  return wrap(m);
}

}  // namespace

TEST_CASE("reduced density matches the pair-basis partial trace entry by entry") {
  for (int dim : {4, 6, 8}) {
    for (std::uint64_t seed : {11u, 23u, 47u}) {
      const Eigen::MatrixXcd m = oracle::random_antisymmetric(dim, seed);
      const DensityMatrix1P rho = reduced_density(wrap(m));
      const Eigen::MatrixXcd ref = oracle::fock_reduced_density(m);
      CAPTURE(dim, seed);
      CHECK((rho.m - ref).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("entropies agree with the independently diagonalized spectrum") {
  for (int dim : {4, 6, 8}) {
    for (std::uint64_t seed : {5u, 29u}) {
      const Eigen::MatrixXcd m = oracle::random_antisymmetric(dim, seed);
      const OmegaMatrix omega = wrap(m);
      const DensityMatrix1P rho = reduced_density(omega);
      const Eigen::MatrixXcd ref = oracle::fock_reduced_density(m);
      CAPTURE(dim, seed);
      CHECK(linear_entropy(omega) ==
            Catch::Approx(oracle::linear_entropy_of(ref)).margin(1e-10));
      CHECK(von_neumann_entropy(rho) ==
            Catch::Approx(oracle::von_neumann_of(ref)).margin(1e-10));
    }
  }
}

TEST_CASE("mode rotations leave both entropies unchanged") {
  const int dim = 8;
  const Eigen::MatrixXcd m = oracle::random_antisymmetric(dim, 101);
  const Eigen::MatrixXcd u = oracle::random_unitary(dim, 202);
  const Eigen::MatrixXcd rotated = u * m * u.transpose();

  const OmegaMatrix a = wrap(m), b = wrap(rotated);
  CHECK(linear_entropy(a) == Catch::Approx(linear_entropy(b)).margin(1e-10));
  CHECK(von_neumann_entropy(reduced_density(a)) ==
        Catch::Approx(von_neumann_entropy(reduced_density(b))).margin(1e-10));
}

TEST_CASE("a single configuration pins both entropies at their floor") {
  Eigen::VectorXd w(1);
  w << 0.5;
  const OmegaMatrix omega = from_pair_weights(w);
  const DensityMatrix1P rho = reduced_density(omega);

  CHECK(linear_entropy(omega) == Catch::Approx(0.5).margin(1e-14));
  CHECK(von_neumann_entropy(rho) == Catch::Approx(std::log(2.0)).margin(1e-12));
  CHECK(slater_rank_estimate(rho, 1e-8) == 1);
}

TEST_CASE("occupancy spectrum comes in degenerate pairs") {
  const Eigen::MatrixXcd m = oracle::random_antisymmetric(8, 331);
  const DensityMatrix1P rho = reduced_density(wrap(m));
  const SchmidtSpectrum spectrum = eigen_pairs(rho);

  REQUIRE(spectrum.pair_weights.size() == 4);
  CHECK(spectrum.pairing_defect < 1e-10);
  CHECK(spectrum.pair_weights.sum() == Catch::Approx(0.5).margin(1e-10));
  for (Eigen::Index k = 1; k < spectrum.pair_weights.size(); ++k)
    CHECK(spectrum.pair_weights[k] <= spectrum.pair_weights[k - 1] + 1e-14);

  CHECK(le_from_pair_weights(spectrum.pair_weights) ==
        Catch::Approx(linear_entropy(wrap(m))).margin(1e-10));
  CHECK(vne_from_pair_weights(spectrum.pair_weights) ==
        Catch::Approx(von_neumann_entropy(rho)).margin(1e-10));
}

TEST_CASE("eigen_pairs rejects spectra without the two-fold degeneracy") {
  DensityMatrix1P rho;
  Eigen::Vector4d diag(0.7, 0.2, 0.06, 0.04);
  rho.m = diag.cast<std::complex<double>>().asDiagonal();
  CHECK_THROWS(eigen_pairs(rho));
}

TEST_CASE("generalized order-q entropy limits") {
  Eigen::VectorXd w(2);
  w << 0.3, 0.2;
  const OmegaMatrix omega = from_pair_weights(w);
  const DensityMatrix1P rho = reduced_density(omega);

  CHECK(tsallis_entropy(rho, 2.0) ==
        Catch::Approx(linear_entropy(omega)).margin(1e-12));
  CHECK(tsallis_entropy(rho, 1.0 + 1e-7) ==
        Catch::Approx(von_neumann_entropy(rho)).margin(1e-5));
  // spectrum {0.3, 0.3, 0.2, 0.2}: S_3 = (1 - sum l^3) / 2
  const double s3 = (1.0 - 2.0 * (0.027 + 0.008)) / 2.0;
  CHECK(tsallis_entropy(rho, 3.0) == Catch::Approx(s3).margin(1e-12));
  CHECK_THROWS(tsallis_entropy(rho, 1.0));
}

TEST_CASE("normalized measures hit 0 and 1 at the extremes") {
  const int n = 5;
  CHECK(normalized_le(0.5, n) == Catch::Approx(0.0).margin(1e-14));
  CHECK(normalized_le(1.0 - 0.5 / n, n) == Catch::Approx(1.0).margin(1e-14));
  CHECK(normalized_vne(std::log(2.0), n) == Catch::Approx(0.0).margin(1e-14));
  CHECK(normalized_vne(std::log(2.0 * n), n) == Catch::Approx(1.0).margin(1e-12));
  CHECK_THROWS(normalized_le(0.4, n));       // below the fermionic floor
  CHECK_THROWS(normalized_le(0.99999, n));   // above the n-pair ceiling
  CHECK_THROWS(normalized_le(0.6, 1));
}

TEST_CASE("structural guards on the inputs") {
  OmegaMatrix bad;
  bad.m = Eigen::MatrixXcd::Random(4, 4);  // almost surely not antisymmetric
  bad.m(0, 0) = 1.0;
  CHECK_THROWS(bad.validate());

  OmegaMatrix zero;
  zero.m = Eigen::MatrixXcd::Zero(4, 4);
  CHECK_THROWS(zero.validate());

  DensityMatrix1P off;
  off.m = Eigen::MatrixXcd::Identity(4, 4) * 0.25;
  off.m(0, 1) = std::complex<double>(0.0, 0.3);  // breaks hermiticity
  CHECK_THROWS(off.validate());

  DensityMatrix1P traceless;
  traceless.m = Eigen::MatrixXcd::Identity(4, 4) * 0.3;
  CHECK_THROWS(traceless.validate());
}

TEST_CASE("mixedness never calls an eigensolver") {
  const std::uint64_t before = eigensolve_count().load();
  const Eigen::MatrixXcd m = oracle::random_antisymmetric(16, 77);
  (void)linear_entropy(wrap(m));
  (void)reduced_density(wrap(m));
  CHECK(eigensolve_count().load() == before);
}
