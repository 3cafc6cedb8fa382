#include <catch_amalgamated.hpp>

#include <cmath>

#include "knotqc/estimator.hpp"

using namespace knotqc;

TEST_CASE("sample count formula") {
  CHECK(estimator_samples(0.2, 0.05) ==
        static_cast<std::uint64_t>(std::ceil(kEstimatorConstant * std::log(40.0) / 0.04)));
  CHECK(estimator_samples(0.5, 0.5) < estimator_samples(0.05, 0.01));
  CHECK_THROWS_AS(estimator_samples(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(estimator_samples(1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(estimator_samples(0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(estimator_samples(0.1, 1.5), std::invalid_argument);
  // Hoeffding per part: 4 log(4/delta) / eps^2 shots suffice.
  for (double d : {0.01, 0.05, 0.3, 0.9}) {
    CHECK(static_cast<double>(estimator_samples(0.1, d)) >= 4.0 * std::log(4.0 / d) / 0.01);
  }
}

TEST_CASE("Hadamard test probabilities") {
  ComplexVector psi(2);
  psi << 1.0, 0.0;
  ComplexVector u_psi(2);
  const std::complex<double> phase = std::polar(1.0, 0.9);
  u_psi << phase, 0.0;
  CHECK(hadamard_test_p0(psi, u_psi, false) == Catch::Approx((1.0 + phase.real()) / 2.0));
  CHECK(hadamard_test_p0(psi, u_psi, true) == Catch::Approx((1.0 + phase.imag()) / 2.0));
}

TEST_CASE("calibration reproduces the frozen constants") {
  const auto fresh = calibrate_fibonacci();
  const auto& frozen = fibonacci_calibration();
  CHECK(fresh.chirality == frozen.chirality);
  CHECK(std::abs(fresh.alpha - frozen.alpha) < 1e-10);
  CHECK(std::abs(fresh.delta - frozen.delta) < 1e-10);
  CHECK(frozen.chirality == Chirality::Mirror);
  CHECK(std::abs(frozen.alpha - std::polar(1.0, -3.141592653589793 / 5.0)) < 1e-15);
  CHECK(frozen.delta.real() == Catch::Approx(-kGoldenRatio));
}

TEST_CASE("estimates") {
  const auto t = fibonacci_jones_point();

  const BraidWord unknot = markov_stabilize(BraidWord());
  const auto u = jones_estimate(unknot, 0.1, 0.01, 3);
  CHECK(std::abs(u.estimate - 1.0) <= 0.1 * u.scale);
  CHECK(u.scale == Catch::Approx(kGoldenRatio));

  const BraidWord trefoil(2, {1, 1, 1});
  const auto e = jones_estimate(trefoil, 0.05, 0.01, 11);
  CHECK(std::abs(e.estimate - jones_at(trefoil, t)) <= 0.05 * e.scale);
  CHECK(e.samples_per_part == estimator_samples(0.05, 0.01));
  CHECK(e.total_samples == 2 * e.samples_per_part);
  CHECK(e.seed == 11);

  const auto other = jones_estimate(trefoil, 0.05, 0.01, 12);
  CHECK(std::abs(e.estimate - other.estimate) <= 2 * 0.05 * e.scale);

  CHECK_THROWS_AS(jones_estimate(trefoil, 0.0, 0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(jones_estimate(trefoil, 0.1, 1.0, 1), std::invalid_argument);
}

TEST_CASE("estimates do not depend on the thread count") {
  const BraidWord b(3, {1, -2, 1, -2});
  EstimatorOptions one;
  one.threads = 1;
  one.chunk = 500;
  EstimatorOptions four = one;
  four.threads = 4;
  const auto x = jones_estimate(b, 0.1, 0.05, 77, one);
  const auto y = jones_estimate(b, 0.1, 0.05, 77, four);
  CHECK(x.estimate == y.estimate);
  CHECK(jones_estimate(b, 0.1, 0.05, 77).estimate == jones_estimate(b, 0.1, 0.05, 77).estimate);
}

TEST_CASE("concentration over repeated runs") {
  const BraidWord fig8(3, {1, -2, 1, -2});
  const auto exact = jones_at(fig8, fibonacci_jones_point());
  int failures = 0;
  const int runs = 200;
  for (int k = 0; k < runs; ++k) {
    const auto e = jones_estimate(fig8, 0.2, 0.05, static_cast<std::uint64_t>(1000 + k));
    if (std::abs(e.estimate - exact) > 0.2 * e.scale) ++failures;
  }
  const double sigma = std::sqrt(0.05 * 0.95 / runs);
  CHECK(static_cast<double>(failures) / runs <= 0.05 + 3 * sigma);
}
