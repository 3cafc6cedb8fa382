#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>

#include "knotqc/anyon.hpp"
#include "knotqc/skein.hpp"
#include "oracle.hpp"

using namespace knotqc;
using cd = std::complex<double>;

namespace {

ComplexVector random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (auto& x : v) x = cd(g(rng), g(rng));
  return v / v.norm();
}

std::uint64_t fib(int n) {
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  for (int k = 0; k < n; ++k) {
    const auto c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace

TEST_CASE("fusion basis dimensions") {
  CHECK(fusion_basis(2, Charge::Vacuum).size() == 1);
  CHECK(fusion_basis(4, Charge::Vacuum).size() == 2);
  CHECK(fusion_basis(0, Charge::Vacuum).size() == 1);
  CHECK(fusion_basis(0, Charge::Tau).empty());
  for (int n = 1; n <= 16; ++n) {
    const auto both = [](int m) {
      return fusion_basis(m, Charge::Vacuum).size() + fusion_basis(m, Charge::Tau).size();
    };
    CHECK(both(n) == fib(n + 1));
    CHECK(fusion_basis(n, Charge::Vacuum).size() == fib(n - 1));
    if (n >= 3) CHECK(both(n) == both(n - 1) + both(n - 2));
  }
  for (const auto& p : fusion_basis(8, Charge::Tau)) {
    CHECK(p.labels.front() == Charge::Vacuum);
    CHECK(p.labels.back() == Charge::Tau);
    for (std::size_t j = 1; j < p.labels.size(); ++j) {
      CHECK_FALSE((p.labels[j - 1] == Charge::Vacuum && p.labels[j] == Charge::Vacuum));
    }
  }
  CHECK_THROWS_AS(FusionBasis(kMaxAnyons + 1, Charge::Vacuum), std::invalid_argument);
}

TEST_CASE("generators are unitary and satisfy the braid relations") {
  for (int n = 2; n <= 10; ++n) {
    for (Charge total : {Charge::Vacuum, Charge::Tau}) {
      if (FusionBasis(n, total).dimension() == 0) continue;
      std::vector<ComplexMatrix> u;
      for (int i = 1; i < n; ++i) u.push_back(sigma_unitary(i, n, total));
      const auto dim = u.front().rows();
      const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
      for (int i = 1; i < n; ++i) {
        const auto& a = u[static_cast<std::size_t>(i - 1)];
        CHECK((a * a.adjoint() - id).cwiseAbs().maxCoeff() < 1e-12);
        if (i + 1 < n) {
          const auto& b = u[static_cast<std::size_t>(i)];
          CHECK((a * b * a - b * a * b).cwiseAbs().maxCoeff() < 1e-10);
        }
        for (int j = i + 2; j < n; ++j) {
          const auto& c = u[static_cast<std::size_t>(j - 1)];
          CHECK((a * c - c * a).cwiseAbs().maxCoeff() < 1e-12);
        }
      }
    }
  }
  CHECK_THROWS_AS(sigma_unitary(0, 4, Charge::Vacuum), std::invalid_argument);
  CHECK_THROWS_AS(sigma_unitary(4, 4, Charge::Vacuum), std::invalid_argument);
}

TEST_CASE("eigenvalues are the two R phases") {
  const cd r1 = std::polar(1.0, -4.0 * std::numbers::pi / 5.0);
  const cd rt = std::polar(1.0, 3.0 * std::numbers::pi / 5.0);
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      Eigen::ComplexEigenSolver<ComplexMatrix> solver(sigma_unitary(i, n, Charge::Vacuum));
      for (const auto& ev : solver.eigenvalues()) {
        CHECK(std::abs(std::abs(ev) - 1.0) < 1e-10);
        CHECK(std::min(std::abs(ev - r1), std::abs(ev - rt)) < 1e-9);
      }
    }
  }
}

TEST_CASE("initial states") {
  const auto one = init_state(1);
  CHECK(one.anyons() == 4);
  CHECK(one.basis().dimension() == 2);
  // Both creation pairs in the vacuum: x_1 = x_3 = tau, x_2 = 1.
  const auto created = one.basis().find(0b01010u);
  REQUIRE(created.has_value());
  CHECK(one.amplitudes()[static_cast<Eigen::Index>(*created)] == cd(1.0));
  CHECK(one.norm() == 1.0);
  const auto two = init_state(2);
  const auto layout = QubitLayout::contiguous(2);
  for (int q = 0; q < 2; ++q) {
    const auto [p0, p1] = fusion_probabilities(two, q, layout);
    CHECK(p0 == 1.0);
    CHECK(p1 == 0.0);
  }
  CHECK_THROWS_AS(init_state(0), std::invalid_argument);
}

TEST_CASE("apply_braid") {
  std::mt19937_64 rng(8);
  const auto s = init_state(2);
  CHECK(apply_braid(s, BraidWord(8, {})).amplitudes() == s.amplitudes());
  CHECK_THROWS_AS(apply_braid(s, BraidWord(4, {1})), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto b = random_braid(8, 50, seed);
    const auto t = apply_braid(s, b);
    CHECK(std::abs(t.norm() - 1.0) < 1e-10);
    CHECK((apply_braid(t, b.inverse()).amplitudes() - s.amplitudes()).norm() < 1e-10);
  }
  // Yang-Baxter on random states.
  auto basis = std::make_shared<const FusionBasis>(7, Charge::Tau);
  for (int i = 1; i + 1 < 7; ++i) {
    const AnyonState r(basis, random_state(basis->dimension(), rng));
    const auto lhs = apply_braid(r, BraidWord(7, {i, i + 1, i}));
    const auto rhs = apply_braid(r, BraidWord(7, {i + 1, i, i + 1}));
    CHECK((lhs.amplitudes() - rhs.amplitudes()).norm() < 1e-10);
  }
}

TEST_CASE("measurement probabilities") {
  const auto layout = QubitLayout::contiguous(1);
  // sigma_1 exchanges the measured pair itself: only a phase.
  const auto a = apply_braid(init_state(1), BraidWord(4, {1, 1}));
  CHECK(fusion_probabilities(a, 0, layout).first == Catch::Approx(1.0).margin(1e-12));
  // sigma_2 braids across the two creation pairs.
  const auto b = apply_braid(init_state(1), BraidWord(4, {2, 2}));
  const auto [p0, p1] = fusion_probabilities(b, 0, layout);
  CHECK(p0 < 1.0 - 1e-3);
  CHECK(p0 + p1 == Catch::Approx(1.0).margin(1e-12));

  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = apply_braid(init_state(2), random_braid(8, 20, seed));
    for (int q = 0; q < 2; ++q) {
      const auto [x, y] = fusion_probabilities(s, q, QubitLayout::contiguous(2));
      CHECK(std::abs(x + y - 1.0) < 1e-12);
    }
  }
  CHECK_THROWS_AS(fusion_probabilities(b, 1, layout), std::invalid_argument);
  QubitLayout broken{{{1, 3, 2, 4}}};
  CHECK_THROWS_AS(fusion_probabilities(b, 0, broken), std::invalid_argument);
}

TEST_CASE("a qubit's second pair follows its first") {
  // Braids inside the quartet keep its total charge trivial, so the second
  // pair fuses to the same charge as the first.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto s = apply_braid(init_state(1), random_braid(4, 12, seed));
    for (Charge c : {Charge::Vacuum, Charge::Tau}) {
      const auto [post, p] = project_pair(s, 1, c);
      if (p < 1e-9) continue;
      const auto [q0, q1] = pair_fusion_probabilities(post, 3);
      CHECK((c == Charge::Vacuum ? q0 : q1) == Catch::Approx(1.0).margin(1e-10));
    }
  }
}

TEST_CASE("sampling") {
  const auto layout = QubitLayout::contiguous(2);
  CHECK(sample_measurement(init_state(2), layout, 5) == "00");
  const auto s = apply_braid(init_state(2), BraidWord(8, {2, 2, 6, -6, 6, 4, -3}));
  CHECK(sample_measurement(s, layout, 42) == sample_measurement(s, layout, 42));

  const auto one = apply_braid(init_state(1), BraidWord(4, {2, 2, 3}));
  const double p0 = fusion_probabilities(one, 0, QubitLayout::contiguous(1)).first;
  const int shots = 100000;
  int zeros = 0;
  for (int k = 0; k < shots; ++k) {
    zeros += sample_measurement(one, QubitLayout::contiguous(1), static_cast<std::uint64_t>(k)) == "0";
  }
  const double sigma = std::sqrt(p0 * (1.0 - p0) / shots);
  CHECK(std::abs(static_cast<double>(zeros) / shots - p0) <= 3.0 * sigma + 1e-12);
}

TEST_CASE("entangling braid gives non-product statistics") {
  // Found by search over short words on 8 strands; it mixes anyons of both
  // quartets through sigma_4.
  const BraidWord b(8, {-2, 4, 5, 3, 4});
  const auto layout = QubitLayout::contiguous(2);
  const auto s = apply_braid(init_state(2), b);
  const double both = prob_all_zero(b, layout);
  const double first = fusion_probabilities(s, 0, layout).first;
  const double second = fusion_probabilities(s, 1, layout).first;
  CHECK(std::abs(both - first * second) > 0.2);
  CHECK(both == Catch::Approx(oracle::prob_all_zero_dense(2, b.letters())).margin(1e-12));

  // Braids kept inside each quartet give product statistics.
  const BraidWord local(8, {2, 2, 3, 6, -7, 6});
  const auto t = apply_braid(init_state(2), local);
  CHECK(prob_all_zero(local, layout) ==
        Catch::Approx(fusion_probabilities(t, 0, layout).first *
                      fusion_probabilities(t, 1, layout).first)
            .margin(1e-12));
}

TEST_CASE("all-zero probability") {
  const auto layout = QubitLayout::contiguous(2);
  CHECK(prob_all_zero(BraidWord(8, {}), layout) == 1.0);
  CHECK_THROWS_AS(prob_all_zero(BraidWord(6, {}), layout), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto b = random_braid(8, 15, seed);
    CHECK(prob_all_zero(b, layout) ==
          Catch::Approx(oracle::prob_all_zero_dense(2, b.letters())).margin(1e-10));
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto b = random_braid(12, 12, seed);
    CHECK(prob_all_zero(b, QubitLayout::contiguous(3)) ==
          Catch::Approx(oracle::prob_all_zero_dense(3, b.letters())).margin(1e-10));
  }
}

TEST_CASE("all-zero probability under conjugation by pair-local braids") {
  // Exchanges inside a creation pair leave every x_{4j+2} label alone, so
  // they commute with the measurement, and the initial state is their
  // eigenvector.
  const auto layout = QubitLayout::contiguous(2);
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto b = random_braid(8, 12, seed);
    std::vector<int> g;
    for (int k = 0; k < 4; ++k) {
      const int which = 1 + 2 * static_cast<int>(rng() % 4);
      g.push_back(rng() % 2 == 0 ? which : -which);
    }
    const BraidWord gw(8, g);
    CHECK(prob_all_zero(markov_conjugate(b, gw), layout) ==
          Catch::Approx(prob_all_zero(b, layout)).margin(1e-10));
  }
}

TEST_CASE("Markov trace") {
  CHECK(std::abs(markov_trace(BraidWord(3, {})) - 1.0) < 1e-12);
  CHECK_THROWS_AS(markov_trace(BraidWord(2, {1}), 3), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto b = random_braid(4, 8, seed);
    const auto g = random_braid(4, 5, seed + 7);
    CHECK(std::abs(markov_trace(markov_conjugate(b, g)) - markov_trace(b)) < 1e-10);
  }
}

TEST_CASE("normalised trace matches Jones at e^{2 pi i/5}") {
  const auto& cal = fibonacci_calibration();
  const auto t = fibonacci_jones_point();
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto b = random_braid(2 + static_cast<int>(seed % 3), 1 + seed % 8, seed + 4000);
    const auto lhs = cal.normalization(b.strands(), writhe(b)) * markov_trace(b);
    CHECK(std::abs(lhs - jones_at(b, t)) < 1e-8);
    const auto st = markov_stabilize(b);
    const auto stabilised = cal.normalization(st.strands(), writhe(st)) * markov_trace(st);
    CHECK(std::abs(stabilised - lhs) < 1e-8);
  }
}

TEST_CASE("state dump") {
  const auto text = to_string(init_state(1));
  CHECK(text.find("1t1t1 -> 1 + 0i") != std::string::npos);
}
