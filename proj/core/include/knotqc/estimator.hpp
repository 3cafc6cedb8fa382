#pragma once

// Additive approximation of V(closure of b) at t = e^{2 pi i / 5} by a
// simulated Hadamard test against the Fibonacci path-model unitary.
//
// Each shot draws a fusion path p with probability proportional to the
// quantum dimension of its total charge, prepares |+>|p>, applies
// controlled-U(b) (after S^dagger on the ancilla for the imaginary part)
// and measures the ancilla in the Hadamard basis. The shot average of
// +1/-1 outcomes is an unbiased estimate of Re / Im markov_trace(b).

#include <complex>
#include <cstdint>

#include "knotqc/anyon.hpp"
#include "knotqc/braid.hpp"
#include "knotqc/skein.hpp"

namespace knotqc {

/// Hoeffding with epsilon / sqrt(2) and delta / 2 for each of the two parts
/// needs 4 log(4 / delta) / epsilon^2 shots; 8 log(2 / delta) dominates it
/// for every delta in (0, 1).
inline constexpr double kEstimatorConstant = 8.0;

/// ceil(C log(2 / delta) / epsilon^2) shots per part. Throws
/// std::invalid_argument unless epsilon, delta lie in (0, 1).
std::uint64_t estimator_samples(double epsilon, double delta);

/// Probability of reading 0 on the ancilla of a Hadamard test with
/// |psi> and U|psi> already computed.
double hadamard_test_p0(const ComplexVector& psi, const ComplexVector& u_psi, bool imaginary);

struct JonesEstimate {
  std::complex<double> estimate;
  std::complex<double> trace_estimate;
  std::uint64_t samples_per_part = 0;
  std::uint64_t total_samples = 0;
  double scale = 0.0;  // |N(n, writhe)|; the error bound is epsilon * scale
  double epsilon = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  Calibration calibration;
};

struct EstimatorOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  std::uint64_t chunk = 4096;
};

/// Deterministic in (b, epsilon, delta, seed) regardless of thread count.
JonesEstimate jones_estimate(const BraidWord& b, double epsilon, double delta, std::uint64_t seed,
                             const EstimatorOptions& options = {});

/// Recomputes (chirality, alpha, delta) from skein values on the closures
/// of sigma_1 and sigma_1^3 in B_2; of the four candidates (two
/// chiralities, two square roots) keeps the one whose delta matches the
/// two-component unlink.
Calibration calibrate_fibonacci(const SkeinBudget& budget = {});

}  // namespace knotqc
