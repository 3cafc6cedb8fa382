#include "knotqc/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

namespace knotqc {

using cd = std::complex<double>;

std::uint64_t estimator_samples(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  return static_cast<std::uint64_t>(
      std::ceil(kEstimatorConstant * std::log(2.0 / delta) / (epsilon * epsilon)));
}

double hadamard_test_p0(const ComplexVector& psi, const ComplexVector& u_psi, bool imaginary) {
  // Ancilla after H, optional S^dagger, controlled-U:
  //   (|0>|psi> + c |1>U|psi>) / sqrt(2),  c = 1 or -i.
  // The final H leaves (|psi> + c U|psi>) / 2 on ancilla 0.
  const cd c = imaginary ? cd(0.0, -1.0) : cd(1.0, 0.0);
  return (0.5 * (psi + c * u_psi)).squaredNorm();
}

namespace {

struct Sector {
  FusionBasis basis;
  double weight;  // quantum dimension of the total charge
};

// One Hadamard-test chunk; shot outcomes come from its own substream.
class ChunkRunner {
 public:
  ChunkRunner(const std::vector<Sector>& sectors, const BraidWord& b, Chirality chirality)
      : sectors_(sectors), b_(b), chirality_(chirality) {
    double total = 0.0;
    for (const auto& s : sectors_) {
      total += s.weight * static_cast<double>(s.basis.dimension());
      cumulative_.push_back(total);
    }
  }

  // Number of ancilla-0 outcomes among `shots` shots.
  std::uint64_t run(std::seed_seq& seq, std::uint64_t shots, bool imaginary) {
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::uint64_t zeros = 0;
    for (std::uint64_t k = 0; k < shots; ++k) {
      const double r = uniform(rng) * cumulative_.back();
      std::size_t sector = 0;
      while (sector + 1 < cumulative_.size() && r >= cumulative_[sector]) ++sector;
      const auto dim = sectors_[sector].basis.dimension();
      std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
      const std::size_t path = pick(rng);
      const double p0 = probability(sector, path, imaginary);
      if (uniform(rng) < p0) ++zeros;
    }
    return zeros;
  }

 private:
  double probability(std::size_t sector, std::size_t path, bool imaginary) {
    const std::uint64_t key = (static_cast<std::uint64_t>(path) << 2) | (sector << 1) |
                              (imaginary ? 1u : 0u);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const auto& basis = sectors_[sector].basis;
    const auto dim = static_cast<Eigen::Index>(basis.dimension());
    const ComplexVector psi = ComplexVector::Unit(dim, static_cast<Eigen::Index>(path));
    ComplexVector u_psi = psi;
    for (int e : b_.letters()) apply_letter(basis, u_psi, e, chirality_);
    const double p0 = hadamard_test_p0(psi, u_psi, imaginary);
    cache_.emplace(key, p0);
    return p0;
  }

  const std::vector<Sector>& sectors_;
  const BraidWord& b_;
  Chirality chirality_;
  std::vector<double> cumulative_;
  std::unordered_map<std::uint64_t, double> cache_;
};

}  // namespace

JonesEstimate jones_estimate(const BraidWord& b, double epsilon, double delta, std::uint64_t seed,
                             const EstimatorOptions& options) {
  const std::uint64_t shots = estimator_samples(epsilon, delta);
  if (options.chunk == 0) throw std::invalid_argument("chunk size must be positive");
  const Calibration& cal = fibonacci_calibration();

  std::vector<Sector> sectors;
  for (Charge total : {Charge::Vacuum, Charge::Tau}) {
    FusionBasis basis(b.strands(), total);
    if (basis.dimension() == 0) continue;
    sectors.push_back({std::move(basis), total == Charge::Tau ? kGoldenRatio : 1.0});
  }

  const std::uint64_t chunks = (shots + options.chunk - 1) / options.chunk;
  const std::uint64_t jobs = 2 * chunks;  // real part, then imaginary part
  std::vector<std::uint64_t> zeros(jobs, 0);
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, jobs));

  auto worker = [&](unsigned id) {
    ChunkRunner runner(sectors, b, cal.chirality);
    for (std::uint64_t job = id; job < jobs; job += threads) {
      const std::uint64_t part = job / chunks;
      const std::uint64_t chunk = job % chunks;
      const std::uint64_t count = std::min(options.chunk, shots - chunk * options.chunk);
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(part), static_cast<std::uint32_t>(chunk)};
      zeros[job] = runner.run(seq, count, part == 1);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }

  std::uint64_t zeros_re = 0;
  std::uint64_t zeros_im = 0;
  for (std::uint64_t job = 0; job < jobs; ++job) (job < chunks ? zeros_re : zeros_im) += zeros[job];
  const double m = static_cast<double>(shots);
  const cd trace(2.0 * static_cast<double>(zeros_re) / m - 1.0,
                 2.0 * static_cast<double>(zeros_im) / m - 1.0);
  const cd norm = cal.normalization(b.strands(), writhe(b));

  JonesEstimate out;
  out.trace_estimate = trace;
  out.estimate = norm * trace;
  out.samples_per_part = shots;
  out.total_samples = 2 * shots;
  out.scale = std::abs(norm);
  out.epsilon = epsilon;
  out.delta = delta;
  out.seed = seed;
  out.calibration = cal;
  return out;
}

Calibration calibrate_fibonacci(const SkeinBudget& budget) {
  const cd t = fibonacci_jones_point();
  const BraidWord unknot(2, {1});
  const BraidWord trefoil(2, {1, 1, 1});
  const cd v1 = jones_at(unknot, t, budget);
  const cd v3 = jones_at(trefoil, t, budget);
  const cd unlink2 = jones_at(BraidWord(2, {}), t, budget);

  Calibration best;
  double best_error = std::numeric_limits<double>::infinity();
  for (Chirality chirality : {Chirality::Direct, Chirality::Mirror}) {
    const cd t1 = markov_trace(unknot, 5, chirality);
    const cd t3 = markov_trace(trefoil, 5, chirality);
    // v1 = alpha delta t1, v3 = alpha^3 delta t3.
    const cd root = std::sqrt(v3 * t1 / (v1 * t3));
    for (cd alpha : {root, -root}) {
      const cd delta = v1 / (alpha * t1);
      const double error = std::abs(delta - unlink2);
      if (error < best_error) {
        best_error = error;
        best = {chirality, alpha, delta};
      }
    }
  }
  return best;
}

}  // namespace knotqc
