#pragma once

// Fibonacci-anyon topological quantum computer simulator.
//
// States of n tau-anyons live in the span of fusion paths
// x_0 = 1, x_1, ..., x_n where x_j is the total charge of the first j
// anyons, so consecutive labels obey tau x tau = 1 + tau and tau x 1 = tau.
// Exchanging anyons i and i+1 acts on the label x_i only: by an R-phase
// when the pair's fusion channel is fixed by its neighbours, otherwise by
// F R F on the two-dimensional block spanned by x_i in {1, tau}.
//
//   R = diag(e^{-4 pi i / 5}, e^{3 pi i / 5})            (vacuum, tau)
//   F = [[phi^-1, phi^-1/2], [phi^-1/2, -phi^-1]]
//
// A qubit is a quartet of anyons created as two vacuum pairs; measuring it
// fuses the quartet's first pair, vacuum reading as 0.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knotqc/braid.hpp"

namespace knotqc {

enum class Charge : std::uint8_t { Vacuum = 0, Tau = 1 };

/// Which exchange a positive braid letter performs. The skein calibration
/// selects Mirror: sigma_i acts as the inverse of the R-matrix exchange.
enum class Chirality : std::uint8_t { Direct, Mirror };

inline constexpr int kMaxAnyons = 24;
inline constexpr double kGoldenRatio = 1.6180339887498948482;

struct FusionPath {
  std::vector<Charge> labels;
  friend bool operator==(const FusionPath&, const FusionPath&) = default;
};

/// Admissible paths of n anyons with fixed total charge, in increasing order
/// of their bit encoding (bit j set <=> x_j = tau).
class FusionBasis {
 public:
  /// Throws std::invalid_argument unless 0 <= n <= kMaxAnyons.
  FusionBasis(int anyons, Charge total);

  int anyons() const { return anyons_; }
  Charge total() const { return total_; }
  std::size_t dimension() const { return codes_.size(); }
  std::uint32_t code(std::size_t index) const { return codes_[index]; }
  Charge label(std::size_t index, int j) const {
    return ((codes_[index] >> j) & 1u) ? Charge::Tau : Charge::Vacuum;
  }
  std::optional<std::size_t> find(std::uint32_t code) const;
  FusionPath path(std::size_t index) const;

 private:
  int anyons_;
  Charge total_;
  std::vector<std::uint32_t> codes_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

std::vector<FusionPath> fusion_basis(int n, Charge total);

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

class AnyonState {
 public:
  /// Throws std::invalid_argument when the amplitude vector does not match
  /// the basis dimension.
  AnyonState(std::shared_ptr<const FusionBasis> basis, ComplexVector amplitudes);

  int anyons() const { return basis_->anyons(); }
  Charge total() const { return basis_->total(); }
  const FusionBasis& basis() const { return *basis_; }
  const std::shared_ptr<const FusionBasis>& basis_ptr() const { return basis_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  std::shared_ptr<const FusionBasis> basis_;
  ComplexVector amplitudes_;
};

struct QubitLayout {
  /// 1-based anyon indices; the first two of each quartet are the measured
  /// pair and must be adjacent.
  std::vector<std::array<int, 4>> quartets;

  static QubitLayout contiguous(int qubits);
  int qubits() const { return static_cast<int>(quartets.size()); }
  /// Throws std::invalid_argument for overlapping or out-of-range quartets
  /// or a non-adjacent measured pair.
  void validate(int anyons) const;
};

/// Exchange of anyons i, i+1 as a dense unitary on fusion_basis(n, total),
/// R-matrix chirality. Throws std::invalid_argument for i outside 1..n-1.
ComplexMatrix sigma_unitary(int i, int n, Charge total);

/// Applies one braid letter in place.
void apply_letter(const FusionBasis& basis, ComplexVector& amplitudes, int letter,
                  Chirality chirality);

/// Debug dump, one "path -> amplitude" line per non-negligible amplitude,
/// paths written with '1' for vacuum and 't' for tau.
std::string to_string(const AnyonState& s, double threshold = 1e-12);

/// q qubits = 4q anyons, every creation pair in the vacuum channel.
AnyonState init_state(int qubits);

/// Throws std::invalid_argument when b.strands() != s.anyons().
AnyonState apply_braid(const AnyonState& s, const BraidWord& b,
                       Chirality chirality = Chirality::Mirror);

/// (p0, p1) for fusing anyons (first, first+1) to vacuum / tau.
std::pair<double, double> pair_fusion_probabilities(const AnyonState& s, int first);
/// Post-measurement state of the pair (first, first+1) with the given
/// outcome, normalised; also returns the outcome probability.
std::pair<AnyonState, double> project_pair(const AnyonState& s, int first, Charge outcome);

std::pair<double, double> fusion_probabilities(const AnyonState& s, int qubit,
                                               const QubitLayout& layout);

/// Sequential projective measurement of every qubit; '0' = vacuum.
std::string sample_measurement(const AnyonState& s, const QubitLayout& layout,
                               std::uint64_t seed);

/// Exact probability that every qubit reads 0 after running b on the
/// initial state.
double prob_all_zero(const BraidWord& b, const QubitLayout& layout,
                     Chirality chirality = Chirality::Mirror);

/// Quantum-dimension weighted trace of the braid over both total-charge
/// sectors, normalised so that the identity has trace 1. Only k = 5 (the
/// Fibonacci model) is supported.
std::complex<double> markov_trace(const BraidWord& b, int k = 5,
                                  Chirality chirality = Chirality::Mirror);

/// Normalisation turning a Markov trace into a Jones value:
/// V(closure of b) at t = e^{2 pi i / 5} equals
/// alpha^writhe * delta^(strands - 1) * markov_trace(b).
struct Calibration {
  Chirality chirality = Chirality::Mirror;
  std::complex<double> alpha;
  std::complex<double> delta;

  std::complex<double> normalization(int strands, int writhe) const;
};

/// Frozen constants: Mirror, alpha = e^{-i pi / 5}, delta = -phi.
const Calibration& fibonacci_calibration();

/// e^{2 pi i / 5}, the point the Fibonacci model evaluates.
std::complex<double> fibonacci_jones_point();

}  // namespace knotqc
