#include "knotqc/anyon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotqc {

namespace {

using cd = std::complex<double>;

const double kInvPhi = 1.0 / kGoldenRatio;
const double kInvSqrtPhi = 1.0 / std::sqrt(kGoldenRatio);

// Exchange phases in the vacuum and tau channels.
const cd kR1 = std::polar(1.0, -4.0 * std::numbers::pi / 5.0);
const cd kRTau = std::polar(1.0, 3.0 * std::numbers::pi / 5.0);

struct ExchangeBlock {
  // B = F diag(R1, RTau) F, indexed [new label][old label] with 0 = vacuum.
  std::array<std::array<cd, 2>, 2> b;
};

ExchangeBlock make_exchange_block() {
  const double f[2][2] = {{kInvPhi, kInvSqrtPhi}, {kInvSqrtPhi, -kInvPhi}};
  const cd r[2] = {kR1, kRTau};
  ExchangeBlock block;
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      block.b[p][q] = f[p][0] * r[0] * f[0][q] + f[p][1] * r[1] * f[1][q];
    }
  }
  return block;
}

const ExchangeBlock& exchange_block() {
  static const ExchangeBlock block = make_exchange_block();
  return block;
}

inline bool is_tau(std::uint32_t code, int j) { return (code >> j) & 1u; }

}  // namespace

FusionBasis::FusionBasis(int anyons, Charge total) : anyons_(anyons), total_(total) {
  if (anyons < 0 || anyons > kMaxAnyons) {
    throw std::invalid_argument("anyon count must lie in 0.." + std::to_string(kMaxAnyons));
  }
  // Depth-first over x_1..x_n; x_0 = vacuum is bit 0 clear.
  std::vector<std::uint32_t> stack{0u};
  std::vector<int> depth{0};
  while (!stack.empty()) {
    const std::uint32_t code = stack.back();
    const int j = depth.back();
    stack.pop_back();
    depth.pop_back();
    if (j == anyons) {
      if (is_tau(code, j) == (total == Charge::Tau)) codes_.push_back(code);
      continue;
    }
    // From vacuum the only step is to tau; from tau both are allowed.
    stack.push_back(code | (1u << (j + 1)));
    depth.push_back(j + 1);
    if (is_tau(code, j)) {
      stack.push_back(code);
      depth.push_back(j + 1);
    }
  }
  std::sort(codes_.begin(), codes_.end());
  index_.reserve(codes_.size());
  for (std::size_t k = 0; k < codes_.size(); ++k) index_.emplace(codes_[k], k);
}

std::optional<std::size_t> FusionBasis::find(std::uint32_t code) const {
  auto it = index_.find(code);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FusionPath FusionBasis::path(std::size_t index) const {
  FusionPath p;
  p.labels.reserve(static_cast<std::size_t>(anyons_) + 1);
  for (int j = 0; j <= anyons_; ++j) p.labels.push_back(label(index, j));
  return p;
}

std::vector<FusionPath> fusion_basis(int n, Charge total) {
  FusionBasis basis(n, total);
  std::vector<FusionPath> out;
  out.reserve(basis.dimension());
  for (std::size_t k = 0; k < basis.dimension(); ++k) out.push_back(basis.path(k));
  return out;
}

AnyonState::AnyonState(std::shared_ptr<const FusionBasis> basis, ComplexVector amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (!basis_) throw std::invalid_argument("state needs a basis");
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_->dimension()) {
    throw std::invalid_argument("amplitude vector does not match the fusion basis");
  }
}

QubitLayout QubitLayout::contiguous(int qubits) {
  QubitLayout layout;
  for (int q = 0; q < qubits; ++q) {
    layout.quartets.push_back({4 * q + 1, 4 * q + 2, 4 * q + 3, 4 * q + 4});
  }
  return layout;
}

void QubitLayout::validate(int anyons) const {
  std::set<int> used;
  for (const auto& quartet : quartets) {
    for (int a : quartet) {
      if (a < 1 || a > anyons) throw std::invalid_argument("quartet index out of range");
      if (!used.insert(a).second) throw std::invalid_argument("quartets overlap");
    }
    if (quartet[1] != quartet[0] + 1) {
      throw std::invalid_argument("measured pair must be adjacent anyons");
    }
  }
}

void apply_letter(const FusionBasis& basis, ComplexVector& amplitudes, int letter,
                  Chirality chirality) {
  const int i = std::abs(letter);
  const int n = basis.anyons();
  if (letter == 0 || i >= n) throw std::invalid_argument("braid letter out of range");
  const bool inverse = (letter < 0) != (chirality == Chirality::Mirror);
  const auto& block = exchange_block().b;
  auto maybe_conj = [inverse](cd x) { return inverse ? std::conj(x) : x; };
  const cd r1 = maybe_conj(kR1);
  const cd rtau = maybe_conj(kRTau);

  ComplexVector out = ComplexVector::Zero(amplitudes.size());
  for (std::size_t k = 0; k < basis.dimension(); ++k) {
    const cd amp = amplitudes[static_cast<Eigen::Index>(k)];
    if (amp == cd(0.0, 0.0)) continue;
    const std::uint32_t code = basis.code(k);
    const bool a = is_tau(code, i - 1);
    const bool b = is_tau(code, i);
    const bool c = is_tau(code, i + 1);
    if (!a) {
      out[static_cast<Eigen::Index>(k)] += (c ? rtau : r1) * amp;
    } else if (!c) {
      out[static_cast<Eigen::Index>(k)] += rtau * amp;
    } else {
      const std::uint32_t flipped = code ^ (1u << i);
      const auto partner = *basis.find(flipped);
      const int old_label = b ? 1 : 0;
      out[static_cast<Eigen::Index>(k)] += maybe_conj(block[old_label][old_label]) * amp;
      out[static_cast<Eigen::Index>(partner)] += maybe_conj(block[1 - old_label][old_label]) * amp;
    }
  }
  amplitudes = std::move(out);
}

ComplexMatrix sigma_unitary(int i, int n, Charge total) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  const FusionBasis basis(n, total);
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  ComplexMatrix u(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    ComplexVector column = ComplexVector::Unit(dim, k);
    apply_letter(basis, column, i, Chirality::Direct);
    u.col(k) = column;
  }
  return u;
}

std::string to_string(const AnyonState& s, double threshold) {
  std::ostringstream out;
  out.precision(12);
  const auto& basis = s.basis();
  for (std::size_t k = 0; k < basis.dimension(); ++k) {
    const cd amp = s.amplitudes()[static_cast<Eigen::Index>(k)];
    if (std::abs(amp) <= threshold) continue;
    for (int j = 0; j <= s.anyons(); ++j) out << (basis.label(k, j) == Charge::Tau ? 't' : '1');
    out << " -> " << amp.real() << (amp.imag() < 0 ? " - " : " + ") << std::abs(amp.imag())
        << "i\n";
  }
  return out.str();
}

AnyonState init_state(int qubits) {
  if (qubits < 1) throw std::invalid_argument("need at least one qubit");
  const int n = 4 * qubits;
  auto basis = std::make_shared<const FusionBasis>(n, Charge::Vacuum);
  std::uint32_t code = 0;
  for (int j = 1; j <= n; j += 2) code |= 1u << j;
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(basis->dimension()));
  amps[static_cast<Eigen::Index>(*basis->find(code))] = 1.0;
  return AnyonState(std::move(basis), std::move(amps));
}

AnyonState apply_braid(const AnyonState& s, const BraidWord& b, Chirality chirality) {
  if (b.strands() != s.anyons()) {
    throw std::invalid_argument("braid has " + std::to_string(b.strands()) +
                                " strands but the state holds " +
                                std::to_string(s.anyons()) + " anyons");
  }
  ComplexVector amps = s.amplitudes();
  for (int e : b.letters()) apply_letter(s.basis(), amps, e, chirality);
  return AnyonState(s.basis_ptr(), std::move(amps));
}

namespace {

// Calls visit(vacuum_amplitude, tau_amplitude, k_vacuum, k_tau) once per
// group of basis states that differ only in the pair's fusion channel,
// expressed in the pair basis. Missing members are reported as npos.
template <typename Visit>
void for_each_pair_group(const AnyonState& s, int first, Visit visit) {
  const auto& basis = s.basis();
  const auto& amps = s.amplitudes();
  const int n = s.anyons();
  if (first < 1 || first >= n) throw std::invalid_argument("pair index out of range");
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  for (std::size_t k = 0; k < basis.dimension(); ++k) {
    const std::uint32_t code = basis.code(k);
    const bool a = is_tau(code, first - 1);
    const bool b = is_tau(code, first);
    const bool c = is_tau(code, first + 1);
    const cd amp = amps[static_cast<Eigen::Index>(k)];
    if (!a) {
      // Pair charge equals x_{first+1}.
      if (c) {
        visit(cd(0.0), amp, npos, k);
      } else {
        visit(amp, cd(0.0), k, npos);
      }
    } else if (!c) {
      visit(cd(0.0), amp, npos, k);
    } else if (!b) {
      const auto partner = *basis.find(code | (1u << first));
      const cd psi1 = amp;
      const cd psitau = amps[static_cast<Eigen::Index>(partner)];
      visit(kInvPhi * psi1 + kInvSqrtPhi * psitau, kInvSqrtPhi * psi1 - kInvPhi * psitau, k,
            partner);
    }
  }
}

}  // namespace

std::pair<double, double> pair_fusion_probabilities(const AnyonState& s, int first) {
  double p0 = 0.0;
  double p1 = 0.0;
  for_each_pair_group(s, first, [&](cd vac, cd tau, std::size_t, std::size_t) {
    p0 += std::norm(vac);
    p1 += std::norm(tau);
  });
  const double total = p0 + p1;
  return {p0 / total, p1 / total};
}

std::pair<AnyonState, double> project_pair(const AnyonState& s, int first, Charge outcome) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  ComplexVector out = ComplexVector::Zero(s.amplitudes().size());
  double kept = 0.0;
  const double total = s.amplitudes().squaredNorm();
  for_each_pair_group(s, first, [&](cd vac, cd tau, std::size_t kvac, std::size_t ktau) {
    if (outcome == Charge::Vacuum) {
      tau = 0.0;
    } else {
      vac = 0.0;
    }
    kept += std::norm(vac) + std::norm(tau);
    if (kvac != npos && ktau != npos) {
      // Back from the pair basis through F (self-inverse); kvac holds
      // x_first = vacuum, ktau holds x_first = tau.
      out[static_cast<Eigen::Index>(kvac)] = kInvPhi * vac + kInvSqrtPhi * tau;
      out[static_cast<Eigen::Index>(ktau)] = kInvSqrtPhi * vac - kInvPhi * tau;
    } else if (kvac != npos) {
      out[static_cast<Eigen::Index>(kvac)] = vac;
    } else {
      out[static_cast<Eigen::Index>(ktau)] = tau;
    }
  });
  const double probability = total > 0.0 ? kept / total : 0.0;
  if (kept > 0.0) out /= std::sqrt(kept);
  return {AnyonState(s.basis_ptr(), std::move(out)), probability};
}

std::pair<double, double> fusion_probabilities(const AnyonState& s, int qubit,
                                               const QubitLayout& layout) {
  layout.validate(s.anyons());
  if (qubit < 0 || qubit >= layout.qubits()) throw std::invalid_argument("qubit index out of range");
  return pair_fusion_probabilities(s, layout.quartets[static_cast<std::size_t>(qubit)][0]);
}

std::string sample_measurement(const AnyonState& s, const QubitLayout& layout,
                               std::uint64_t seed) {
  layout.validate(s.anyons());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  AnyonState current = s;
  std::string bits;
  for (const auto& quartet : layout.quartets) {
    const auto [p0, p1] = pair_fusion_probabilities(current, quartet[0]);
    const Charge outcome = uniform(rng) < p0 ? Charge::Vacuum : Charge::Tau;
    bits += outcome == Charge::Vacuum ? '0' : '1';
    current = project_pair(current, quartet[0], outcome).first;
  }
  return bits;
}

double prob_all_zero(const BraidWord& b, const QubitLayout& layout, Chirality chirality) {
  if (b.strands() != 4 * layout.qubits()) {
    throw std::invalid_argument("braid strand count must be four times the qubit count");
  }
  layout.validate(b.strands());
  AnyonState state = apply_braid(init_state(layout.qubits()), b, chirality);
  double probability = 1.0;
  for (const auto& quartet : layout.quartets) {
    auto [next, p] = project_pair(state, quartet[0], Charge::Vacuum);
    probability *= p;
    if (probability == 0.0) return 0.0;
    state = std::move(next);
  }
  return probability;
}

std::complex<double> markov_trace(const BraidWord& b, int k, Chirality chirality) {
  if (k != 5) throw std::invalid_argument("only the k = 5 Fibonacci model is supported");
  cd weighted = 0.0;
  double weight_sum = 0.0;
  for (Charge total : {Charge::Vacuum, Charge::Tau}) {
    const FusionBasis basis(b.strands(), total);
    const double d = total == Charge::Tau ? kGoldenRatio : 1.0;
    const auto dim = static_cast<Eigen::Index>(basis.dimension());
    cd trace = 0.0;
    for (Eigen::Index p = 0; p < dim; ++p) {
      ComplexVector v = ComplexVector::Unit(dim, p);
      for (int e : b.letters()) apply_letter(basis, v, e, chirality);
      trace += v[p];
    }
    weighted += d * trace;
    weight_sum += d * static_cast<double>(dim);
  }
  return weighted / weight_sum;
}

std::complex<double> Calibration::normalization(int strands, int writhe) const {
  return std::pow(alpha, writhe) * std::pow(delta, strands - 1);
}

const Calibration& fibonacci_calibration() {
  static const Calibration frozen{Chirality::Mirror, std::polar(1.0, -std::numbers::pi / 5.0),
                                  cd(-kGoldenRatio, 0.0)};
  return frozen;
}

std::complex<double> fibonacci_jones_point() {
  return std::polar(1.0, 2.0 * std::numbers::pi / 5.0);
}

}  // namespace knotqc
