#pragma once

// Braid words in the Artin generators of B_n.
//
// A letter +i is sigma_i (strand at position i crosses over strand i+1),
// -i is its inverse. Words are read left to right. No normal form is kept:
// two words are compared either literally or through invariants.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knotqc {

class BraidWord {
 public:
  /// The identity of B_1.
  BraidWord() = default;
  /// Throws std::invalid_argument when strands < 1 or a letter is out of
  /// range (zero or |e| >= strands).
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity_word() const { return letters_.empty(); }

  /// Reversed and negated letters.
  BraidWord inverse() const;

  /// Concatenation; both words must live in the same B_n.
  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Element of S_n in one-line notation: images()[j] is the final position
/// (1-based) of the strand that starts at position j+1.
class Permutation {
 public:
  explicit Permutation(int n);
  /// Throws std::invalid_argument unless images is a bijection of 1..n.
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j - 1)]; }

  bool is_identity() const;
  int cycle_count() const;
  Permutation inverse() const;
  /// First *this, then next: (this.then(next))(j) = next(this(j)).
  Permutation then(const Permutation& next) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Braid text: optional "n=<k>" prefix, then whitespace-separated nonzero
/// signed integers. Without a prefix the strand count is max|e| + 1.
BraidWord parse_braid(std::string_view text);
/// Always includes the "n=" prefix so the strand count survives.
std::string to_string(const BraidWord& b);

BraidWord free_reduce(const BraidWord& b);
Permutation permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);
int closure_components(const BraidWord& b);
int writhe(const BraidWord& b);

/// alpha in B_n  ->  alpha * sigma_n in B_{n+1}.
BraidWord markov_stabilize(const BraidWord& b);
/// g * b * g^-1. Throws std::invalid_argument on strand mismatch.
BraidWord markov_conjugate(const BraidWord& b, const BraidWord& g);

/// r-strand cable: each sigma_i^{+-1} becomes the block crossing in which
/// every strand of block i passes over (resp. under) every strand of block
/// i+1. Throws std::invalid_argument when r < 1.
BraidWord cable(const BraidWord& b, int r);

/// Deterministic pseudo-random word, letters uniform on +-{1..n-1}.
/// Throws std::invalid_argument when n < 2.
BraidWord random_braid(int n, std::size_t length, std::uint64_t seed);

}  // namespace knotqc
