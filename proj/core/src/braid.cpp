#include "knotqc/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

#include "knotqc/errors.hpp"

namespace knotqc {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int e : letters_) {
    if (e == 0 || std::abs(e) >= strands_) {
      throw std::invalid_argument("braid letter " + std::to_string(e) +
                                  " out of range for B_" +
                                  std::to_string(strands_));
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& e : out) e = -e;
  return BraidWord(strands_, std::move(out));
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.strands_ != v.strands_) {
    throw std::invalid_argument("cannot multiply braids with different strand counts");
  }
  std::vector<int> out = u.letters_;
  out.insert(out.end(), v.letters_.begin(), v.letters_.end());
  return BraidWord(u.strands_, std::move(out));
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  for (int j = 0; j < n; ++j) images_[static_cast<std::size_t>(j)] = j + 1;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

bool Permutation::is_identity() const {
  for (int j = 0; j < size(); ++j) {
    if (images_[static_cast<std::size_t>(j)] != j + 1) return false;
  }
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (seen[j]) continue;
    ++cycles;
    for (std::size_t k = j; !seen[k]; k = static_cast<std::size_t>(images_[k] - 1)) {
      seen[k] = true;
    }
  }
  return cycles;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) {
    out[static_cast<std::size_t>(images_[j] - 1)] = static_cast<int>(j) + 1;
  }
  return Permutation(std::move(out));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) out[j] = next(images_[j]);
  return Permutation(std::move(out));
}

BraidWord parse_braid(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  int explicit_n = 0;
  bool first = true;
  std::vector<int> letters;
  int max_abs = 0;
  while (in >> token) {
    if (first && token.rfind("n=", 0) == 0) {
      first = false;
      const std::string digits = token.substr(2);
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("malformed strand count '" + token + "'");
      }
      explicit_n = std::stoi(digits);
      if (explicit_n < 1) throw ParseError("strand count must be positive");
      continue;
    }
    first = false;
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw ParseError("malformed braid letter '" + token + "'");
    }
    if (pos != token.size()) throw ParseError("malformed braid letter '" + token + "'");
    if (value == 0) throw ParseError("braid letter 0 does not exist");
    max_abs = std::max(max_abs, std::abs(value));
    letters.push_back(value);
  }
  int n = max_abs + 1;
  if (explicit_n != 0) {
    if (max_abs >= explicit_n) {
      throw ParseError("letter " + std::to_string(max_abs) + " needs more than " +
                       std::to_string(explicit_n) + " strands");
    }
    n = explicit_n;
  }
  return BraidWord(n, std::move(letters));
}

std::string to_string(const BraidWord& b) {
  std::string out = "n=" + std::to_string(b.strands());
  for (int e : b.letters()) out += ' ' + std::to_string(e);
  return out;
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<int> stack;
  stack.reserve(b.length());
  for (int e : b.letters()) {
    if (!stack.empty() && stack.back() == -e) {
      stack.pop_back();
    } else {
      stack.push_back(e);
    }
  }
  return BraidWord(b.strands(), std::move(stack));
}

Permutation permutation(const BraidWord& b) {
  // strand_at[p] = starting index of the strand currently at position p.
  const auto n = static_cast<std::size_t>(b.strands());
  std::vector<int> strand_at(n);
  for (std::size_t p = 0; p < n; ++p) strand_at[p] = static_cast<int>(p);
  for (int e : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(e) - 1);
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  std::vector<int> images(n);
  for (std::size_t p = 0; p < n; ++p) {
    images[static_cast<std::size_t>(strand_at[p])] = static_cast<int>(p) + 1;
  }
  return Permutation(std::move(images));
}

bool is_pure(const BraidWord& b) { return permutation(b).is_identity(); }

int closure_components(const BraidWord& b) { return permutation(b).cycle_count(); }

int writhe(const BraidWord& b) {
  int w = 0;
  for (int e : b.letters()) w += e > 0 ? 1 : -1;
  return w;
}

BraidWord markov_stabilize(const BraidWord& b) {
  std::vector<int> letters = b.letters();
  letters.push_back(b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

BraidWord markov_conjugate(const BraidWord& b, const BraidWord& g) {
  if (b.strands() != g.strands()) {
    throw std::invalid_argument("conjugating braid has a different strand count");
  }
  return g * b * g.inverse();
}

BraidWord cable(const BraidWord& b, int r) {
  if (r < 1) throw std::invalid_argument("cable multiplicity must be >= 1");
  if (r == 1) return b;
  std::vector<int> letters;
  letters.reserve(b.length() * static_cast<std::size_t>(r * r));
  for (int e : b.letters()) {
    const int base = (std::abs(e) - 1) * r;
    const int sign = e > 0 ? 1 : -1;
    // Move the strands of the left block across the right block, rightmost
    // first; each strand sweeps r positions.
    for (int k = r; k >= 1; --k) {
      for (int m = 0; m < r; ++m) letters.push_back(sign * (base + k + m));
    }
  }
  return BraidWord(b.strands() * r, std::move(letters));
}

BraidWord random_braid(int n, std::size_t length, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_braid needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2 * (n - 1) - 1);
  std::vector<int> letters(length);
  for (auto& e : letters) {
    const int k = pick(rng);
    e = k < n - 1 ? k + 1 : -(k - (n - 1) + 1);
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace knotqc
