#pragma once

// Gauss codes (intersection sequences) of knot diagrams and the planarity
// test for them.
//
// A signed Gauss code fixes a rotation system at each crossing, so the
// 4-valent graph it describes embeds in a unique closed oriented surface,
// the carrier surface. The code is realizable by a planar knot diagram
// exactly when that surface is a sphere: faces = crossings + 2.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knotqc/diagram.hpp"

namespace knotqc {

struct GaussEntry {
  Pass pass = Pass::Over;
  int label = 0;
  int sign = 1;
  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

class GaussCode {
 public:
  GaussCode() = default;
  /// Throws std::invalid_argument unless each label occurs exactly twice,
  /// once Over and once Under, with matching signs.
  explicit GaussCode(std::vector<GaussEntry> entries);

  const std::vector<GaussEntry>& entries() const { return entries_; }
  int crossing_count() const { return static_cast<int>(entries_.size() / 2); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const GaussCode&, const GaussCode&) = default;

 private:
  std::vector<GaussEntry> entries_;
};

/// Grammar: repeated tokens [OU]<label>[+-], whitespace allowed between
/// tokens. Throws ParseError on malformed or inconsistent codes.
GaussCode parse_gauss(std::string_view text);
std::string to_string(const GaussCode& code);

struct CarrierSurface {
  int vertices = 0;
  int edges = 0;
  int faces = 2;
  int euler_characteristic() const { return vertices - edges + faces; }
};

CarrierSurface carrier_surface(const GaussCode& code);
bool realizable(const GaussCode& code);

struct UnsignedEntry {
  Pass pass = Pass::Over;
  int label = 0;
};

/// Grammar: repeated tokens [OU]<label>; signs are not given.
std::vector<UnsignedEntry> parse_unsigned_gauss(std::string_view text);

inline constexpr int kUnsignedRealizabilityLimit = 16;

/// True iff some choice of crossing signs makes the code realizable.
/// Exhaustive over 2^c signings; throws BudgetExceeded when c exceeds
/// kUnsignedRealizabilityLimit and ParseError on an inconsistent code.
bool realizable_unsigned(std::span<const UnsignedEntry> entries);

/// Traversal record of a one-component diagram, labels = crossing index + 1.
/// Throws std::invalid_argument for links.
GaussCode gauss_from_diagram(const PDDiagram& d);

/// One-component LinkCode with crossing ids assigned in order of first
/// appearance.
LinkCode to_link_code(const GaussCode& code);

}  // namespace knotqc
