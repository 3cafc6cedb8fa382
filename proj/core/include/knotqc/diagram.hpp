#pragma once

// Planar diagrams of oriented links.
//
// PDDiagram is the planar-diagram code: each crossing lists four arc labels
// counterclockwise starting at the incoming under-arc, plus its sign. The
// over-strand runs from slot 3 to slot 1 at a positive crossing and from
// slot 1 to slot 3 at a negative one. Components without any crossing are
// kept as a count of free loops.
//
// LinkCode is the signed Gauss code of a link: one cyclic visit sequence
// per component. It is the working representation of the skein engine
// because switching and oriented smoothing are purely combinatorial on it.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotqc/braid.hpp"

namespace knotqc {

enum class Pass : std::uint8_t { Over, Under };

inline Pass opposite(Pass p) { return p == Pass::Over ? Pass::Under : Pass::Over; }

struct PDCrossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  int in_under() const { return arcs[0]; }
  int out_under() const { return arcs[2]; }
  int in_over() const { return sign > 0 ? arcs[3] : arcs[1]; }
  int out_over() const { return sign > 0 ? arcs[1] : arcs[3]; }

  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

class PDDiagram {
 public:
  PDDiagram() = default;
  /// Throws std::invalid_argument unless every arc occurs exactly twice,
  /// once entering and once leaving a crossing, and every sign is +-1.
  PDDiagram(std::vector<PDCrossing> crossings, int free_loops);

  static PDDiagram unknot() { return PDDiagram({}, 1); }

  const std::vector<PDCrossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int free_loops() const { return free_loops_; }

  friend bool operator==(const PDDiagram&, const PDDiagram&) = default;

 private:
  std::vector<PDCrossing> crossings_;
  int free_loops_ = 0;
};

struct Visit {
  int crossing = 0;
  Pass pass = Pass::Over;
  friend bool operator==(const Visit&, const Visit&) = default;
};

/// Signed Gauss code of a link. Crossing ids are 0..signs.size()-1; each
/// appears in exactly two visits, one Over and one Under. Empty components
/// are crossingless loops. The first entry of each component is its base
/// point and component order is the traversal order.
struct LinkCode {
  std::vector<std::vector<Visit>> components;
  std::vector<int> signs;

  int crossing_count() const { return static_cast<int>(signs.size()); }
  int component_count() const { return static_cast<int>(components.size()); }

  /// Throws std::invalid_argument on a malformed code.
  void validate() const;

  friend bool operator==(const LinkCode&, const LinkCode&) = default;
};

/// Closure of a braid drawn with strands flowing left to right, position 1
/// on top, closing strands nested above. Arcs are labelled 1..2c.
PDDiagram closure_to_diagram(const BraidWord& b);

/// K+ <-> K- at crossing c (index into crossings()). Throws
/// std::out_of_range for an unknown crossing.
PDDiagram switch_crossing(const PDDiagram& d, std::size_t c);
/// Oriented smoothing K0 at crossing c. The arcs joined by the smoothing
/// take the label of the incoming arc; every other crossing is untouched
/// apart from that relabeling.
PDDiagram smooth_crossing(const PDDiagram& d, std::size_t c);

int components(const PDDiagram& d);

/// Traversal starting at the smallest unvisited arc label; crossing ids are
/// indices into d.crossings().
LinkCode to_link_code(const PDDiagram& d);

LinkCode switch_crossing(const LinkCode& code, int crossing);
/// Smoothing on the Gauss code. Base points and the order of earlier
/// components are preserved: a split appends the cut-off loop right after
/// the component it came from; a merge keeps the earlier component's slot.
/// The last crossing id is renumbered into the removed id.
LinkCode smooth_crossing(const LinkCode& code, int crossing);

/// Relabeling-invariant key: lexicographic minimum of a greedy re-encoding
/// over every base point and both global orientations, per connected piece.
std::string canonical_key(const LinkCode& code);
std::string canonical_key(const PDDiagram& d);

/// Applies arc_map (old label -> new label, must be injective over the
/// labels in use) and reorders crossings: new crossing k = old order[k].
PDDiagram relabeled(const PDDiagram& d, const std::vector<std::pair<int, int>>& arc_map,
                    const std::vector<std::size_t>& order);

/// Text form: one "X a b c d s" line per crossing, then "L k" when k > 0
/// free loops exist. Blank lines and '#' comments are ignored when parsing.
std::string to_string(const PDDiagram& d);
PDDiagram parse_pd(std::string_view text);

}  // namespace knotqc
