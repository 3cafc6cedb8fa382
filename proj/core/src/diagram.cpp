#include "knotqc/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "knotqc/errors.hpp"

namespace knotqc {

PDDiagram::PDDiagram(std::vector<PDCrossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw std::invalid_argument("negative free loop count");
  std::unordered_map<int, std::pair<int, int>> uses;  // arc -> (in, out)
  for (const auto& x : crossings_) {
    if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("crossing sign must be +-1");
    ++uses[x.in_under()].first;
    ++uses[x.in_over()].first;
    ++uses[x.out_under()].second;
    ++uses[x.out_over()].second;
  }
  for (const auto& [arc, count] : uses) {
    if (count.first != 1 || count.second != 1) {
      throw std::invalid_argument("arc " + std::to_string(arc) +
                                  " must enter and leave exactly one crossing slot each");
    }
  }
}

void LinkCode::validate() const {
  std::vector<int> over(signs.size(), 0);
  std::vector<int> under(signs.size(), 0);
  for (const auto& comp : components) {
    for (const auto& v : comp) {
      if (v.crossing < 0 || v.crossing >= crossing_count()) {
        throw std::invalid_argument("visit refers to unknown crossing");
      }
      ++(v.pass == Pass::Over ? over : under)[static_cast<std::size_t>(v.crossing)];
    }
  }
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (over[k] != 1 || under[k] != 1) {
      throw std::invalid_argument("each crossing needs one over and one under visit");
    }
    if (signs[k] != 1 && signs[k] != -1) throw std::invalid_argument("sign must be +-1");
  }
}

PDDiagram closure_to_diagram(const BraidWord& b) {
  const auto n = static_cast<std::size_t>(b.strands());
  std::vector<int> current(n);
  std::iota(current.begin(), current.end(), 1);
  int next_arc = b.strands() + 1;

  std::vector<PDCrossing> crossings;
  crossings.reserve(b.length());
  for (int e : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(e) - 1);
    const int nw = current[i];
    const int sw = current[i + 1];
    const int ne = next_arc++;
    const int se = next_arc++;
    if (e > 0) {
      // Bottom strand passes under, SW -> NE.
      crossings.push_back({{sw, se, ne, nw}, +1});
    } else {
      // Top strand passes under, NW -> SE.
      crossings.push_back({{nw, sw, se, ne}, -1});
    }
    current[i] = ne;
    current[i + 1] = se;
  }

  int free_loops = 0;
  std::unordered_map<int, int> closing;
  for (std::size_t p = 0; p < n; ++p) {
    const int start = static_cast<int>(p) + 1;
    if (current[p] == start) {
      ++free_loops;
    } else {
      closing[current[p]] = start;
    }
  }
  // Compact labels to 1..2c in order of first appearance.
  std::unordered_map<int, int> compact;
  for (auto& x : crossings) {
    for (int& a : x.arcs) {
      if (auto it = closing.find(a); it != closing.end()) a = it->second;
      auto [it, inserted] = compact.try_emplace(a, static_cast<int>(compact.size()) + 1);
      a = it->second;
    }
  }
  return PDDiagram(std::move(crossings), free_loops);
}

PDDiagram switch_crossing(const PDDiagram& d, std::size_t c) {
  if (c >= d.crossing_count()) throw std::out_of_range("unknown crossing id");
  std::vector<PDCrossing> crossings = d.crossings();
  PDCrossing& x = crossings[c];
  const auto& a = x.arcs;
  // The old over-strand becomes the under-strand; rotate so that its
  // incoming arc comes first.
  if (x.sign > 0) {
    x = {{a[3], a[0], a[1], a[2]}, -1};
  } else {
    x = {{a[1], a[2], a[3], a[0]}, +1};
  }
  return PDDiagram(std::move(crossings), d.free_loops());
}

PDDiagram smooth_crossing(const PDDiagram& d, std::size_t c) {
  if (c >= d.crossing_count()) throw std::out_of_range("unknown crossing id");
  const PDCrossing x = d.crossings()[c];
  std::vector<PDCrossing> rest;
  rest.reserve(d.crossing_count() - 1);
  for (std::size_t k = 0; k < d.crossing_count(); ++k) {
    if (k != c) rest.push_back(d.crossings()[k]);
  }
  int loops = d.free_loops();
  std::unordered_map<int, int> renamed;
  auto resolve = [&](int arc) {
    while (true) {
      auto it = renamed.find(arc);
      if (it == renamed.end()) return arc;
      arc = it->second;
    }
  };
  const std::array<std::pair<int, int>, 2> joins{
      {{x.in_under(), x.out_over()}, {x.in_over(), x.out_under()}}};
  for (auto [in, out] : joins) {
    in = resolve(in);
    out = resolve(out);
    if (in == out) {
      ++loops;
      continue;
    }
    renamed[out] = in;
    for (auto& y : rest) {
      for (int& a : y.arcs) {
        if (a == out) a = in;
      }
    }
  }
  return PDDiagram(std::move(rest), loops);
}

namespace {

struct ArcHead {
  std::size_t crossing;
  Pass pass;
  int next;
};

std::map<int, ArcHead> arc_heads(const PDDiagram& d) {
  std::map<int, ArcHead> heads;
  for (std::size_t k = 0; k < d.crossing_count(); ++k) {
    const auto& x = d.crossings()[k];
    heads[x.in_under()] = {k, Pass::Under, x.out_under()};
    heads[x.in_over()] = {k, Pass::Over, x.out_over()};
  }
  return heads;
}

}  // namespace

int components(const PDDiagram& d) {
  const auto heads = arc_heads(d);
  std::map<int, bool> seen;
  int count = d.free_loops();
  for (const auto& [arc, head] : heads) {
    if (seen[arc]) continue;
    ++count;
    for (int a = arc; !seen[a]; a = heads.at(a).next) seen[a] = true;
  }
  return count;
}

LinkCode to_link_code(const PDDiagram& d) {
  const auto heads = arc_heads(d);
  LinkCode code;
  code.signs.reserve(d.crossing_count());
  for (const auto& x : d.crossings()) code.signs.push_back(x.sign);
  std::map<int, bool> seen;
  for (const auto& [arc, head] : heads) {
    if (seen[arc]) continue;
    std::vector<Visit> comp;
    for (int a = arc; !seen[a]; a = heads.at(a).next) {
      seen[a] = true;
      const auto& h = heads.at(a);
      comp.push_back({static_cast<int>(h.crossing), h.pass});
    }
    code.components.push_back(std::move(comp));
  }
  for (int k = 0; k < d.free_loops(); ++k) code.components.emplace_back();
  return code;
}

LinkCode switch_crossing(const LinkCode& code, int crossing) {
  if (crossing < 0 || crossing >= code.crossing_count()) {
    throw std::out_of_range("unknown crossing id");
  }
  LinkCode out = code;
  out.signs[static_cast<std::size_t>(crossing)] = -out.signs[static_cast<std::size_t>(crossing)];
  for (auto& comp : out.components) {
    for (auto& v : comp) {
      if (v.crossing == crossing) v.pass = opposite(v.pass);
    }
  }
  return out;
}

LinkCode smooth_crossing(const LinkCode& code, int crossing) {
  if (crossing < 0 || crossing >= code.crossing_count()) {
    throw std::out_of_range("unknown crossing id");
  }
  // Locate both visits in traversal order.
  std::array<std::pair<std::size_t, std::size_t>, 2> at{};
  int found = 0;
  for (std::size_t ci = 0; ci < code.components.size() && found < 2; ++ci) {
    const auto& comp = code.components[ci];
    for (std::size_t p = 0; p < comp.size() && found < 2; ++p) {
      if (comp[p].crossing == crossing) at[static_cast<std::size_t>(found++)] = {ci, p};
    }
  }
  const auto [c1, p1] = at[0];
  const auto [c2, p2] = at[1];

  LinkCode out;
  out.signs = code.signs;
  out.components.reserve(code.components.size() + 1);
  for (std::size_t ci = 0; ci < code.components.size(); ++ci) {
    const auto& comp = code.components[ci];
    if (ci == c1 && c1 == c2) {
      // P x Q x R  ->  P R  and the loop Q.
      std::vector<Visit> outer(comp.begin(), comp.begin() + static_cast<std::ptrdiff_t>(p1));
      outer.insert(outer.end(), comp.begin() + static_cast<std::ptrdiff_t>(p2) + 1, comp.end());
      std::vector<Visit> inner(comp.begin() + static_cast<std::ptrdiff_t>(p1) + 1,
                               comp.begin() + static_cast<std::ptrdiff_t>(p2));
      out.components.push_back(std::move(outer));
      out.components.push_back(std::move(inner));
    } else if (ci == c1) {
      // A = P x R, B = S x T  ->  P T S R.
      const auto& other = code.components[c2];
      std::vector<Visit> merged(comp.begin(), comp.begin() + static_cast<std::ptrdiff_t>(p1));
      merged.insert(merged.end(), other.begin() + static_cast<std::ptrdiff_t>(p2) + 1, other.end());
      merged.insert(merged.end(), other.begin(), other.begin() + static_cast<std::ptrdiff_t>(p2));
      merged.insert(merged.end(), comp.begin() + static_cast<std::ptrdiff_t>(p1) + 1, comp.end());
      out.components.push_back(std::move(merged));
    } else if (ci == c2) {
      continue;
    } else {
      out.components.push_back(comp);
    }
  }

  const int last = code.crossing_count() - 1;
  out.signs[static_cast<std::size_t>(crossing)] = out.signs[static_cast<std::size_t>(last)];
  out.signs.pop_back();
  if (crossing != last) {
    for (auto& comp : out.components) {
      for (auto& v : comp) {
        if (v.crossing == last) v.crossing = crossing;
      }
    }
  }
  return out;
}

namespace {

using Tokens = std::vector<int>;
constexpr int kComponentBreak = -1;

struct VisitIndex {
  std::size_t component;
  std::size_t position;
};

// Greedy re-encoding of one connected piece from a chosen base point.
class PieceEncoder {
 public:
  PieceEncoder(const LinkCode& code, const std::vector<std::array<VisitIndex, 2>>& where,
               const std::vector<std::size_t>& piece)
      : code_(code), where_(where), piece_(piece) {}

  Tokens encode(std::size_t start_component, std::size_t start_position, int direction) {
    labels_.assign(code_.signs.size(), -1);
    by_label_.clear();
    done_.assign(code_.components.size(), true);
    for (std::size_t ci : piece_) done_[ci] = false;

    Tokens tokens;
    std::size_t ci = start_component;
    std::size_t pos = start_position;
    std::size_t remaining = piece_.size();
    while (true) {
      const auto& comp = code_.components[ci];
      const auto len = static_cast<std::ptrdiff_t>(comp.size());
      for (std::ptrdiff_t k = 0; k < len; ++k) {
        std::ptrdiff_t idx = (static_cast<std::ptrdiff_t>(pos) + direction * k) % len;
        if (idx < 0) idx += len;
        const Visit& v = comp[static_cast<std::size_t>(idx)];
        int& label = labels_[static_cast<std::size_t>(v.crossing)];
        if (label < 0) {
          label = static_cast<int>(by_label_.size());
          by_label_.push_back(v.crossing);
        }
        const int sign = code_.signs[static_cast<std::size_t>(v.crossing)];
        tokens.push_back(label * 4 + (v.pass == Pass::Under ? 2 : 0) + (sign < 0 ? 1 : 0));
      }
      tokens.push_back(kComponentBreak);
      done_[ci] = true;
      if (--remaining == 0) break;

      bool advanced = false;
      for (int x : by_label_) {
        for (const auto& w : where_[static_cast<std::size_t>(x)]) {
          if (!done_[w.component]) {
            ci = w.component;
            pos = w.position;
            advanced = true;
            break;
          }
        }
        if (advanced) break;
      }
      if (!advanced) throw std::logic_error("piece is not connected");
    }
    return tokens;
  }

 private:
  const LinkCode& code_;
  const std::vector<std::array<VisitIndex, 2>>& where_;
  const std::vector<std::size_t>& piece_;
  std::vector<int> labels_;
  std::vector<int> by_label_;
  std::vector<bool> done_;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::string canonical_key(const LinkCode& code) {
  const std::size_t m = code.components.size();
  std::vector<std::array<VisitIndex, 2>> where(code.signs.size());
  std::vector<int> filled(code.signs.size(), 0);
  for (std::size_t ci = 0; ci < m; ++ci) {
    for (std::size_t p = 0; p < code.components[ci].size(); ++p) {
      const auto x = static_cast<std::size_t>(code.components[ci][p].crossing);
      where[x][static_cast<std::size_t>(filled[x]++)] = {ci, p};
    }
  }

  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& w : where) {
    const auto r0 = find_root(parent, w[0].component);
    const auto r1 = find_root(parent, w[1].component);
    if (r0 != r1) parent[r1] = r0;
  }
  std::map<std::size_t, std::vector<std::size_t>> pieces;
  int loops = 0;
  for (std::size_t ci = 0; ci < m; ++ci) {
    if (code.components[ci].empty()) {
      ++loops;
    } else {
      pieces[find_root(parent, ci)].push_back(ci);
    }
  }

  std::vector<Tokens> piece_keys;
  for (const auto& [root, piece] : pieces) {
    PieceEncoder encoder(code, where, piece);
    Tokens best;
    bool have = false;
    for (std::size_t ci : piece) {
      for (std::size_t p = 0; p < code.components[ci].size(); ++p) {
        for (int direction : {1, -1}) {
          Tokens t = encoder.encode(ci, p, direction);
          if (!have || t < best) {
            best = std::move(t);
            have = true;
          }
        }
      }
    }
    piece_keys.push_back(std::move(best));
  }
  std::sort(piece_keys.begin(), piece_keys.end());

  std::string key;
  for (const auto& tokens : piece_keys) {
    for (int t : tokens) {
      if (t == kComponentBreak) {
        key += '|';
      } else {
        key += std::to_string(t);
        key += '.';
      }
    }
    key += '/';
  }
  key += '#';
  key += std::to_string(loops);
  return key;
}

std::string canonical_key(const PDDiagram& d) { return canonical_key(to_link_code(d)); }

PDDiagram relabeled(const PDDiagram& d, const std::vector<std::pair<int, int>>& arc_map,
                    const std::vector<std::size_t>& order) {
  if (order.size() != d.crossing_count()) throw std::invalid_argument("crossing order size");
  std::unordered_map<int, int> map(arc_map.begin(), arc_map.end());
  std::vector<PDCrossing> out;
  out.reserve(order.size());
  for (std::size_t k : order) {
    PDCrossing x = d.crossings().at(k);
    for (int& a : x.arcs) {
      auto it = map.find(a);
      if (it != map.end()) a = it->second;
    }
    out.push_back(x);
  }
  return PDDiagram(std::move(out), d.free_loops());
}

std::string to_string(const PDDiagram& d) {
  std::ostringstream out;
  for (const auto& x : d.crossings()) {
    out << "X " << x.arcs[0] << ' ' << x.arcs[1] << ' ' << x.arcs[2] << ' ' << x.arcs[3]
        << ' ' << (x.sign > 0 ? "+1" : "-1") << '\n';
  }
  if (d.free_loops() > 0) out << "L " << d.free_loops() << '\n';
  return out.str();
}

PDDiagram parse_pd(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<PDCrossing> crossings;
  int loops = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    const std::string where = " on PD line " + std::to_string(line_no);
    if (tag == "X") {
      PDCrossing x;
      if (!(fields >> x.arcs[0] >> x.arcs[1] >> x.arcs[2] >> x.arcs[3] >> x.sign)) {
        throw ParseError("expected 'X a b c d s'" + where);
      }
      if (x.sign != 1 && x.sign != -1) throw ParseError("sign must be +1 or -1" + where);
      crossings.push_back(x);
    } else if (tag == "L") {
      int k = 0;
      if (!(fields >> k) || k < 0) throw ParseError("expected 'L k'" + where);
      loops += k;
    } else {
      throw ParseError("unknown record '" + tag + "'" + where);
    }
    std::string extra;
    if (fields >> extra) throw ParseError("trailing field '" + extra + "'" + where);
  }
  try {
    return PDDiagram(std::move(crossings), loops);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace knotqc
