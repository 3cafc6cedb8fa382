#include "knotqc/gauss.hpp"

#include <array>
#include <cctype>
#include <map>
#include <stdexcept>

#include "knotqc/errors.hpp"

namespace knotqc {

GaussCode::GaussCode(std::vector<GaussEntry> entries) : entries_(std::move(entries)) {
  struct Seen {
    int over = 0;
    int under = 0;
    int sign = 0;
  };
  std::map<int, Seen> seen;
  for (const auto& e : entries_) {
    if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("sign must be +-1");
    Seen& s = seen[e.label];
    ++(e.pass == Pass::Over ? s.over : s.under);
    if (s.sign != 0 && s.sign != e.sign) {
      throw std::invalid_argument("label " + std::to_string(e.label) +
                                  " carries conflicting signs");
    }
    s.sign = e.sign;
  }
  for (const auto& [label, s] : seen) {
    if (s.over != 1 || s.under != 1) {
      throw std::invalid_argument("label " + std::to_string(label) +
                                  " must be crossed exactly once over and once under");
    }
  }
}

namespace {

// Shared tokenizer for both grammars; with_sign selects the signed form.
template <typename Entry>
std::vector<Entry> tokenize(std::string_view text, bool with_sign) {
  std::vector<Entry> out;
  std::size_t k = 0;
  auto skip_space = [&] {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  };
  skip_space();
  while (k < text.size()) {
    Entry e;
    const char tag = static_cast<char>(std::toupper(static_cast<unsigned char>(text[k])));
    if (tag != 'O' && tag != 'U') {
      throw ParseError("expected O or U at offset " + std::to_string(k));
    }
    e.pass = tag == 'O' ? Pass::Over : Pass::Under;
    ++k;
    const std::size_t digits = k;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    if (k == digits) throw ParseError("missing crossing label at offset " + std::to_string(k));
    e.label = std::stoi(std::string(text.substr(digits, k - digits)));
    if constexpr (requires { e.sign; }) {
      if (with_sign) {
        if (k >= text.size() || (text[k] != '+' && text[k] != '-')) {
          throw ParseError("missing crossing sign at offset " + std::to_string(k));
        }
        e.sign = text[k] == '+' ? 1 : -1;
        ++k;
      }
    }
    out.push_back(e);
    skip_space();
  }
  return out;
}

}  // namespace

GaussCode parse_gauss(std::string_view text) {
  auto entries = tokenize<GaussEntry>(text, true);
  try {
    return GaussCode(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const GaussCode& code) {
  std::string out;
  for (const auto& e : code.entries()) {
    out += e.pass == Pass::Over ? 'O' : 'U';
    out += std::to_string(e.label);
    out += e.sign > 0 ? '+' : '-';
  }
  return out;
}

CarrierSurface carrier_surface(const GaussCode& code) {
  CarrierSurface s;
  if (code.empty()) return s;

  std::map<int, int> index;
  for (const auto& e : code.entries()) index.try_emplace(e.label, static_cast<int>(index.size()));
  const int c = static_cast<int>(index.size());
  const auto darts = static_cast<std::size_t>(4 * c);

  // Half-edge slots at crossing x: 4x + {0: in-under, 1: out-under,
  // 2: in-over, 3: out-over}.
  enum Slot { kInUnder = 0, kOutUnder = 1, kInOver = 2, kOutOver = 3 };
  std::vector<int> sign(static_cast<std::size_t>(c));
  for (const auto& e : code.entries()) sign[static_cast<std::size_t>(index[e.label])] = e.sign;

  std::vector<std::size_t> rotate(darts);
  for (int x = 0; x < c; ++x) {
    const std::array<int, 4> ccw = sign[static_cast<std::size_t>(x)] > 0
                                       ? std::array<int, 4>{kInUnder, kOutOver, kOutUnder, kInOver}
                                       : std::array<int, 4>{kInUnder, kInOver, kOutUnder, kOutOver};
    for (std::size_t k = 0; k < 4; ++k) {
      rotate[static_cast<std::size_t>(4 * x + ccw[k])] =
          static_cast<std::size_t>(4 * x + ccw[(k + 1) % 4]);
    }
  }

  std::vector<std::size_t> partner(darts);
  const auto& entries = code.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& from = entries[k];
    const auto& to = entries[(k + 1) % entries.size()];
    const auto tail = static_cast<std::size_t>(
        4 * index[from.label] + (from.pass == Pass::Under ? kOutUnder : kOutOver));
    const auto head = static_cast<std::size_t>(
        4 * index[to.label] + (to.pass == Pass::Under ? kInUnder : kInOver));
    partner[tail] = head;
    partner[head] = tail;
  }

  std::vector<bool> seen(darts, false);
  int faces = 0;
  for (std::size_t h = 0; h < darts; ++h) {
    if (seen[h]) continue;
    ++faces;
    for (std::size_t d = h; !seen[d]; d = rotate[partner[d]]) seen[d] = true;
  }
  s.vertices = c;
  s.edges = static_cast<int>(entries.size());
  s.faces = faces;
  return s;
}

bool realizable(const GaussCode& code) {
  return carrier_surface(code).euler_characteristic() == 2;
}

std::vector<UnsignedEntry> parse_unsigned_gauss(std::string_view text) {
  auto entries = tokenize<UnsignedEntry>(text, false);
  std::map<int, std::pair<int, int>> seen;  // label -> (overs, unders)
  for (const auto& e : entries) {
    auto& [over, under] = seen[e.label];
    ++(e.pass == Pass::Over ? over : under);
  }
  for (const auto& [label, count] : seen) {
    if (count.first != 1 || count.second != 1) {
      throw ParseError("crossing " + std::to_string(label) + " needs one O and one U visit");
    }
  }
  return entries;
}

bool realizable_unsigned(std::span<const UnsignedEntry> entries) {
  std::map<int, int> index;
  for (const auto& e : entries) index.try_emplace(e.label, static_cast<int>(index.size()));
  const int c = static_cast<int>(index.size());
  if (c > kUnsignedRealizabilityLimit) {
    throw BudgetExceeded("unsigned realizability is limited to " +
                         std::to_string(kUnsignedRealizabilityLimit) + " crossings");
  }
  for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
    std::vector<GaussEntry> signed_entries;
    signed_entries.reserve(entries.size());
    for (const auto& e : entries) {
      const int bit = index[e.label];
      signed_entries.push_back({e.pass, e.label, ((mask >> bit) & 1u) ? -1 : 1});
    }
    GaussCode code;
    try {
      code = GaussCode(std::move(signed_entries));
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what());
    }
    if (realizable(code)) return true;
  }
  return false;
}

GaussCode gauss_from_diagram(const PDDiagram& d) {
  const LinkCode link = to_link_code(d);
  if (link.components.size() != 1) {
    throw std::invalid_argument("Gauss codes describe one-component diagrams only");
  }
  std::vector<GaussEntry> entries;
  for (const auto& v : link.components.front()) {
    entries.push_back({v.pass, v.crossing + 1, link.signs[static_cast<std::size_t>(v.crossing)]});
  }
  return GaussCode(std::move(entries));
}

LinkCode to_link_code(const GaussCode& code) {
  LinkCode link;
  std::map<int, int> index;
  std::vector<Visit> comp;
  for (const auto& e : code.entries()) {
    auto [it, inserted] = index.try_emplace(e.label, static_cast<int>(index.size()));
    if (inserted) link.signs.push_back(e.sign);
    comp.push_back({it->second, e.pass});
  }
  link.components.push_back(std::move(comp));
  return link;
}

}  // namespace knotqc
