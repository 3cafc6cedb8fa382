#pragma once

// Batch front end: subcommands invariant, realizable, estimate, table and
// bench. Every command prints key=value lines followed by one
// "json={...}" line carrying the same report.
//
// Exit codes: 0 ok, 1 parse/usage error, 2 budget or resource limit,
// 3 negative decision (code not realizable).

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knotqc/braid.hpp"
#include "knotqc/skein.hpp"

namespace knotqc::cli {

enum ExitCode : int { kOk = 0, kParseError = 1, kResourceError = 2, kNegative = 3 };

struct InvariantReport {
  std::string command;
  std::string input;
  std::string invariant;
  std::string value;
  double elapsed_ms = 0.0;
  std::map<std::string, std::string> meta;
  std::vector<std::map<std::string, std::string>> rows;

  /// key=value lines, then the json= line.
  std::string to_text() const;
  /// Reads the json= line of to_text() output. Throws ParseError when it is
  /// missing or malformed.
  static InvariantReport parse(std::string_view text);

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// "a+bi", "a-bi", "bi", "a", "i", or "unit:p/q" for e^{2 pi i p / q}.
/// Throws ParseError.
std::complex<double> parse_complex(std::string_view text);
/// Shortest round-tripping decimal parts; the imaginary part is omitted
/// when it is exactly zero.
std::string format_complex(std::complex<double> z);

/// Default node budget, overridden by KNOT_BUDGET when set.
SkeinBudget default_budget();

struct TableGroup {
  std::string jones;
  BraidWord representative;
  std::size_t size = 0;
};

inline constexpr int kTableMaxStrands = 4;
inline constexpr int kTableMaxLength = 10;

/// Freely reduced words of length <= max_length on n strands whose closure
/// is a knot, grouped by Jones polynomial in order of first appearance.
/// Throws BudgetExceeded beyond the table guard.
std::vector<TableGroup> knot_table(int strands, int max_length, const SkeinBudget& budget);

struct BenchRow {
  int crossings = 0;
  std::uint64_t plain_nodes = 0;  // 0 when the node budget ran out
  std::uint64_t plain_leaves = 0;
  std::uint64_t memo_nodes = 0;
  double plain_ms = 0.0;
  double memo_ms = 0.0;
  bool plain_exhausted = false;
};

/// Memoized vs plain recursion on the closures of sigma_1^c, c = 1..max.
std::vector<BenchRow> skein_bench(int max_crossings, const SkeinBudget& budget);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotqc::cli
