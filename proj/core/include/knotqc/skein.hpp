#pragma once

// HOMFLY-PT polynomial by skein recursion,
//
//     a P(K+) - a^-1 P(K-) = z P(K0),   P(unknot) = 1,
//
// with Jones specialization, complex evaluation and z-coefficient
// extraction on top.
//
// The recursion walks the link code in traversal order (components in
// order, each from its base point) and stops at the first crossing whose
// first visit is an under-pass. It branches into the switched diagram,
// which has one violation fewer under the same traversal, and the smoothed
// diagram, which has one crossing fewer and keeps the traversal prefix. A
// diagram without violations is descending, hence a split unlink. Results
// are cached under canonical_key, so isomorphic subdiagrams reached from
// different branches are evaluated once.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "knotqc/braid.hpp"
#include "knotqc/diagram.hpp"
#include "knotqc/gauss.hpp"
#include "knotqc/laurent.hpp"

namespace knotqc {

struct SkeinBudget {
  int max_crossings = 64;
  std::uint64_t max_nodes = 50'000'000;
  bool memo_enabled = true;

  /// Throws std::invalid_argument unless both bounds are positive.
  void validate() const;
};

struct SkeinStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;  // descending diagrams evaluated directly
  std::uint64_t memo_hits = 0;
};

/// Concurrent get-or-insert table. A racing duplicate insert keeps the first
/// value; both writers computed the same polynomial anyway.
class SkeinMemo {
 public:
  std::optional<LaurentPoly2> find(const std::string& key) const;
  void insert(const std::string& key, const LaurentPoly2& value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, LaurentPoly2> table_;
};

class SkeinEngine {
 public:
  explicit SkeinEngine(SkeinBudget budget = {},
                       std::shared_ptr<SkeinMemo> memo = std::make_shared<SkeinMemo>());

  /// Throws BudgetExceeded when the crossing or node budget is hit and
  /// std::invalid_argument for an empty link.
  LaurentPoly2 homfly(const LinkCode& code);

  const SkeinBudget& budget() const { return budget_; }
  /// Counters of the most recent homfly() call.
  const SkeinStats& last_stats() const { return stats_; }
  const std::shared_ptr<SkeinMemo>& memo() const { return memo_; }

 private:
  LaurentPoly2 evaluate(const LinkCode& code);

  SkeinBudget budget_;
  std::shared_ptr<SkeinMemo> memo_;
  SkeinStats stats_;
};

/// ((a - a^-1) z^-1)^(m-1), the value of the m-component unlink.
LaurentPoly2 unlink_value(int components);

LaurentPoly2 homfly(const PDDiagram& d, const SkeinBudget& budget = {});
/// Rejects non-realizable codes with std::invalid_argument.
LaurentPoly2 homfly(const GaussCode& code, const SkeinBudget& budget = {});
/// homfly(closure_to_diagram(free_reduce(b))).
LaurentPoly2 homfly_braid(const BraidWord& b, const SkeinBudget& budget = {});

LaurentPoly1 jones(const BraidWord& b, const SkeinBudget& budget = {});
LaurentPoly1 jones(const PDDiagram& d, const SkeinBudget& budget = {});

/// V evaluated at s = principal square root of t. Throws std::domain_error
/// when t = 0.
std::complex<double> jones_at(const BraidWord& b, std::complex<double> t,
                              const SkeinBudget& budget = {});
std::complex<double> jones_at(const PDDiagram& d, std::complex<double> t,
                              const SkeinBudget& budget = {});
std::complex<double> jones_at(const LaurentPoly1& jones_poly, std::complex<double> t);

LaurentPoly1 homfly_coeff(const BraidWord& b, int k, const SkeinBudget& budget = {});
LaurentPoly1 homfly_coeff(const PDDiagram& d, int k, const SkeinBudget& budget = {});

}  // namespace knotqc
