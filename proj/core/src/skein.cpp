#include "knotqc/skein.hpp"

#include <mutex>
#include <stdexcept>

#include "knotqc/errors.hpp"

namespace knotqc {

void SkeinBudget::validate() const {
  if (max_crossings <= 0 || max_nodes == 0) {
    throw std::invalid_argument("skein budget bounds must be positive");
  }
}

std::optional<LaurentPoly2> SkeinMemo::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void SkeinMemo::insert(const std::string& key, const LaurentPoly2& value) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(key, value);
}

std::size_t SkeinMemo::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void SkeinMemo::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

LaurentPoly2 unlink_value(int components) {
  if (components < 1) throw std::invalid_argument("unlink needs at least one component");
  const LaurentPoly2 loop = az_pow(1, -1) - az_pow(-1, -1);
  return loop.pow(static_cast<unsigned>(components - 1));
}

SkeinEngine::SkeinEngine(SkeinBudget budget, std::shared_ptr<SkeinMemo> memo)
    : budget_(budget), memo_(std::move(memo)) {
  budget_.validate();
  if (!memo_) memo_ = std::make_shared<SkeinMemo>();
}

LaurentPoly2 SkeinEngine::homfly(const LinkCode& code) {
  code.validate();
  if (code.components.empty()) throw std::invalid_argument("HOMFLY-PT of the empty link");
  if (code.crossing_count() > budget_.max_crossings) {
    throw BudgetExceeded("diagram has " + std::to_string(code.crossing_count()) +
                         " crossings, budget allows " + std::to_string(budget_.max_crossings));
  }
  stats_ = {};
  return evaluate(code);
}

namespace {

// First crossing whose first visit along the traversal is an under-pass.
int first_violation(const LinkCode& code) {
  std::vector<bool> seen(code.signs.size(), false);
  for (const auto& comp : code.components) {
    for (const auto& v : comp) {
      const auto x = static_cast<std::size_t>(v.crossing);
      if (seen[x]) continue;
      if (v.pass == Pass::Under) return v.crossing;
      seen[x] = true;
    }
  }
  return -1;
}

}  // namespace

LaurentPoly2 SkeinEngine::evaluate(const LinkCode& code) {
  if (++stats_.nodes > budget_.max_nodes) {
    throw BudgetExceeded("skein recursion exceeded " + std::to_string(budget_.max_nodes) +
                         " nodes");
  }
  std::string key;
  if (budget_.memo_enabled) {
    key = canonical_key(code);
    if (auto hit = memo_->find(key)) {
      ++stats_.memo_hits;
      return *hit;
    }
  }

  LaurentPoly2 result;
  const int x = first_violation(code);
  if (x < 0) {
    ++stats_.leaves;
    result = unlink_value(code.component_count());
  } else {
    const LaurentPoly2 switched = evaluate(switch_crossing(code, x));
    const LaurentPoly2 smoothed = evaluate(smooth_crossing(code, x));
    if (code.signs[static_cast<std::size_t>(x)] > 0) {
      // P(K+) = a^-2 P(K-) + a^-1 z P(K0)
      result = switched.shifted({-2, 0}) + smoothed.shifted({-1, 1});
    } else {
      // P(K-) = a^2 P(K+) - a z P(K0)
      result = switched.shifted({2, 0}) - smoothed.shifted({1, 1});
    }
  }
  if (budget_.memo_enabled) memo_->insert(key, result);
  return result;
}

LaurentPoly2 homfly(const PDDiagram& d, const SkeinBudget& budget) {
  return SkeinEngine(budget).homfly(to_link_code(d));
}

LaurentPoly2 homfly(const GaussCode& code, const SkeinBudget& budget) {
  if (!realizable(code)) {
    throw std::invalid_argument("Gauss code is not realizable by a planar diagram");
  }
  if (code.empty()) return LaurentPoly2(1);
  return SkeinEngine(budget).homfly(to_link_code(code));
}

LaurentPoly2 homfly_braid(const BraidWord& b, const SkeinBudget& budget) {
  return homfly(closure_to_diagram(free_reduce(b)), budget);
}

LaurentPoly1 jones(const BraidWord& b, const SkeinBudget& budget) {
  return specialize_jones(homfly_braid(b, budget));
}

LaurentPoly1 jones(const PDDiagram& d, const SkeinBudget& budget) {
  return specialize_jones(homfly(d, budget));
}

std::complex<double> jones_at(const LaurentPoly1& jones_poly, std::complex<double> t) {
  if (t == std::complex<double>(0.0, 0.0)) throw std::domain_error("jones_at needs t != 0");
  return eval(jones_poly, std::sqrt(t));
}

std::complex<double> jones_at(const BraidWord& b, std::complex<double> t,
                              const SkeinBudget& budget) {
  if (t == std::complex<double>(0.0, 0.0)) throw std::domain_error("jones_at needs t != 0");
  return jones_at(jones(b, budget), t);
}

std::complex<double> jones_at(const PDDiagram& d, std::complex<double> t,
                              const SkeinBudget& budget) {
  if (t == std::complex<double>(0.0, 0.0)) throw std::domain_error("jones_at needs t != 0");
  return jones_at(jones(d, budget), t);
}

LaurentPoly1 homfly_coeff(const BraidWord& b, int k, const SkeinBudget& budget) {
  return coeff_z(homfly_braid(b, budget), k);
}

LaurentPoly1 homfly_coeff(const PDDiagram& d, int k, const SkeinBudget& budget) {
  return coeff_z(homfly(d, budget), k);
}

}  // namespace knotqc
