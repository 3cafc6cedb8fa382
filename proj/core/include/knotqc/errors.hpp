#pragma once

#include <stdexcept>
#include <string>

namespace knotqc {

/// Malformed textual input (braid words, Gauss codes, polynomials, PD text).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation hit its configured resource budget. Never signals a wrong
/// answer, only a refused one.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace knotqc
