#pragma once

// Exact Laurent polynomials with arbitrary-precision integer coefficients.
//
// Laurent<N> is a sparse map from an N-tuple of integer exponents to a
// nonzero mpz coefficient. Two instantiations are used throughout:
//
//   LaurentPoly1  one variable. For Jones polynomials the variable is s with
//                 s^2 = t, so half-integer powers of t stay integral. Burau
//                 matrix entries reuse the type with the variable read as t.
//   LaurentPoly2  two variables (a, z), the HOMFLY-PT value space.
//
// Values are immutable in spirit: the arithmetic operators return new
// polynomials and never leave a zero coefficient in the map.

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace knotqc {

template <std::size_t N>
class Laurent {
 public:
  using Exponent = std::array<int, N>;
  using Coeff = mpz_class;
  using TermMap = std::map<Exponent, Coeff>;

  Laurent() = default;
  Laurent(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Exponent{}, Coeff(constant));
  }

  static Laurent monomial(const Exponent& e, const Coeff& c = 1) {
    Laurent p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Adds c * x^e in place, pruning a resulting zero.
  void add_term(const Exponent& e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multiplication by the monomial c * x^shift.
  Laurent shifted(const Exponent& shift, const Coeff& c = 1) const {
    Laurent out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) {
      out.terms_.emplace_hint(out.terms_.end(), add(e, shift), v * c);
    }
    return out;
  }

  Laurent operator-() const {
    Laurent out = *this;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
  }

  Laurent& operator+=(const Laurent& q) {
    for (const auto& [e, v] : q.terms_) add_term(e, v);
    return *this;
  }
  Laurent& operator-=(const Laurent& q) {
    for (const auto& [e, v] : q.terms_) add_term(e, -v);
    return *this;
  }

  friend Laurent operator+(Laurent p, const Laurent& q) { return p += q; }
  friend Laurent operator-(Laurent p, const Laurent& q) { return p -= q; }

  friend Laurent operator*(const Laurent& p, const Laurent& q) {
    Laurent out;
    for (const auto& [ep, vp] : p.terms_) {
      for (const auto& [eq, vq] : q.terms_) {
        out.add_term(add(ep, eq), vp * vq);
      }
    }
    return out;
  }

  friend bool operator==(const Laurent& p, const Laurent& q) {
    return p.terms_ == q.terms_;
  }

  Laurent pow(unsigned k) const {
    Laurent result(1);
    Laurent base = *this;
    while (k != 0) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k != 0) base = base * base;
    }
    return result;
  }

  /// Complex evaluation. Every variable value must be nonzero because
  /// negative exponents are allowed.
  std::complex<double> eval(
      const std::array<std::complex<double>, N>& point) const {
    for (const auto& x : point) {
      if (x == std::complex<double>(0.0, 0.0)) {
        throw std::domain_error("Laurent polynomial evaluated at zero");
      }
    }
    std::complex<double> sum = 0.0;
    for (const auto& [e, v] : terms_) {
      std::complex<double> term = v.get_d();
      for (std::size_t k = 0; k < N; ++k) term *= std::pow(point[k], e[k]);
      sum += term;
    }
    return sum;
  }

 private:
  static Exponent add(const Exponent& x, const Exponent& y) {
    Exponent r;
    for (std::size_t k = 0; k < N; ++k) r[k] = x[k] + y[k];
    return r;
  }

  TermMap terms_;
};

using LaurentPoly1 = Laurent<1>;
using LaurentPoly2 = Laurent<2>;

inline std::complex<double> eval(const LaurentPoly1& p, std::complex<double> x) {
  return p.eval({x});
}
inline std::complex<double> eval(const LaurentPoly2& p, std::complex<double> a,
                                 std::complex<double> z) {
  return p.eval({a, z});
}

/// Renders terms in ascending exponent order, e.g. "-a^-4 + 2*a^-2 + a^-2*z^2".
std::string to_string(const LaurentPoly1& p, std::string_view var = "s");
std::string to_string(const LaurentPoly2& p, std::string_view var_a = "a",
                      std::string_view var_z = "z");

/// Inverse of to_string. Accepts either sign spacing and any term order.
LaurentPoly1 parse_laurent1(std::string_view text, std::string_view var = "s");
LaurentPoly2 parse_laurent2(std::string_view text, std::string_view var_a = "a",
                            std::string_view var_z = "z");

/// Jones specialization a -> s^-2, z -> s - s^-1 (s^2 = t). Negative powers
/// of z are cleared by exact division; throws std::domain_error when the
/// input is not divisible, which never happens for a HOMFLY-PT value.
LaurentPoly1 specialize_jones(const LaurentPoly2& p);

/// The Laurent polynomial in a multiplying z^k.
LaurentPoly1 coeff_z(const LaurentPoly2& p, int k);

/// Convenience monomials.
inline LaurentPoly1 s_pow(int e, long c = 1) {
  return LaurentPoly1::monomial({e}, c);
}
inline LaurentPoly2 az_pow(int ea, int ez, long c = 1) {
  return LaurentPoly2::monomial({ea, ez}, c);
}

}  // namespace knotqc
