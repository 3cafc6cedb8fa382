#include <catch_amalgamated.hpp>

#include <random>

#include "knotqc/laurent.hpp"

using namespace knotqc;

namespace {

LaurentPoly2 random_poly2(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-4, 4);
  std::uniform_int_distribution<long> c(-5, 5);
  std::uniform_int_distribution<int> n(0, 5);
  LaurentPoly2 p;
  for (int k = n(rng); k > 0; --k) p += az_pow(e(rng), e(rng), c(rng));
  return p;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  const LaurentPoly1 x = s_pow(1) - s_pow(-1);
  CHECK(x + LaurentPoly1() == x);
  CHECK(x * x == s_pow(2) - LaurentPoly1(2) + s_pow(-2));
  const LaurentPoly2 u = (az_pow(1, 0) - az_pow(-1, 0)) * az_pow(0, -1);
  CHECK(u.size() == 2);
  CHECK(u == az_pow(1, -1) - az_pow(-1, -1));
}

TEST_CASE("zero coefficients are never stored") {
  const LaurentPoly2 p = az_pow(1, 1) + az_pow(2, 0);
  const LaurentPoly2 d = p - p;
  CHECK(d.is_zero());
  CHECK(d.terms().empty());
  LaurentPoly1 q = s_pow(3, 4);
  q.add_term({3}, -4);
  CHECK(q.is_zero());
  const auto prod = p * (p - az_pow(2, 0));
  for (const auto& [e, c] : prod.terms()) CHECK(c != 0);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly2(rng);
    const auto q = random_poly2(rng);
    const auto r = random_poly2(rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * LaurentPoly2(1) == p);
  }
}

TEST_CASE("evaluation") {
  CHECK(eval(LaurentPoly1(1), {0.3, 0.7}) == std::complex<double>(1.0));
  CHECK(std::abs(eval(s_pow(1) - s_pow(-1), 1.0)) == 0.0);
  CHECK_THROWS_AS(eval(s_pow(-1), 0.0), std::domain_error);
  CHECK_THROWS_AS(eval(az_pow(1, 1), 0.0, 1.0), std::domain_error);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly2(rng);
    const auto q = random_poly2(rng);
    const std::complex<double> a = std::polar(1.1, angle(rng));
    const std::complex<double> z = std::polar(0.9, angle(rng));
    const auto lhs = eval(p * q, a, z);
    const auto rhs = eval(p, a, z) * eval(q, a, z);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("Jones specialization") {
  CHECK(specialize_jones(LaurentPoly2(1)) == LaurentPoly1(1));
  CHECK(specialize_jones(az_pow(1, -1) - az_pow(-1, -1)) == -(s_pow(1) + s_pow(-1)));
  const LaurentPoly2 trefoil = az_pow(-4, 0, -1) + az_pow(-2, 0, 2) + az_pow(-2, 2);
  CHECK(specialize_jones(trefoil) == s_pow(8, -1) + s_pow(6) + s_pow(2));
  CHECK(eval(specialize_jones(trefoil), 1.0) == std::complex<double>(1.0));

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly2(rng);
    const auto q = random_poly2(rng);
    // Only z^-1 multiples of (a - a^-1) are guaranteed divisible; stay with
    // non-negative z powers for the generic identity.
    LaurentPoly2 pp;
    LaurentPoly2 qq;
    for (const auto& [e, c] : p.terms()) pp.add_term({e[0], std::abs(e[1])}, c);
    for (const auto& [e, c] : q.terms()) qq.add_term({e[0], std::abs(e[1])}, c);
    CHECK(specialize_jones(pp * qq) == specialize_jones(pp) * specialize_jones(qq));
  }
  CHECK_THROWS_AS(specialize_jones(az_pow(0, -1)), std::domain_error);
}

TEST_CASE("z coefficients") {
  CHECK(coeff_z(LaurentPoly2(1), 0) == LaurentPoly1(1));
  CHECK(coeff_z(az_pow(1, -1) - az_pow(-1, -1), -1) == s_pow(1) - s_pow(-1));
  const LaurentPoly2 trefoil = az_pow(-4, 0, -1) + az_pow(-2, 0, 2) + az_pow(-2, 2);
  CHECK(coeff_z(trefoil, 2) == s_pow(-2));
  CHECK(coeff_z(trefoil, 1).is_zero());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly2(rng);
    LaurentPoly2 rebuilt;
    for (int k = -4; k <= 4; ++k) {
      const auto slice = coeff_z(p, k);
      for (const auto& [e, c] : slice.terms()) rebuilt.add_term({e[0], k}, c);
    }
    CHECK(rebuilt == p);
  }
}

TEST_CASE("text rendering and parsing") {
  const LaurentPoly2 trefoil = az_pow(-4, 0, -1) + az_pow(-2, 0, 2) + az_pow(-2, 2);
  CHECK(to_string(trefoil) == "-a^-4 + 2*a^-2 + a^-2*z^2");
  CHECK(to_string(LaurentPoly2()) == "0");
  CHECK(to_string(LaurentPoly1(1)) == "1");
  CHECK(to_string(s_pow(1) - s_pow(-1)) == "-s^-1 + s");
  CHECK(parse_laurent2("a^-2*z^2 - a^-4 + 2*a^-2") == trefoil);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly2(rng);
    CHECK(parse_laurent2(to_string(p)) == p);
  }
}

TEST_CASE("big coefficients do not overflow") {
  const LaurentPoly1 x = s_pow(1) + LaurentPoly1(1);
  const LaurentPoly1 big = x.pow(80);
  // binom(80, 40) exceeds 64 bits.
  CHECK(big.coeff({40}) == mpz_class("107507208733336176461620"));
}
