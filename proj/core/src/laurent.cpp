#include "knotqc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "knotqc/errors.hpp"

namespace knotqc {

namespace {

template <std::size_t N>
std::string render(const Laurent<N>& p,
                   const std::array<std::string_view, N>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    mpz_class mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t k = 0; k < N; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars[k];
      if (e[k] != 1) mono += '^' + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag.get_str() << '*' << mono;
    }
  }
  return out.str();
}

int parse_int(std::string_view s, std::string_view context) {
  if (s.empty()) throw ParseError("missing integer in '" + std::string(context) + "'");
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  if (pos == s.size()) throw ParseError("bad integer in '" + std::string(context) + "'");
  for (std::size_t k = pos; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw ParseError("bad integer '" + std::string(s) + "'");
    }
  }
  return std::stoi(std::string(s));
}

template <std::size_t N>
Laurent<N> parse(std::string_view text,
                 const std::array<std::string_view, N>& vars) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) throw ParseError("empty polynomial");

  // Split into signed terms; a sign directly after '^' belongs to an exponent.
  std::vector<std::pair<bool, std::string>> terms;
  std::string current;
  bool negative = false;
  for (std::size_t k = 0; k < compact.size(); ++k) {
    char ch = compact[k];
    const bool is_sign = ch == '+' || ch == '-';
    if (is_sign && (k == 0 || compact[k - 1] != '^')) {
      if (k != 0) {
        if (current.empty()) throw ParseError("dangling sign in '" + compact + "'");
        terms.emplace_back(negative, current);
        current.clear();
      }
      negative = ch == '-';
      continue;
    }
    current += ch;
  }
  if (current.empty()) throw ParseError("dangling sign in '" + compact + "'");
  terms.emplace_back(negative, current);

  Laurent<N> out;
  for (const auto& [neg, body] : terms) {
    mpz_class coeff = 1;
    typename Laurent<N>::Exponent exp{};
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t star = body.find('*', start);
      if (star == std::string::npos) star = body.size();
      std::string_view factor(body.data() + start, star - start);
      if (factor.empty()) throw ParseError("empty factor in '" + body + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        for (char ch : factor) {
          if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw ParseError("bad coefficient '" + std::string(factor) + "'");
          }
        }
        coeff *= mpz_class(std::string(factor));
      } else {
        std::size_t caret = factor.find('^');
        std::string_view name = factor.substr(0, caret);
        int power = caret == std::string_view::npos
                        ? 1
                        : parse_int(factor.substr(caret + 1), factor);
        bool matched = false;
        for (std::size_t v = 0; v < N; ++v) {
          if (name == vars[v]) {
            exp[v] += power;
            matched = true;
          }
        }
        if (!matched) throw ParseError("unknown variable '" + std::string(name) + "'");
      }
      start = star + 1;
    }
    out.add_term(exp, neg ? mpz_class(-coeff) : coeff);
  }
  return out;
}

}  // namespace

std::string to_string(const LaurentPoly1& p, std::string_view var) {
  return render<1>(p, {var});
}

std::string to_string(const LaurentPoly2& p, std::string_view var_a,
                      std::string_view var_z) {
  return render<2>(p, {var_a, var_z});
}

LaurentPoly1 parse_laurent1(std::string_view text, std::string_view var) {
  return parse<1>(text, {var});
}

LaurentPoly2 parse_laurent2(std::string_view text, std::string_view var_a,
                            std::string_view var_z) {
  return parse<2>(text, {var_a, var_z});
}

namespace {

// Exact division by (s - s^-1) = s^-1 (s^2 - 1).
LaurentPoly1 divide_by_s_minus_inverse(const LaurentPoly1& p) {
  if (p.is_zero()) return p;
  const int lo = p.terms().begin()->first[0];
  const int hi = p.terms().rbegin()->first[0];
  std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0] - lo)] = v;

  // Synthetic division of sum c[k] x^k by x^2 - 1, highest degree first.
  const std::size_t deg = c.size() - 1;
  if (deg < 2) throw std::domain_error("not divisible by s - s^-1");
  std::vector<mpz_class> q(deg - 1);
  for (std::size_t k = deg; k >= 2; --k) {
    q[k - 2] = c[k];
    c[k - 2] += c[k];
    c[k] = 0;
  }
  if (c[0] != 0 || c[1] != 0) throw std::domain_error("not divisible by s - s^-1");

  LaurentPoly1 out;
  // p = s^lo * (x^2 - 1) * Q(x)  and  s - s^-1 = s^-1 (x^2 - 1),
  // so p / (s - s^-1) = s^(lo + 1) * Q.
  for (std::size_t k = 0; k < q.size(); ++k) {
    out.add_term({lo + 1 + static_cast<int>(k)}, q[k]);
  }
  return out;
}

}  // namespace

LaurentPoly1 specialize_jones(const LaurentPoly2& p) {
  if (p.is_zero()) return {};
  int min_z = 0;
  int max_z = 0;
  for (const auto& [e, v] : p.terms()) {
    min_z = std::min(min_z, e[1]);
    max_z = std::max(max_z, e[1]);
  }
  const int clear = -min_z;
  const LaurentPoly1 z_image = s_pow(1) - s_pow(-1);
  std::vector<LaurentPoly1> z_powers(static_cast<std::size_t>(max_z + clear + 1));
  z_powers[0] = 1;
  for (std::size_t k = 1; k < z_powers.size(); ++k) {
    z_powers[k] = z_powers[k - 1] * z_image;
  }

  LaurentPoly1 numerator;
  for (const auto& [e, v] : p.terms()) {
    numerator += z_powers[static_cast<std::size_t>(e[1] + clear)].shifted(
        {-2 * e[0]}, v);
  }
  for (int k = 0; k < clear; ++k) numerator = divide_by_s_minus_inverse(numerator);
  return numerator;
}

LaurentPoly1 coeff_z(const LaurentPoly2& p, int k) {
  LaurentPoly1 out;
  for (const auto& [e, v] : p.terms()) {
    if (e[1] == k) out.add_term({e[0]}, v);
  }
  return out;
}

}  // namespace knotqc
