#include "knotqc/burau.hpp"

#include <cstdlib>
#include <stdexcept>

namespace knotqc {

PolyMatrix::PolyMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n)) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n);
  for (int k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
  PolyMatrix out(x.n_);
  for (int r = 0; r < x.n_; ++r) {
    for (int k = 0; k < x.n_; ++k) {
      const auto& xk = x(r, k);
      if (xk.is_zero()) continue;
      for (int c = 0; c < x.n_; ++c) {
        const auto& yc = y(k, c);
        if (!yc.is_zero()) out(r, c) += xk * yc;
      }
    }
  }
  return out;
}

namespace {

const LaurentPoly1 kT = s_pow(1);
const LaurentPoly1 kTInv = s_pow(-1);

// Right multiplication by the generator block acting on columns (c, c+1).
template <typename Matrix, typename Scalar>
void right_multiply_block(Matrix& m, int rows, int c, const Scalar& g00, const Scalar& g01,
                          const Scalar& g10, const Scalar& g11) {
  for (int r = 0; r < rows; ++r) {
    const Scalar left = m(r, c);
    const Scalar right = m(r, c + 1);
    m(r, c) = g00 * left + g10 * right;
    m(r, c + 1) = g01 * left + g11 * right;
  }
}

}  // namespace

PolyMatrix burau_generator(int i, int n, bool inverse) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  PolyMatrix m = PolyMatrix::identity(n);
  const int c = i - 1;
  if (!inverse) {
    m(c, c) = LaurentPoly1(1) - kT;
    m(c, c + 1) = kT;
    m(c + 1, c) = 1;
    m(c + 1, c + 1) = LaurentPoly1();
  } else {
    m(c, c) = LaurentPoly1();
    m(c, c + 1) = 1;
    m(c + 1, c) = kTInv;
    m(c + 1, c + 1) = LaurentPoly1(1) - kTInv;
  }
  return m;
}

PolyMatrix burau_symbolic(const BraidWord& b) {
  PolyMatrix m = PolyMatrix::identity(b.strands());
  const LaurentPoly1 one(1);
  const LaurentPoly1 zero;
  for (int e : b.letters()) {
    const int c = std::abs(e) - 1;
    if (e > 0) {
      right_multiply_block(m, b.strands(), c, one - kT, kT, one, zero);
    } else {
      right_multiply_block(m, b.strands(), c, zero, one, kTInv, one - kTInv);
    }
  }
  return m;
}

ComplexMatrix burau_numeric(const BraidWord& b, std::complex<double> t) {
  if (t == std::complex<double>(0.0, 0.0)) throw std::domain_error("Burau matrix needs t != 0");
  ComplexMatrix m = ComplexMatrix::Identity(b.strands(), b.strands());
  const std::complex<double> one = 1.0;
  const std::complex<double> zero = 0.0;
  const std::complex<double> t_inv = one / t;
  for (int e : b.letters()) {
    const int c = std::abs(e) - 1;
    if (e > 0) {
      right_multiply_block(m, b.strands(), c, one - t, t, one, zero);
    } else {
      right_multiply_block(m, b.strands(), c, zero, one, t_inv, one - t_inv);
    }
  }
  return m;
}

ComplexMatrix evaluate(const PolyMatrix& m, std::complex<double> t) {
  ComplexMatrix out(m.size(), m.size());
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) out(r, c) = eval(m(r, c), t);
  }
  return out;
}

Eigen::MatrixXd permutation_matrix(const Permutation& p) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.size(), p.size());
  for (int j = 1; j <= p.size(); ++j) m(j - 1, p(j) - 1) = 1.0;
  return m;
}

namespace {

template <typename Rep, typename Equal>
bool relations_hold(int n, Rep rep, Equal equal) {
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      for (int ei : {i, -i}) {
        for (int ej : {j, -j}) {
          if (!equal(rep(BraidWord(n, {ei, ej})), rep(BraidWord(n, {ej, ei})))) return false;
        }
      }
    }
  }
  for (int i = 1; i + 1 < n; ++i) {
    if (!equal(rep(BraidWord(n, {i, i + 1, i})), rep(BraidWord(n, {i + 1, i, i + 1})))) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool check_braid_relations_symbolic(int n) {
  return relations_hold(
      n, [](const BraidWord& w) { return burau_symbolic(w); },
      [](const PolyMatrix& x, const PolyMatrix& y) { return x == y; });
}

bool check_braid_relations_numeric(int n, std::complex<double> t, double tol) {
  return relations_hold(
      n, [t](const BraidWord& w) { return burau_numeric(w, t); },
      [tol](const ComplexMatrix& x, const ComplexMatrix& y) {
        return (x - y).cwiseAbs().maxCoeff() <= tol;
      });
}

std::string to_string(const PolyMatrix& m) {
  std::string out;
  for (int r = 0; r < m.size(); ++r) {
    out += '[';
    for (int c = 0; c < m.size(); ++c) {
      if (c != 0) out += ", ";
      out += to_string(m(r, c), "t");
    }
    out += "]\n";
  }
  return out;
}

}  // namespace knotqc
