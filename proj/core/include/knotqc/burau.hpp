#pragma once

// Unreduced Burau representation
//
//     sigma_i  ->  I_{i-1} (+) [[1 - t, t], [1, 0]] (+) I_{n-i-1}
//
// symbolically over Z[t, t^-1] and numerically at complex t. Inverse
// letters use the closed-form block [[0, 1], [t^-1, 1 - t^-1]].

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

#include "knotqc/braid.hpp"
#include "knotqc/laurent.hpp"

namespace knotqc {

/// Square matrix of Laurent polynomials in t (LaurentPoly1 with the
/// exponent read as a power of t).
class PolyMatrix {
 public:
  explicit PolyMatrix(int n);  // zero matrix
  static PolyMatrix identity(int n);

  int size() const { return n_; }
  const LaurentPoly1& operator()(int r, int c) const { return entries_[index(r, c)]; }
  LaurentPoly1& operator()(int r, int c) { return entries_[index(r, c)]; }

  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }
  int n_;
  std::vector<LaurentPoly1> entries_;
};

using ComplexMatrix = Eigen::MatrixXcd;

/// Generator matrix of sigma_i (inverse = false) or sigma_i^-1 in GL_n.
PolyMatrix burau_generator(int i, int n, bool inverse = false);
PolyMatrix burau_symbolic(const BraidWord& b);

/// Throws std::domain_error when t = 0.
ComplexMatrix burau_numeric(const BraidWord& b, std::complex<double> t);
ComplexMatrix evaluate(const PolyMatrix& m, std::complex<double> t);

/// Row j has its 1 in column p(j) - 1, matching the t = 1 Burau image.
Eigen::MatrixXd permutation_matrix(const Permutation& p);

/// Far commutativity for |i - j| >= 2 and the Yang-Baxter relation for all
/// valid indices of B_n.
bool check_braid_relations_symbolic(int n);
bool check_braid_relations_numeric(int n, std::complex<double> t, double tol = 1e-10);

/// Row-major rendering, one "[e, e, ...]" row per line, entries in t.
std::string to_string(const PolyMatrix& m);

}  // namespace knotqc
