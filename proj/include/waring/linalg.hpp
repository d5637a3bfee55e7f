#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "waring/qmatrix.hpp"
#include "waring/uni_poly.hpp"

namespace waring {

// ---- elimination (fraction-free Bareiss on integer-scaled rows) ----

std::size_t rank(const QMatrix& m);
/// Basis of {x : M x = 0}; one vector per non-pivot column, with that
/// coordinate equal to 1 and the other free coordinates 0.
std::vector<Vector> kernel_basis(const QMatrix& m);
/// Throws SingularMatrix (or DimensionMismatch when not square).
QMatrix inverse(const QMatrix& m);
Rational determinant(const QMatrix& m);
/// Some x with M x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const QMatrix& m, const Vector& b);

/// Incrementally maintained reduced row echelon form. Useful when the rows of a
/// tall system are generated on the fly.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  /// Returns true if the row was independent of the rows added so far.
  bool add(Vector row);
  bool contains(Vector row) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  /// Null space of the accumulated rows.
  std::vector<Vector> kernel_basis() const;
  const std::vector<Vector>& rows() const { return rows_; }
  std::size_t max_bit_length() const;

 private:
  void reduce(Vector& row) const;

  std::size_t width_;
  std::vector<Vector> rows_;          // reduced, sorted by pivot
  std::vector<std::size_t> pivots_;
};

// ---- characteristic polynomial ----

/// Division-free Berkowitz recurrence over any commutative ring. Returns the
/// coefficients of det(t I - A), highest degree first (so c[0] = 1).
template <class T>
std::vector<T> berkowitz(const std::vector<std::vector<T>>& a, const T& zero, const T& one) {
  const std::size_t n = a.size();
  std::vector<T> p{one, zero - a[0][0]};
  for (std::size_t k = 1; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R C, -R A C, ..., -R A^{k-1} C
    std::vector<T> t;
    t.reserve(k + 2);
    t.push_back(one);
    t.push_back(zero - a[k][k]);
    std::vector<T> v(k, zero);
    for (std::size_t i = 0; i < k; ++i) v[i] = a[i][k];
    for (std::size_t j = 0; j < k; ++j) {
      T dot = zero;
      for (std::size_t i = 0; i < k; ++i) dot = dot + a[k][i] * v[i];
      t.push_back(zero - dot);
      if (j + 1 < k) {
        std::vector<T> w(k, zero);
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t c = 0; c < k; ++c) w[r] = w[r] + a[r][c] * v[c];
        }
        v = std::move(w);
      }
    }
    std::vector<T> q(k + 2, zero);
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, k); ++j) q[i] = q[i] + t[i - j] * p[j];
    }
    p = std::move(q);
  }
  return p;
}

/// det via Berkowitz: (-1)^n times the constant coefficient.
template <class T>
T berkowitz_determinant(const std::vector<std::vector<T>>& a, const T& zero, const T& one) {
  std::vector<T> c = berkowitz(a, zero, one);
  return a.size() % 2 == 0 ? c.back() : zero - c.back();
}

/// det(t I - M) as a monic UniPoly.
UniPoly char_poly(const QMatrix& m);

// ---- spectral predicates ----

bool is_diagonalizable(const QMatrix& m);
bool is_diagonalizable_real(const QMatrix& m);
bool commute(const QMatrix& a, const QMatrix& b);
/// p(M) by Horner's rule.
QMatrix eval_matrix_poly(const UniPoly& p, const QMatrix& m);

// ---- matrix subspaces ----

Vector vectorize(const QMatrix& m);
QMatrix unvectorize(const Vector& v, std::size_t n);

class MatrixSubspace {
 public:
  /// Throws std::invalid_argument unless the matrices are n x n and independent.
  MatrixSubspace(std::size_t n, std::vector<QMatrix> basis);
  /// Independent subset (first-come) of the given spanning set.
  static MatrixSubspace span_of(std::size_t n, const std::vector<QMatrix>& gens);

  std::size_t n() const { return n_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<QMatrix>& basis() const { return basis_; }
  bool contains(const QMatrix& m) const;
  /// Mutual inclusion.
  bool same_span(const MatrixSubspace& other) const;

 private:
  std::size_t n_;
  std::vector<QMatrix> basis_;
  RowSpace space_;
};

/// {X : XM = MX}
MatrixSubspace centralizer_basis(const QMatrix& m);
/// Whether the matrices A^{-1} B_i, B_i ranging over a basis of V, pairwise
/// commute. Throws SingularMatrix when A is singular.
bool is_commuting_quotient(const MatrixSubspace& v, const QMatrix& a);

}  // namespace waring
