#include "waring/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "waring/errors.hpp"
#include "waring/univariate.hpp"

namespace waring {

namespace {

using IntRow = std::vector<Integer>;

// Multiplies a rational row by the lcm of its denominators.
IntRow scale_to_integers(const Rational* begin, std::size_t len, Integer* scale) {
  Integer l = 1;
  for (std::size_t j = 0; j < len; ++j) {
    const Integer d = begin[j].denominator();
    if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  IntRow out(len);
  for (std::size_t j = 0; j < len; ++j) {
    const mpq_class& q = begin[j].raw();
    if (sgn(q) == 0) continue;
    Integer f;
    mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    out[j] = q.get_num() * f;
  }
  if (scale != nullptr) *scale = l;
  return out;
}

struct Echelon {
  std::vector<IntRow> rows;           // first `pivots.size()` rows are the echelon rows
  std::vector<std::size_t> pivots;
  int sign = 1;                       // parity of row swaps
};

// Fraction-free elimination; pivots are searched only in columns < pivot_cols.
// Every intermediate entry is a minor of the input, so divisions are exact.
Echelon bareiss(std::vector<IntRow> a, std::size_t pivot_cols) {
  Echelon e;
  const std::size_t m = a.size();
  const std::size_t width = m == 0 ? 0 : a[0].size();
  Integer prev = 1;
  Integer tmp;
  std::size_t k = 0;
  for (std::size_t c = 0; c < pivot_cols && k < m; ++c) {
    std::size_t piv = k;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      e.sign = -e.sign;
    }
    const Integer& p = a[k][c];
    for (std::size_t i = k + 1; i < m; ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c + 1; j < width; ++j) {
        // a_ij = (p a_ij - f a_kj) / prev
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = p;
    e.pivots.push_back(c);
    ++k;
  }
  e.rows = std::move(a);
  return e;
}

std::vector<IntRow> integer_rows(const QMatrix& m, std::vector<Integer>* scales) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  if (scales != nullptr) scales->resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(scale_to_integers(&m(i, 0), m.cols(), scales ? &(*scales)[i] : nullptr));
  }
  return rows;
}

// Back substitution over the echelon rows for columns [0, ncols), given values
// for the free columns already placed in x and the right-hand side rhs.
void back_substitute(const Echelon& e, std::size_t ncols, const std::vector<Integer>& rhs,
                     std::vector<mpq_class>& x) {
  for (std::size_t r = e.pivots.size(); r-- > 0;) {
    const std::size_t p = e.pivots[r];
    mpq_class acc(rhs.empty() ? Integer(0) : rhs[r]);
    for (std::size_t j = p + 1; j < ncols; ++j) {
      if (e.rows[r][j] != 0 && sgn(x[j]) != 0) acc -= mpq_class(e.rows[r][j]) * x[j];
    }
    x[p] = acc / mpq_class(e.rows[r][p]);
  }
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  return bareiss(integer_rows(m, nullptr), m.cols()).pivots.size();
}

std::vector<Vector> kernel_basis(const QMatrix& m) {
  const Echelon e = bareiss(integer_rows(m, nullptr), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> x(m.cols(), 0);
    x[f] = 1;
    back_substitute(e, m.cols(), {}, x);
    Vector v;
    v.reserve(x.size());
    for (auto& q : x) v.emplace_back(q);
    out.push_back(std::move(v));
  }
  return out;
}

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  std::vector<Integer> scales;
  const Echelon e = bareiss(integer_rows(m, &scales), m.cols());
  if (e.pivots.size() < m.rows()) return Rational(0);
  Integer denom = 1;
  for (const Integer& s : scales) denom *= s;
  // the last Bareiss pivot is the determinant of the scaled matrix
  return Rational(e.rows[m.rows() - 1][m.cols() - 1] * e.sign, denom);
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  // augmented [A | I], each row scaled as a whole
  std::vector<IntRow> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(2 * n);
    for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
    row[n + i] = 1;
    aug[i] = scale_to_integers(row.data(), row.size(), nullptr);
  }
  const Echelon e = bareiss(std::move(aug), n);
  if (e.pivots.size() < n) throw SingularMatrix();
  QMatrix inv(n, n);
  std::vector<Integer> rhs(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) rhs[r] = e.rows[r][n + c];
    std::vector<mpq_class> x(n, 0);
    back_substitute(e, n, rhs, x);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = Rational(x[r]);
  }
  return inv;
}

std::optional<Vector> solve(const QMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  const std::size_t nc = m.cols();
  std::vector<IntRow> aug(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row(nc + 1);
    for (std::size_t j = 0; j < nc; ++j) row[j] = m(i, j);
    row[nc] = b[i];
    aug[i] = scale_to_integers(row.data(), row.size(), nullptr);
  }
  const Echelon e = bareiss(std::move(aug), nc);
  for (std::size_t r = e.pivots.size(); r < m.rows(); ++r) {
    if (e.rows[r][nc] != 0) return std::nullopt;
  }
  std::vector<Integer> rhs(e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) rhs[r] = e.rows[r][nc];
  std::vector<mpq_class> x(nc, 0);
  back_substitute(e, nc, rhs, x);
  Vector out;
  out.reserve(nc);
  for (auto& q : x) out.emplace_back(q);
  return out;
}

// ---- RowSpace ----

void RowSpace::reduce(Vector& row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = row[pivots_[r]];
    if (c.is_zero()) continue;
    const Vector& base = rows_[r];
    for (std::size_t j = pivots_[r]; j < width_; ++j) {
      if (!base[j].is_zero()) row[j] -= c * base[j];
    }
  }
}

bool RowSpace::add(Vector row) {
  if (row.size() != width_) throw DimensionMismatch("row width differs from the row space");
  reduce(row);
  std::size_t p = 0;
  while (p < width_ && row[p].is_zero()) ++p;
  if (p == width_) return false;
  const Rational inv = row[p].inverse();
  for (std::size_t j = p; j < width_; ++j) {
    if (!row[j].is_zero()) row[j] *= inv;
  }
  // keep existing rows reduced with respect to the new pivot
  for (Vector& other : rows_) {
    const Rational c = other[p];
    if (c.is_zero()) continue;
    for (std::size_t j = p; j < width_; ++j) {
      if (!row[j].is_zero()) other[j] -= c * row[j];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

bool RowSpace::contains(Vector row) const {
  if (row.size() != width_) throw DimensionMismatch("row width differs from the row space");
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](const Rational& x) { return x.is_zero(); });
}

std::vector<Vector> RowSpace::kernel_basis() const {
  std::vector<bool> is_pivot(width_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < width_; ++f) {
    if (is_pivot[f]) continue;
    Vector v(width_);
    v[f] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t RowSpace::max_bit_length() const {
  std::size_t m = 0;
  for (const Vector& r : rows_) m = std::max(m, waring::max_bit_length(r));
  return m;
}

// ---- characteristic polynomial and spectral predicates ----

UniPoly char_poly(const QMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  std::vector<std::vector<Rational>> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a[i] = m.row(i);
  std::vector<Rational> c = berkowitz(a, Rational(0), Rational(1));
  std::reverse(c.begin(), c.end());
  return UniPoly(std::move(c));
}

QMatrix eval_matrix_poly(const UniPoly& p, const QMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix acc(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    const Rational c = p.coeff(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
  }
  return acc;
}

bool is_diagonalizable(const QMatrix& m) {
  const UniPoly pm = squarefree_part(char_poly(m));
  return eval_matrix_poly(pm, m).is_zero();
}

bool is_diagonalizable_real(const QMatrix& m) {
  const UniPoly pm = squarefree_part(char_poly(m));
  if (!eval_matrix_poly(pm, m).is_zero()) return false;
  return count_real_roots(pm) == static_cast<std::size_t>(pm.degree());
}

bool commute(const QMatrix& a, const QMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || !b.is_square()) {
    throw DimensionMismatch("commute needs square matrices of equal size");
  }
  return a * b == b * a;
}

// ---- matrix subspaces ----

Vector vectorize(const QMatrix& m) { return m.entries(); }

QMatrix unvectorize(const Vector& v, std::size_t n) {
  if (v.size() != n * n) throw DimensionMismatch("vector length is not n^2");
  return QMatrix(n, n, v);
}

MatrixSubspace::MatrixSubspace(std::size_t n, std::vector<QMatrix> basis)
    : n_(n), basis_(std::move(basis)), space_(n * n) {
  for (const QMatrix& b : basis_) {
    if (b.rows() != n || b.cols() != n) throw DimensionMismatch("basis matrix has the wrong size");
    if (!space_.add(vectorize(b))) throw std::invalid_argument("basis matrices are linearly dependent");
  }
}

MatrixSubspace MatrixSubspace::span_of(std::size_t n, const std::vector<QMatrix>& gens) {
  RowSpace probe(n * n);
  std::vector<QMatrix> basis;
  for (const QMatrix& g : gens) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator has the wrong size");
    if (probe.add(vectorize(g))) basis.push_back(g);
  }
  return MatrixSubspace(n, std::move(basis));
}

bool MatrixSubspace::contains(const QMatrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) return false;
  return space_.contains(vectorize(m));
}

bool MatrixSubspace::same_span(const MatrixSubspace& other) const {
  if (other.n_ != n_ || other.dimension() != dimension()) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const QMatrix& b) { return contains(b); });
}

MatrixSubspace centralizer_basis(const QMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("centralizer of a non-square matrix");
  const std::size_t n = m.rows();
  // row (i,j) of L encodes (XM - MX)_{ij} as a linear form in vec(X)
  QMatrix l(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        l(row, i * n + k) += m(k, j);
        l(row, k * n + j) -= m(i, k);
      }
    }
  }
  std::vector<QMatrix> basis;
  for (const Vector& v : kernel_basis(l)) basis.push_back(unvectorize(v, n));
  return MatrixSubspace(n, std::move(basis));
}

bool is_commuting_quotient(const MatrixSubspace& v, const QMatrix& a) {
  if (a.rows() != v.n() || a.cols() != v.n()) throw DimensionMismatch("matrix size differs from subspace");
  const QMatrix inv = inverse(a);
  std::vector<QMatrix> q;
  q.reserve(v.dimension());
  for (const QMatrix& b : v.basis()) q.push_back(inv * b);
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (!commute(q[i], q[j])) return false;
    }
  }
  return true;
}

}  // namespace waring
