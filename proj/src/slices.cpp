#include "waring/slices.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "waring/errors.hpp"

namespace waring {

bool CubicSlices::is_valid() const {
  if (slices.size() != n) return false;
  for (const QMatrix& s : slices) {
    if (s.rows() != n || s.cols() != n || !s.is_symmetric()) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (slices[i](j, k) != slices[j](i, k) || slices[i](j, k) != slices[k](i, j)) return false;
      }
    }
  }
  return true;
}

std::size_t CubicSlices::max_bit_length() const {
  std::size_t m = 0;
  for (const QMatrix& s : slices) m = std::max(m, s.max_bit_length());
  return m;
}

CubicSlices slices_of(const SparsePoly& f) {
  if (!f.is_zero() && !f.is_homogeneous(3)) throw NotCubic();
  const std::size_t n = f.nvars();
  CubicSlices t{n, std::vector<QMatrix>(n, QMatrix(n, n))};
  for (const auto& [e, c] : f.terms()) {
    std::array<std::size_t, 3> idx{};
    std::size_t pos = 0;
    for (std::size_t v = 0; v < n; ++v) {
      for (unsigned r = 0; r < e[v]; ++r) idx[pos++] = v;
    }
    // a monomial x_i x_j x_k appears once per distinct ordering of (i, j, k)
    long orderings = 6;
    if (idx[0] == idx[2]) {
      orderings = 1;
    } else if (idx[0] == idx[1] || idx[1] == idx[2]) {
      orderings = 3;
    }
    const Rational v = c / Rational(orderings);
    std::sort(idx.begin(), idx.end());
    do {
      t.slices[idx[0]](idx[1], idx[2]) = v;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return t;
}

SparsePoly form_from_slices(const CubicSlices& t) {
  if (!t.is_valid()) throw std::invalid_argument("slices are not a symmetric tensor");
  SparsePoly f(t.n);
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) {
      for (std::size_t k = 0; k < t.n; ++k) {
        const Rational& c = t.slices[i](j, k);
        if (c.is_zero()) continue;
        Exponent e(t.n, 0);
        ++e[i];
        ++e[j];
        ++e[k];
        f.add_term(e, c);
      }
    }
  }
  return f;
}

SparsePoly substitute(const SparsePoly& f, const QMatrix& a) {
  if (a.rows() != f.nvars()) {
    throw DimensionMismatch("substitution matrix has " + std::to_string(a.rows()) + " rows for " +
                            std::to_string(f.nvars()) + " variables");
  }
  const std::size_t k = a.cols();
  // powers of the image of each variable, built on demand
  std::vector<std::vector<SparsePoly>> powers(f.nvars());
  auto power = [&](std::size_t i, unsigned p) -> const SparsePoly& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(SparsePoly::constant(k, Rational(1)));
      cache.push_back(SparsePoly::linear_form(a.row(i)));
    }
    while (cache.size() <= p) cache.push_back(cache.back() * cache[1]);
    return cache[p];
  };
  SparsePoly out(k);
  for (const auto& [e, c] : f.terms()) {
    SparsePoly term = SparsePoly::constant(k, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

CubicSlices transformed_slices(const CubicSlices& s, const QMatrix& a) {
  if (!a.is_square() || a.rows() != s.n) {
    throw DimensionMismatch("transformation must be " + std::to_string(s.n) + "x" + std::to_string(s.n));
  }
  const QMatrix at = a.transpose();
  CubicSlices out{s.n, {}};
  out.slices.reserve(s.n);
  for (std::size_t k = 0; k < s.n; ++k) {
    QMatrix d(s.n, s.n);
    for (std::size_t i = 0; i < s.n; ++i) {
      if (!a(i, k).is_zero()) d += s.slices[i] * a(i, k);
    }
    out.slices.push_back(at * d * a);
  }
  return out;
}

QMatrix HessianPencil::at(const Vector& x) const {
  if (x.size() != s_.n) throw DimensionMismatch("pencil point has the wrong dimension");
  QMatrix m(s_.n, s_.n);
  for (std::size_t k = 0; k < s_.n; ++k) {
    if (!x[k].is_zero()) m += s_.slices[k] * x[k];
  }
  return m * Rational(6);
}

std::vector<std::vector<SparsePoly>> HessianPencil::symbolic() const {
  const std::size_t n = s_.n;
  std::vector<std::vector<SparsePoly>> h(n, std::vector<SparsePoly>(n, SparsePoly(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector coeffs(n);
      for (std::size_t k = 0; k < n; ++k) coeffs[k] = s_.slices[k](i, j) * Rational(6);
      h[i][j] = SparsePoly::linear_form(coeffs);
    }
  }
  return h;
}

}  // namespace waring
