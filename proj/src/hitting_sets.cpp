#include "waring/hitting_sets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace waring {

namespace {

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct LexLess {
  bool operator()(const Vector& a, const Vector& b) const { return lex_less(a, b); }
};

// The translate p + {a e_1 + b e_j : a, b in {0..d}, j >= 2}.
void add_grid_translate(const Vector& p, unsigned d, std::vector<Vector>& out) {
  const std::size_t n = p.size();
  for (unsigned a = 0; a <= d; ++a) {
    // b = 0 is shared by every j
    Vector base = p;
    base[0] += Rational(static_cast<long>(a));
    out.push_back(base);
    for (std::size_t j = 1; j < n; ++j) {
      for (unsigned b = 1; b <= d; ++b) {
        Vector q = base;
        q[j] += Rational(static_cast<long>(b));
        out.push_back(std::move(q));
      }
    }
  }
}

std::vector<Vector> translate_centers(std::size_t n, unsigned d) {
  if (d <= 2) return {Vector(n, Rational(1))};
  return moment_points(n, n * (n - 1) + 1).points;
}

}  // namespace

PointSet PointSet::from(std::size_t n, std::vector<Vector> pts) {
  for (const Vector& p : pts) {
    if (p.size() != n) throw std::invalid_argument("point of the wrong dimension");
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return PointSet{n, std::move(pts)};
}

PointSet moment_points(std::size_t n, std::size_t count) {
  if (n == 0 || count == 0) throw std::invalid_argument("moment points need n >= 1 and count >= 1");
  std::vector<Vector> pts;
  pts.reserve(count);
  for (std::size_t t = 1; t <= count; ++t) {
    Vector p(n);
    Rational v(1);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = v;
      v *= Rational(static_cast<long>(t));
    }
    pts.push_back(std::move(p));
  }
  return PointSet::from(n, std::move(pts));
}

std::size_t equivalence_hitting_set_raw_size(std::size_t n, unsigned d) {
  if (n == 1) return d + 1;
  const std::size_t centers = d <= 2 ? 1 : n * (n - 1) + 1;
  const std::size_t s = d + 1;
  return centers * ((n - 1) * s * s - (n - 2) * s);
}

PointSet equivalence_hitting_set(std::size_t n, unsigned d) {
  if (n == 0) throw std::invalid_argument("hitting set needs n >= 1");
  std::vector<Vector> pts;
  if (n == 1) {
    for (unsigned a = 0; a <= d; ++a) pts.push_back(Vector{Rational(static_cast<long>(a))});
    return PointSet::from(1, std::move(pts));
  }
  for (const Vector& p : translate_centers(n, d)) add_grid_translate(p, d, pts);
  return PointSet::from(n, std::move(pts));
}

std::size_t transversal_family_size(std::size_t n, std::size_t r) {
  if (r == 0 || r > n) throw std::invalid_argument("transversal family needs 1 <= r <= n");
  return r == n ? 1 : 1 + n * r * (r + 1) / 2;
}

TransversalFamily transversal_family(std::size_t n, std::size_t r) {
  const std::size_t count = transversal_family_size(n, r);
  TransversalFamily fam{n, r, {}};
  if (r == n) {
    fam.matrices.push_back(QMatrix::identity(n));
    return fam;
  }
  fam.matrices.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Rational alpha(static_cast<long>(k + 2));
    QMatrix a(n, r);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational base = alpha.pow(static_cast<unsigned>(i + 1));
      Rational v = base;
      for (std::size_t j = 0; j < r; ++j) {
        a(i, j) = v;
        v *= base;
      }
    }
    fam.matrices.push_back(std::move(a));
  }
  return fam;
}

std::size_t pit_evaluation_budget(std::size_t n, unsigned d) {
  std::size_t total = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    total += transversal_family_size(n, k) * equivalence_hitting_set_raw_size(k, d);
  }
  return total;
}

PitResult pit_sum_of_powers(const BlackBoxPoly& f, std::size_t n, unsigned d) {
  if (f.nvars() != n) throw std::invalid_argument("black box arity differs from n");
  PitResult res;
  std::set<Vector, LexLess> seen;
  for (std::size_t k = 1; k <= n; ++k) {
    const PointSet grid = equivalence_hitting_set(k, d);
    for (const QMatrix& a : transversal_family(n, k).matrices) {
      for (const Vector& y : grid.points) {
        Vector x = a.apply(y);
        if (!seen.insert(x).second) continue;
        ++res.evaluations;
        if (!f(x).is_zero()) {
          res.nonzero = true;
          res.witness = std::move(x);
          return res;
        }
      }
    }
  }
  return res;
}

PointSet pit_hitting_set(std::size_t n, unsigned d) {
  std::vector<Vector> pts;
  for (std::size_t k = 1; k <= n; ++k) {
    const PointSet grid = equivalence_hitting_set(k, d);
    for (const QMatrix& a : transversal_family(n, k).matrices) {
      for (const Vector& y : grid.points) pts.push_back(a.apply(y));
    }
  }
  return PointSet::from(n, std::move(pts));
}

}  // namespace waring
