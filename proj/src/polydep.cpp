#include "waring/polydep.hpp"

#include <map>
#include <memory>
#include <string>

#include "waring/errors.hpp"
#include "waring/linalg.hpp"
#include "waring/slices.hpp"
#include "waring/uni_poly.hpp"

namespace waring {

QMatrix eval_matrix(const std::vector<BlackBoxPoly>& fs, const PointSet& points) {
  if (fs.empty() || points.points.empty()) throw DimensionMismatch("empty evaluation matrix");
  for (const auto& f : fs) {
    if (f.nvars() != points.n) throw DimensionMismatch("polynomial arity differs from point dimension");
  }
  QMatrix m(points.size(), fs.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) m(i, j) = fs[j](points.points[i]);
  }
  return m;
}

DependencySpace polydep_basis(const std::vector<BlackBoxPoly>& fs, const PointSet& points) {
  return DependencySpace{fs.size(), kernel_basis(eval_matrix(fs, points))};
}

std::vector<Rational> derivative_weights(unsigned d) {
  // L_s'(0) for the Lagrange basis on nodes 0..d
  std::vector<Rational> w(d + 1);
  for (unsigned s = 0; s <= d; ++s) {
    UniPoly l = UniPoly::constant(Rational(1));
    for (unsigned j = 0; j <= d; ++j) {
      if (j == s) continue;
      l = l * UniPoly({Rational(-static_cast<long>(j)), Rational(1)}) *
          Rational(1, static_cast<long>(s) - static_cast<long>(j));
    }
    w[s] = l.coeff(1);
  }
  return w;
}

std::vector<BlackBoxPoly> partial_derivative_boxes(const BlackBoxPoly& f) {
  const unsigned d = f.degree_bound();
  auto weights = std::make_shared<const std::vector<Rational>>(derivative_weights(d));
  std::vector<BlackBoxPoly> out;
  out.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    out.emplace_back(f.nvars(), d == 0 ? 0 : d - 1, [f, i, weights](std::span<const Rational> x) {
      Vector y(x.begin(), x.end());
      Rational acc;
      for (std::size_t s = 0; s < weights->size(); ++s) {
        if ((*weights)[s].is_zero()) continue;
        y[i] = x[i] + Rational(static_cast<long>(s));
        acc += (*weights)[s] * f(y);
      }
      return acc;
    });
  }
  return out;
}

namespace {

// Column j holds the coefficients of the j-th partial derivative.
QMatrix partials_coefficient_matrix(const SparsePoly& f) {
  const std::size_t n = f.nvars();
  std::vector<SparsePoly> partials;
  std::map<Exponent, std::size_t, GradedLexGreater> index;
  for (std::size_t i = 0; i < n; ++i) {
    partials.push_back(f.derivative(i));
    for (const auto& [e, c] : partials.back().terms()) index.try_emplace(e, 0);
  }
  std::size_t k = 0;
  for (auto& [e, pos] : index) pos = k++;
  QMatrix m(std::max<std::size_t>(index.size(), 1), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [e, c] : partials[i].terms()) m(index.at(e), i) = c;
  }
  return m;
}

}  // namespace

std::size_t essential_variable_count(const SparsePoly& f) {
  if (f.nvars() == 0) return 0;
  return rank(partials_coefficient_matrix(f));
}

std::size_t essential_variable_count(const BlackBoxPoly& f) {
  const std::size_t n = f.nvars();
  const unsigned d = f.degree_bound();
  if (n == 0 || d == 0) return 0;
  const auto partials = partial_derivative_boxes(f);
  const PointSet points = pit_hitting_set(n, d - 1);
  // rows f_1(a), ..., f_n(a); rank of the evaluation matrix
  RowSpace rows(n);
  for (const Vector& a : points.points) {
    Vector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = partials[j](a);
    rows.add(std::move(row));
    if (rows.rank() == n) break;
  }
  return rows.rank();
}

VariableMinimization minimize_variables(const SparsePoly& f) {
  const std::size_t n = f.nvars();
  if (n == 0) throw DimensionMismatch("polynomial without variables");
  if (!f.is_homogeneous()) throw NotHomogeneous("variable minimization needs a homogeneous polynomial");
  const std::vector<Vector> deps = kernel_basis(partials_coefficient_matrix(f));
  RowSpace span(n);
  for (const Vector& v : deps) span.add(v);
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < n && span.rank() < n; ++i) {
    Vector e(n);
    e[i] = 1;
    if (span.add(e)) columns.push_back(std::move(e));
  }
  const std::size_t t = columns.size();
  columns.insert(columns.end(), deps.begin(), deps.end());
  VariableMinimization out{QMatrix::from_columns(columns), SparsePoly(n), t};
  out.g = substitute(f, out.a);
  return out;
}

}  // namespace waring
