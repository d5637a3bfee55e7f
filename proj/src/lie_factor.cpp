#include "waring/lie_factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "waring/errors.hpp"
#include "waring/io.hpp"
#include "waring/linalg.hpp"
#include "waring/parallel.hpp"
#include "waring/polydep.hpp"
#include "waring/slices.hpp"
#include "waring/univariate.hpp"

namespace waring {

namespace {

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

LieBasis full_matrix_space(std::size_t n) {
  LieBasis out{n, {}};
  for (std::size_t k = 0; k < n * n; ++k) {
    QMatrix e(n, n);
    e(k / n, k % n) = 1;
    out.basis.push_back(std::move(e));
  }
  return out;
}

// Whether sum c_ij x_j dP/dx_i vanishes identically.
bool in_lie_algebra(const SparsePoly& p, const QMatrix& c) {
  const std::size_t n = p.nvars();
  SparsePoly s(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SparsePoly di = p.derivative(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (!c(i, j).is_zero()) s += SparsePoly::variable(n, j) * di * c(i, j);
    }
  }
  return s.is_zero();
}

LieBasis from_kernel(std::size_t n, const std::vector<Vector>& kernel) {
  LieBasis out{n, {}};
  for (const Vector& v : kernel) out.basis.push_back(unvectorize(v, n));
  return out;
}

}  // namespace

std::optional<Rational> SimpleRationalFunction::operator()(std::span<const Rational> x) const {
  if (x.size() != n) throw DimensionMismatch("point of the wrong dimension");
  if (p.size() != q.size()) throw DimensionMismatch("numerator and denominator counts differ");
  Rational s;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Rational den = dot(q[i], x);
    if (den.is_zero()) return std::nullopt;
    s += dot(p[i], x) / den;
  }
  return s;
}

PointSet lambda_points(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("lambda points need m, n >= 1");
  const PointSet v = moment_points(n, m * (n - 1) + 1);
  std::vector<Vector> u = moment_points(n, m * m * (n - 1) + 1).points;
  u.emplace_back(n);
  std::vector<Vector> out;
  out.reserve(lambda_points_raw_size(m, n));
  for (const Vector& base : u) {
    for (const Vector& dir : v.points) {
      for (std::size_t l = 1; l <= 2 * m + 1; ++l) {
        Vector x = base;
        for (std::size_t i = 0; i < n; ++i) x[i] += Rational(static_cast<long>(l)) * dir[i];
        out.push_back(std::move(x));
      }
    }
  }
  return PointSet::from(n, std::move(out));
}

std::size_t lambda_points_raw_size(std::size_t m, std::size_t n) {
  return (m * (n - 1) + 1) * (m * m * (n - 1) + 2) * (2 * m + 1);
}

LieBasis lie_algebra_dense(const SparsePoly& p) {
  const std::size_t n = p.nvars();
  if (n == 0) return LieBasis{};
  // column i*n+j holds the coefficients of x_j dP/dx_i
  std::vector<SparsePoly> cols;
  std::map<Exponent, std::size_t, GradedLexGreater> index;
  for (std::size_t i = 0; i < n; ++i) {
    const SparsePoly di = p.derivative(i);
    for (std::size_t j = 0; j < n; ++j) {
      cols.push_back(SparsePoly::variable(n, j) * di);
      for (const auto& [e, c] : cols.back().terms()) index.try_emplace(e, 0);
    }
  }
  if (index.empty()) return full_matrix_space(n);
  std::size_t k = 0;
  for (auto& [e, pos] : index) pos = k++;
  QMatrix m(index.size(), n * n);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [e, v] : cols[c].terms()) m(index.at(e), c) = v;
  }
  return from_kernel(n, kernel_basis(m));
}

LieBasis lie_algebra_product_forms(const BlackBoxPoly& p, std::optional<std::size_t> stop_at_dimension) {
  const std::size_t n = p.nvars();
  const unsigned d = p.degree_bound();
  if (n == 0) return LieBasis{};
  if (d == 0) return full_matrix_space(n);
  const auto partials = partial_derivative_boxes(p);
  const PointSet points = lambda_points(d, n);
  const std::size_t width = n * n;
  const std::size_t target = stop_at_dimension.value_or(0);
  RowSpace rows(width);
  // rows are generated in parallel chunks but added in point order
  const std::size_t chunk = std::max<std::size_t>(8, 4 * thread_count());
  for (std::size_t start = 0; start < points.size(); start += chunk) {
    const std::size_t len = std::min(chunk, points.size() - start);
    auto batch = parallel_map(len, [&](std::size_t r) {
      const Vector& x = points.points[start + r];
      Vector row(width);
      for (std::size_t i = 0; i < n; ++i) {
        const Rational di = partials[i](x);
        if (di.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) row[i * n + j] = x[j] * di;
      }
      return row;
    });
    for (Vector& row : batch) {
      rows.add(std::move(row));
      if (width - rows.rank() <= target) return from_kernel(n, rows.kernel_basis());
    }
  }
  return from_kernel(n, rows.kernel_basis());
}

SparsePoly LinearFactorization::expand(std::size_t nvars) const {
  SparsePoly out = SparsePoly::constant(nvars, lambda);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].size() != nvars) throw DimensionMismatch("form of the wrong length");
    out = out * SparsePoly::linear_form(forms[i]).pow(exponents[i]);
  }
  return out;
}

std::string LinearFactorization::to_string() const {
  std::string s = lambda.to_string();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    s += "; (" + format_linear_form(forms[i]) + ") ^ " + std::to_string(exponents[i]);
  }
  return s;
}

std::string to_string(FactorFailure f) {
  switch (f) {
    case FactorFailure::NotProductOfIndependentForms: return "NotProductOfIndependentForms";
    case FactorFailure::RequiresFieldExtension: return "RequiresFieldExtension";
  }
  return "?";
}

std::string to_string(LieRejectReason r) {
  switch (r) {
    case LieRejectReason::ZeroHessian: return "ZeroHessian";
    case LieRejectReason::FactorizationFailed: return "FactorizationFailed";
    case LieRejectReason::NoCoefficients: return "NoCoefficients";
    case LieRejectReason::NoRationalRoot: return "NoRationalRoot";
  }
  return "?";
}

namespace {

// Scales each form to first nonzero coefficient 1, sorts, and checks the
// expansion against p.
std::optional<LinearFactorization> finalize(const SparsePoly& p, Rational lambda,
                                            std::vector<Vector> forms, std::vector<unsigned> exps) {
  std::vector<std::pair<Vector, unsigned>> items;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Vector& f = forms[i];
    auto lead = std::find_if(f.begin(), f.end(), [](const Rational& c) { return !c.is_zero(); });
    if (lead == f.end()) return std::nullopt;
    const Rational s = *lead;
    for (Rational& c : f) c /= s;
    lambda *= s.pow(exps[i]);
    items.emplace_back(std::move(f), exps[i]);
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(b.first.begin(), b.first.end(), a.first.begin(), a.first.end());
  });
  LinearFactorization out{lambda, {}, {}};
  for (auto& [f, e] : items) {
    out.forms.push_back(std::move(f));
    out.exponents.push_back(e);
  }
  if (out.expand(p.nvars()) != p) return std::nullopt;
  return out;
}

// y-coordinate form (length k) pulled back to x through the k x n matrix b.
Vector pull_back(const Vector& y, const QMatrix& b) {
  Vector x(b.cols());
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (y[r].is_zero()) continue;
    for (std::size_t c = 0; c < b.cols(); ++c) x[c] += y[r] * b(r, c);
  }
  return x;
}

// g(y1, y2) = c * y2^e * prod (y1 - r y2)^m over the rational roots r of g(t, 1).
std::variant<LinearFactorization, FactorFailure> binary_split(const SparsePoly& p, const SparsePoly& g,
                                                              const QMatrix& b) {
  unsigned e2 = ~0U;
  for (const auto& [e, c] : g.terms()) e2 = std::min(e2, e[1]);
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : g.terms()) {
    if (coeffs.size() <= e[0]) coeffs.resize(e[0] + 1);
    coeffs[e[0]] += c;
  }
  UniPoly u(coeffs);
  const Rational c = u.leading();
  std::vector<Vector> forms;
  std::vector<unsigned> exps;
  int remaining = u.degree();
  for (const Rational& r : rational_roots(u)) {
    const UniPoly lin({-r, Rational(1)});
    unsigned mult = 0;
    for (;;) {
      auto [q, rem] = u.divrem(lin);
      if (!rem.is_zero()) break;
      u = q;
      ++mult;
    }
    forms.push_back(pull_back({Rational(1), -r}, b));
    exps.push_back(mult);
    remaining -= static_cast<int>(mult);
  }
  if (remaining != 0) return FactorFailure::RequiresFieldExtension;
  if (e2 > 0) {
    forms.push_back(pull_back({Rational(0), Rational(1)}, b));
    exps.push_back(e2);
  }
  auto out = finalize(p, c, std::move(forms), std::move(exps));
  if (!out) throw std::logic_error("binary factorization failed to re-expand");
  return *out;
}

}  // namespace

FactorResult derand_lie_factor(const SparsePoly& p, FactorStats* stats) {
  if (!p.is_homogeneous()) throw NotHomogeneous("factorization needs a homogeneous polynomial");
  FactorStats local;
  FactorStats& st = stats ? *stats : local;
  st = FactorStats{};
  if (p.is_zero()) return FactorFailure::NotProductOfIndependentForms;
  const unsigned d = *p.degree();
  const std::size_t n = p.nvars();
  if (d == 0) return LinearFactorization{p.terms().begin()->second, {}, {}};

  const VariableMinimization mv = minimize_variables(p);
  const std::size_t k = mv.t;
  st.essential_variables = k;
  const QMatrix ainv = inverse(mv.a);
  QMatrix b(k, n);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < n; ++c) b(r, c) = ainv(r, c);
  }
  const SparsePoly g = mv.g.with_nvars(k);

  if (k == 1) {
    auto out = finalize(p, g.terms().begin()->second, {b.row(0)}, {d});
    if (!out) throw std::logic_error("single-form factorization failed to re-expand");
    return *out;
  }

  const LieBasis lie = lie_algebra_product_forms(BlackBoxPoly::from_poly(g), k - 1);
  st.lie_dimension = lie.dimension();
  // the early stop can leave spurious elements when g is not a product
  const bool exact = std::all_of(lie.basis.begin(), lie.basis.end(),
                                 [&g](const QMatrix& c) { return in_lie_algebra(g, c); });
  if (exact && lie.dimension() == k - 1) {
    const std::size_t bound = 1 + lie.dimension() * k * (k - 1) / 2;
    for (std::size_t t = 1; t <= bound; ++t) {
      ++st.trials;
      QMatrix c(k, k);
      Rational w(1);
      for (const QMatrix& cj : lie.basis) {
        c += cj * w;
        w *= Rational(static_cast<long>(t));
      }
      const UniPoly sf = squarefree_part(char_poly(c));
      if (sf.degree() != static_cast<int>(k)) continue;
      const std::vector<Rational> roots = rational_roots(sf);
      if (roots.size() != k) return FactorFailure::RequiresFieldExtension;
      std::vector<Vector> cols;
      for (const Rational& r : roots) {
        const std::vector<Vector> ker = kernel_basis(c - QMatrix::identity(k) * r);
        cols.push_back(ker.front());
      }
      const QMatrix v = QMatrix::from_columns(cols);
      const SparsePoly h = substitute(g, v);
      if (h.term_count() != 1) break;
      const auto& [e, coef] = *h.terms().begin();
      if (std::any_of(e.begin(), e.end(), [](unsigned a) { return a == 0; })) break;
      const QMatrix vinv = inverse(v);
      std::vector<Vector> forms;
      for (std::size_t i = 0; i < k; ++i) forms.push_back(pull_back(vinv.row(i), b));
      if (auto out = finalize(p, coef, std::move(forms), std::vector<unsigned>(e.begin(), e.end()))) {
        return *out;
      }
      break;
    }
  }
  if (k == 2) return binary_split(p, g, b);
  return FactorFailure::NotProductOfIndependentForms;
}

SparsePoly hessian_determinant(const SparsePoly& f) {
  const std::size_t n = f.nvars();
  if (n == 0) throw DimensionMismatch("polynomial without variables");
  std::vector<std::vector<SparsePoly>> h;
  if (f.is_homogeneous(3)) {
    h = hessian_as_slice_pencil(slices_of(f)).symbolic();
  } else {
    h.assign(n, std::vector<SparsePoly>(n, SparsePoly(n)));
    for (std::size_t i = 0; i < n; ++i) {
      const SparsePoly di = f.derivative(i);
      for (std::size_t j = i; j < n; ++j) h[i][j] = h[j][i] = di.derivative(j);
    }
  }
  return berkowitz_determinant(h, SparsePoly(n), SparsePoly::constant(n, Rational(1)));
}

LieEquivalence lie_equivalence_q(const SparsePoly& f, unsigned d) {
  if (d == 0 || d == 2) throw std::invalid_argument("degree " + std::to_string(d) + " is not supported");
  if (!f.is_homogeneous(d)) {
    throw NotHomogeneous("polynomial is not homogeneous of degree " + std::to_string(d));
  }
  const std::size_t n = f.nvars();
  if (n == 0) throw DimensionMismatch("polynomial without variables");
  LieEquivalence out;
  if (f.is_zero()) return out;

  auto accept = [&](std::vector<Vector> rows) {
    out.accept = true;
    out.a = QMatrix::from_rows(rows);
    out.forms = std::move(rows);
    SparsePoly pd(n);
    for (std::size_t i = 0; i < n; ++i) pd += SparsePoly::variable(n, i).pow(d);
    if (substitute(pd, out.a) != f) throw std::logic_error("equivalence witness failed to re-expand");
    return out;
  };

  if (d == 1) {
    // l_p = f - sum_{j != p} x_j and l_j = x_j otherwise
    Vector c(n);
    for (const auto& [e, v] : f.terms()) {
      c[static_cast<std::size_t>(std::find(e.begin(), e.end(), 1U) - e.begin())] = v;
    }
    const std::size_t p = static_cast<std::size_t>(
        std::find_if(c.begin(), c.end(), [](const Rational& v) { return !v.is_zero(); }) - c.begin());
    std::vector<Vector> rows;
    for (std::size_t j = 0; j < n; ++j) {
      Vector r(n);
      if (j == p) {
        r = c;
        for (std::size_t i = 0; i < n; ++i) {
          if (i != p) r[i] -= 1;
        }
      } else {
        r[j] = 1;
      }
      rows.push_back(std::move(r));
    }
    return accept(std::move(rows));
  }
  if (n == 1) {
    const auto root = f.terms().begin()->second.exact_root(d);
    if (!root) {
      out.reason = LieRejectReason::NoRationalRoot;
      return out;
    }
    return accept({Vector{*root}});
  }

  const SparsePoly h = hessian_determinant(f);
  if (h.is_zero()) return out;
  const FactorResult fr = derand_lie_factor(h);
  if (const auto* fail = std::get_if<FactorFailure>(&fr)) {
    out.reason = LieRejectReason::FactorizationFailed;
    out.factor_failure = *fail;
    return out;
  }
  const auto& fac = std::get<LinearFactorization>(fr);
  if (fac.forms.size() != n ||
      std::any_of(fac.exponents.begin(), fac.exponents.end(), [d](unsigned e) { return e != d - 2; })) {
    out.reason = LieRejectReason::FactorizationFailed;
    return out;
  }

  // f = sum a_i l_i^d by coefficient matching
  std::vector<SparsePoly> powers;
  std::map<Exponent, std::size_t, GradedLexGreater> index;
  for (const auto& [e, c] : f.terms()) index.try_emplace(e, 0);
  for (const Vector& l : fac.forms) {
    powers.push_back(SparsePoly::linear_form(l).pow(d));
    for (const auto& [e, c] : powers.back().terms()) index.try_emplace(e, 0);
  }
  std::size_t k = 0;
  for (auto& [e, pos] : index) pos = k++;
  QMatrix m(index.size(), n);
  Vector rhs(index.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [e, c] : powers[i].terms()) m(index.at(e), i) = c;
  }
  for (const auto& [e, c] : f.terms()) rhs[index.at(e)] = c;
  const auto a = solve(m, rhs);
  if (!a || std::any_of(a->begin(), a->end(), [](const Rational& v) { return v.is_zero(); })) {
    out.reason = LieRejectReason::NoCoefficients;
    return out;
  }
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const auto root = (*a)[i].exact_root(d);
    if (!root) {
      out.reason = LieRejectReason::NoRationalRoot;
      return out;
    }
    Vector r = fac.forms[i];
    for (Rational& v : r) v *= *root;
    rows.push_back(std::move(r));
  }
  return accept(std::move(rows));
}

}  // namespace waring
