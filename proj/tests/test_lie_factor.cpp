#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"
#include "waring/errors.hpp"
#include "waring/io.hpp"
#include "waring/lie_factor.hpp"
#include "waring/linalg.hpp"
#include "waring/slices.hpp"

using namespace waring;
using testing::Rng;

namespace {

SparsePoly product(const std::vector<Vector>& forms, std::size_t n) {
  SparsePoly p = SparsePoly::constant(n, Rational(1));
  for (const Vector& l : forms) p = p * SparsePoly::linear_form(l);
  return p;
}

bool same_span(const LieBasis& a, const LieBasis& b) {
  if (a.dimension() != b.dimension()) return false;
  RowSpace ra(a.n * a.n);
  for (const auto& m : a.basis) ra.add(vectorize(m));
  return std::all_of(b.basis.begin(), b.basis.end(), [&](const QMatrix& m) { return ra.contains(vectorize(m)); });
}

// sum c_ij x_j dP/dx_i expanded
SparsePoly lie_action(const SparsePoly& p, const QMatrix& c) {
  const std::size_t n = p.nvars();
  SparsePoly s(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!c(i, j).is_zero()) s += SparsePoly::variable(n, j) * p.derivative(i) * c(i, j);
    }
  }
  return s;
}

Vector normalized(Vector v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const Rational& c) { return !c.is_zero(); });
  const Rational s = *lead;
  for (Rational& c : v) c /= s;
  return v;
}

Vector rand_nonzero(Rng& rng, std::size_t n, long lo, long hi) {
  for (;;) {
    Vector v = testing::rand_vector(rng, n, lo, hi);
    if (std::any_of(v.begin(), v.end(), [](const Rational& c) { return !c.is_zero(); })) return v;
  }
}

// Identically-zero oracle for sum <p_i,x>/<q_i,x>: merge proportional
// denominators; the function vanishes iff every merged numerator is a multiple
// a_c q_c of its denominator and the a_c sum to zero.
bool simple_rational_is_zero(const SimpleRationalFunction& f) {
  std::vector<Vector> qs;
  std::vector<Vector> ps;
  for (std::size_t i = 0; i < f.q.size(); ++i) {
    const Vector qn = normalized(f.q[i]);
    const Rational mu = f.q[i][static_cast<std::size_t>(
        std::find_if(f.q[i].begin(), f.q[i].end(), [](const Rational& c) { return !c.is_zero(); }) -
        f.q[i].begin())];
    Vector p = f.p[i];
    for (Rational& c : p) c /= mu;
    auto it = std::find(qs.begin(), qs.end(), qn);
    if (it == qs.end()) {
      qs.push_back(qn);
      ps.push_back(p);
    } else {
      Vector& acc = ps[static_cast<std::size_t>(it - qs.begin())];
      for (std::size_t k = 0; k < p.size(); ++k) acc[k] += p[k];
    }
  }
  Rational total;
  for (std::size_t c = 0; c < qs.size(); ++c) {
    const std::size_t lead = static_cast<std::size_t>(
        std::find_if(qs[c].begin(), qs[c].end(), [](const Rational& v) { return !v.is_zero(); }) - qs[c].begin());
    const Rational a = ps[c][lead];
    for (std::size_t k = 0; k < qs[c].size(); ++k) {
      if (ps[c][k] != a * qs[c][k]) return false;
    }
    total += a;
  }
  return total.is_zero();
}

SimpleRationalFunction rand_simple_rational(Rng& rng, std::size_t n, std::size_t m, bool make_zero) {
  SimpleRationalFunction f{n, {}, {}};
  Rational sum;
  for (std::size_t i = 0; i < m; ++i) {
    // reuse an earlier denominator up to scaling now and then
    Vector q = (i > 0 && testing::rand_int(rng, 0, 3) == 0)
                   ? f.q[static_cast<std::size_t>(testing::rand_int(rng, 0, static_cast<long>(i) - 1))]
                   : rand_nonzero(rng, n, -2, 2);
    if (testing::rand_int(rng, 0, 1) == 0) {
      for (Rational& c : q) c *= Rational(-2);
    }
    Rational a = i + 1 < m ? testing::rand_rational(rng, -3, 3) : -sum;
    sum += a;
    Vector p = q;
    for (Rational& c : p) c *= a;
    f.p.push_back(std::move(p));
    f.q.push_back(std::move(q));
  }
  if (!make_zero) {
    const std::size_t j = static_cast<std::size_t>(testing::rand_int(rng, 0, static_cast<long>(m) - 1));
    if (testing::rand_int(rng, 0, 1) == 0) {
      // shift the constant: sum of a_i becomes nonzero
      for (std::size_t k = 0; k < n; ++k) f.p[j][k] += f.q[j][k];
    } else {
      f.p[j][static_cast<std::size_t>(testing::rand_int(rng, 0, static_cast<long>(n) - 1))] += Rational(1);
    }
  }
  return f;
}

}  // namespace

TEST_CASE("lambda points") {
  CHECK(lambda_points_raw_size(2, 3) == 5 * 10 * 5);
  // n = 1: {1 + l} and {l} for l = 1..2m+1 collapse to 1..2m+2
  for (std::size_t m = 1; m <= 4; ++m) {
    const PointSet s = lambda_points(m, 1);
    REQUIRE(s.size() == 2 * m + 2);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.points[i] == Vector{Rational(static_cast<long>(i + 1))});
  }
  // independent enumeration from the definition
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 2; n <= 4; ++n) {
      auto moment = [n](std::size_t k) {
        std::vector<Vector> out;
        for (long t = 1; t <= static_cast<long>(k * (n - 1) + 1); ++t) {
          Vector p;
          for (std::size_t i = 0; i < n; ++i) p.push_back(Rational(t).pow(static_cast<unsigned>(i)));
          out.push_back(p);
        }
        return out;
      };
      std::set<std::vector<std::string>> expected;
      auto us = moment(m * m);
      us.emplace_back(n);
      for (const Vector& u : us) {
        for (const Vector& v : moment(m)) {
          for (long l = 1; l <= static_cast<long>(2 * m + 1); ++l) {
            std::vector<std::string> key;
            for (std::size_t i = 0; i < n; ++i) key.push_back((u[i] + Rational(l) * v[i]).to_string());
            expected.insert(key);
          }
        }
      }
      const PointSet s = lambda_points(m, n);
      CHECK(s.size() == expected.size());
      CHECK(s.size() <= lambda_points_raw_size(m, n));
      CHECK(std::find(s.points.begin(), s.points.end(), Vector(n, Rational(1))) != s.points.end());
    }
  }
  // regression-pinned deduplicated counts
  CHECK(lambda_points(2, 2).size() == 58);
  CHECK(lambda_points(3, 3).size() == 893);
  CHECK_THROWS_AS(lambda_points(0, 2), std::invalid_argument);
}

TEST_CASE("simple rational functions: NaN convention") {
  SimpleRationalFunction f{2, {{0, 0}, {1, 0}}, {{1, -1}, {0, 1}}};
  CHECK_FALSE(f(Vector{2, 2}).has_value());  // first denominator vanishes although p_1 = 0
  CHECK(*f(Vector{3, 1}) == Rational(3));
}

TEST_CASE("vanishing on lambda points characterizes zero simple rational functions") {
  Rng rng(71);
  std::size_t zeros = 0;
  std::size_t nonzeros = 0;
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, 4));
    const std::size_t m = static_cast<std::size_t>(testing::rand_int(rng, 1, 4));
    const SimpleRationalFunction f = rand_simple_rational(rng, n, m, it % 2 == 0);
    const bool is_zero = simple_rational_is_zero(f);
    const PointSet pts = lambda_points(m, n);
    const bool all_zero_or_nan = std::all_of(pts.points.begin(), pts.points.end(), [&](const Vector& x) {
      const auto v = f(x);
      return !v || v->is_zero();
    });
    CHECK(all_zero_or_nan == is_zero);
    (is_zero ? zeros : nonzeros)++;
  }
  CHECK(zeros >= 90);
  CHECK(nonzeros >= 90);
}

TEST_CASE("Lie algebra examples") {
  const LieBasis xy = lie_algebra_product_forms(BlackBoxPoly::from_poly(parse_poly("x1*x2")));
  REQUIRE(xy.dimension() == 1);
  const QMatrix c = xy.basis[0];
  CHECK(c(0, 1).is_zero());
  CHECK(c(1, 0).is_zero());
  CHECK(c(0, 0) == -c(1, 1));
  CHECK_FALSE(c(0, 0).is_zero());
  CHECK(same_span(xy, lie_algebra_dense(parse_poly("x1*x2"))));

  const SparsePoly sq = parse_poly("x1^2", 2);
  const LieBasis s = lie_algebra_product_forms(BlackBoxPoly::from_poly(sq));
  REQUIRE(s.dimension() == 2);
  for (const QMatrix& m : s.basis) CHECK((m(0, 0).is_zero() && m(0, 1).is_zero()));
  CHECK(same_span(s, lie_algebra_dense(sq)));
}

TEST_CASE("black-box Lie algebra equals the dense one on products of forms") {
  Rng rng(5);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned d = 1; d <= 4; ++d) {
      for (int kind = 0; kind < 3; ++kind) {
        std::vector<Vector> forms;
        for (unsigned i = 0; i < d; ++i) {
          if (kind == 2 && i > 0 && testing::rand_int(rng, 0, 1) == 0) {
            forms.push_back(forms[static_cast<std::size_t>(testing::rand_int(rng, 0, i - 1))]);
          } else {
            forms.push_back(rand_nonzero(rng, n, kind == 0 ? -3 : -1, kind == 0 ? 3 : 1));
          }
        }
        const SparsePoly p = product(forms, n);
        const LieBasis dense = lie_algebra_dense(p);
        const LieBasis bb = lie_algebra_product_forms(BlackBoxPoly::from_poly(p));
        CHECK(same_span(dense, bb));
        for (const QMatrix& m : dense.basis) CHECK(lie_action(p, m).is_zero());
        if (d <= n && rank(QMatrix::from_rows(forms)) == d) {
          CHECK(bb.dimension() == (d - 1) + (n - d) * n);
        }
      }
    }
  }
}

TEST_CASE("factorization examples") {
  const auto r1 = derand_lie_factor(parse_poly("x1*x2*x3"));
  REQUIRE(std::holds_alternative<LinearFactorization>(r1));
  const auto& f1 = std::get<LinearFactorization>(r1);
  CHECK(f1.lambda == Rational(1));
  CHECK(f1.forms == std::vector<Vector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(f1.exponents == std::vector<unsigned>{1, 1, 1});
  CHECK(f1.to_string() == "1; (x1) ^ 1; (x2) ^ 1; (x3) ^ 1");

  const SparsePoly p2 = parse_poly("x1^3 - x1*x2^2");  // (x1 + x2)(x1 - x2) x1
  const auto r2 = derand_lie_factor(p2);
  REQUIRE(std::holds_alternative<LinearFactorization>(r2));
  const auto& f2 = std::get<LinearFactorization>(r2);
  CHECK(f2.expand(2) == p2);
  CHECK(f2.forms == std::vector<Vector>{{1, 1}, {1, 0}, {1, -1}});

  const auto r3 = derand_lie_factor(parse_poly("x1^2*x3 - 2*x2^2*x3"));
  REQUIRE(std::holds_alternative<FactorFailure>(r3));
  CHECK(std::get<FactorFailure>(r3) == FactorFailure::RequiresFieldExtension);

  CHECK(std::get<FactorFailure>(derand_lie_factor(parse_poly("x1^2 + x2^2"))) ==
        FactorFailure::RequiresFieldExtension);
  CHECK(std::get<FactorFailure>(derand_lie_factor(parse_poly("x1^3 + x2^3 + x3^3"))) ==
        FactorFailure::NotProductOfIndependentForms);
  // four forms in three variables
  CHECK(std::get<FactorFailure>(derand_lie_factor(product({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, 3))) ==
        FactorFailure::NotProductOfIndependentForms);
  CHECK(std::get<FactorFailure>(derand_lie_factor(SparsePoly(2))) == FactorFailure::NotProductOfIndependentForms);
  CHECK_THROWS_AS(derand_lie_factor(parse_poly("x1^2 + x2")), NotHomogeneous);

  const auto c = derand_lie_factor(parse_poly("-7", 2));
  REQUIRE(std::holds_alternative<LinearFactorization>(c));
  CHECK(std::get<LinearFactorization>(c).lambda == Rational(-7));
  const auto pw = std::get<LinearFactorization>(derand_lie_factor(parse_poly("8*x1^3", 3)));
  CHECK(pw.lambda == Rational(8));
  CHECK(pw.forms == std::vector<Vector>{{1, 0, 0}});
}

TEST_CASE("factorization recovers random products of independent forms") {
  Rng rng(17);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 2, 4));
    const std::size_t k = static_cast<std::size_t>(testing::rand_int(rng, 1, static_cast<long>(n)));
    QMatrix l(k, n);
    do {
      l = testing::rand_matrix(rng, k, n, -3, 3);
    } while (rank(l) != k);
    std::vector<unsigned> exps;
    SparsePoly p = SparsePoly::constant(n, testing::rand_rational(rng, 1, 4, 3));
    std::set<std::pair<std::vector<std::string>, unsigned>> expected;
    for (std::size_t i = 0; i < k; ++i) {
      const unsigned e = static_cast<unsigned>(testing::rand_int(rng, 1, 2));
      p = p * SparsePoly::linear_form(l.row(i)).pow(e);
      std::vector<std::string> key;
      for (const Rational& c : normalized(l.row(i))) key.push_back(c.to_string());
      expected.emplace(key, e);
    }
    FactorStats stats;
    const auto r = derand_lie_factor(p, &stats);
    REQUIRE(std::holds_alternative<LinearFactorization>(r));
    const auto& f = std::get<LinearFactorization>(r);
    CHECK(f.expand(n) == p);
    CHECK(stats.essential_variables == k);
    std::set<std::pair<std::vector<std::string>, unsigned>> got;
    for (std::size_t i = 0; i < f.forms.size(); ++i) {
      std::vector<std::string> key;
      for (const Rational& c : f.forms[i]) key.push_back(c.to_string());
      got.emplace(key, f.exponents[i]);
    }
    CHECK(got == expected);
    CHECK(std::is_sorted(f.forms.rbegin(), f.forms.rend()));
  }
}

TEST_CASE("equivalence over Q: examples") {
  const auto a = lie_equivalence_q(parse_poly("2*x1^3 + 6*x1*x2^2"), 3);
  REQUIRE(a.accept);
  CHECK(a.a == QMatrix{{1, 1}, {1, -1}});

  const auto b = lie_equivalence_q(parse_poly("2*x1^3 + 12*x1*x2^2"), 3);
  CHECK_FALSE(b.accept);
  CHECK(b.reason == LieRejectReason::FactorizationFailed);
  CHECK(b.factor_failure == FactorFailure::RequiresFieldExtension);
  CHECK(hessian_determinant(parse_poly("2*x1^3 + 12*x1*x2^2")) == parse_poly("288*x1^2 - 576*x2^2"));

  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned d : {1U, 3U, 4U}) {
      const auto r = lie_equivalence_q(testing::p_d(n, d), d);
      REQUIRE(r.accept);
      CHECK(r.a == QMatrix::identity(n));
    }
  }

  const auto c = lie_equivalence_q(parse_poly("2*x1^3 + x2^3"), 3);
  CHECK_FALSE(c.accept);
  CHECK(c.reason == LieRejectReason::NoRationalRoot);
  CHECK(lie_equivalence_q(parse_poly("x1^3 + x2^3", 3), 3).reason == LieRejectReason::ZeroHessian);
  CHECK(lie_equivalence_q(parse_poly("x1^2*x2"), 3).reason == LieRejectReason::FactorizationFailed);
  CHECK_FALSE(lie_equivalence_q(parse_poly("x1^3 + x2^3 + x3^3 + x1*x2*x3"), 3).accept);
  CHECK_FALSE(lie_equivalence_q(SparsePoly(3), 3).accept);
  CHECK_FALSE(lie_equivalence_q(parse_poly("-x1^4"), 4).accept);
  CHECK(lie_equivalence_q(parse_poly("16*x1^4"), 4).a == QMatrix{{2}});

  const auto lin = lie_equivalence_q(parse_poly("3*x2 - x3", 3), 1);
  REQUIRE(lin.accept);
  CHECK(substitute(parse_poly("x1 + x2 + x3"), lin.a) == parse_poly("3*x2 - x3", 3));

  CHECK_THROWS_AS(lie_equivalence_q(parse_poly("x1^3 + x2^2"), 3), NotHomogeneous);
  CHECK_THROWS_AS(lie_equivalence_q(parse_poly("x1^3"), 4), NotHomogeneous);
  CHECK_THROWS_AS(lie_equivalence_q(parse_poly("x1^2"), 2), std::invalid_argument);
}

TEST_CASE("equivalence over Q: random instances and Hessian cross-check") {
  Rng rng(23);
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 2, it < 20 ? 4 : 3));
    const unsigned d = it < 20 ? 3 : 4;
    const QMatrix a = testing::rand_invertible(rng, n, -3, 3);
    const SparsePoly f = testing::power_sum(a, d);
    const auto r = lie_equivalence_q(f, d);
    REQUIRE(r.accept);
    CHECK(testing::power_sum(r.a, d) == f);
    if (d == 3 && n <= 3) {
      // H_f = c * prod l_i, checked against the Laplace-expansion Hessian
      const SparsePoly h = testing::hessian_det(f);
      CHECK(h == hessian_determinant(f));
      SparsePoly prod = SparsePoly::constant(n, Rational(1));
      for (const Vector& l : r.forms) prod = prod * SparsePoly::linear_form(l);
      const Rational c = h.terms().begin()->second / prod.coefficient(h.terms().begin()->first);
      CHECK_FALSE(c.is_zero());
      CHECK(h == prod * c);
    }
  }
  // non-instances certified by the Hessian oracle must be rejected
  int certified = 0;
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 2, 3));
    const SparsePoly f = testing::rand_form(rng, n, 3, 4, -3, 3);
    if (f.is_zero() || !testing::hessian_certifies_non_instance(f, rng)) continue;
    ++certified;
    CHECK_FALSE(lie_equivalence_q(f, 3).accept);
  }
  CHECK(certified > 10);
}
