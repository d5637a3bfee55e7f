#include <doctest.h>

#include "test_support.hpp"
#include "waring/io.hpp"
#include "waring/linalg.hpp"
#include "waring/polydep.hpp"
#include "waring/slices.hpp"

using namespace waring;
using testing::Rng;

namespace {

BlackBoxPoly box(const std::string& s, std::size_t n) { return BlackBoxPoly::from_poly(parse_poly(s, n)); }

// Black box for sum_i (row_i . x)^d without expanding anything.
BlackBoxPoly power_sum_box(const QMatrix& l, unsigned d) {
  return BlackBoxPoly(l.cols(), d, [l, d](std::span<const Rational> x) {
    Rational acc;
    for (const Rational& v : l.apply(x)) acc += v.pow(d);
    return acc;
  });
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  RowSpace rs(v.size());
  for (const auto& b : basis) rs.add(b);
  return rs.contains(v);
}

}  // namespace

TEST_CASE("dependencies among linear forms") {
  const PointSet pts = PointSet::from(2, {{1, 2}, {3, 5}});
  const auto dep = polydep_basis({box("x1", 2), box("x2", 2), box("x1 + x2", 2)}, pts);
  REQUIRE(dep.dimension() == 1);
  CHECK(in_span(dep.basis, Vector{1, 1, -1}));
  CHECK(polydep_basis({box("x1", 2), box("x2", 2)}, pts).dimension() == 0);
}

TEST_CASE("dependencies among partial derivatives") {
  const auto f = BlackBoxPoly::from_poly(parse_poly("x1^3 + 3 x1^2 x2 + 3 x1 x2^2 + x2^3"));
  const auto partials = partial_derivative_boxes(f);
  const auto dep = polydep_basis(partials, pit_hitting_set(2, 2));
  REQUIRE(dep.dimension() == 1);
  CHECK(in_span(dep.basis, Vector{1, -1}));
}

TEST_CASE("interpolated partials match formal derivatives") {
  CHECK(derivative_weights(1) == std::vector<Rational>{-1, 1});
  Rng rng(1);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, 4));
    const unsigned d = static_cast<unsigned>(testing::rand_int(rng, 1, 5));
    const SparsePoly f = testing::rand_form(rng, n, d, 6) + testing::rand_form(rng, n, 1, 2);
    const auto partials = partial_derivative_boxes(BlackBoxPoly::from_poly(f));
    for (int k = 0; k < 3; ++k) {
      const Vector x = testing::rand_vector(rng, n, -4, 4, 3);
      for (std::size_t i = 0; i < n; ++i) CHECK(partials[i](x) == f.derivative(i).eval(x));
    }
  }
}

TEST_CASE("kernel of the evaluation matrix contains every true dependency") {
  Rng rng(2);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, 3));
    std::vector<SparsePoly> fs;
    for (int j = 0; j < 3; ++j) fs.push_back(testing::rand_form(rng, n, 2, 3));
    fs.push_back(fs[0] * Rational(2) - fs[1]);
    std::vector<BlackBoxPoly> boxes;
    for (const auto& f : fs) boxes.push_back(BlackBoxPoly::from_poly(f));
    // a deliberately small point set: kernel may be too big but never too small
    const PointSet few = PointSet::from(n, {testing::rand_vector(rng, n), testing::rand_vector(rng, n)});
    const auto dep = polydep_basis(boxes, few);
    CHECK(in_span(dep.basis, Vector{2, -1, 0, -1}));
  }
}

TEST_CASE("essential variables examples") {
  for (std::size_t r = 1; r <= 4; ++r) {
    const std::size_t n = r + 1;
    SparsePoly f(n);
    for (std::size_t i = 0; i < r; ++i) {
      Exponent e(n, 0);
      e[i] = 4;
      f.add_term(e, Rational(1));
    }
    CHECK(essential_variable_count(f) == r);
    CHECK(essential_variable_count(BlackBoxPoly::from_poly(f)) == r);
  }
  CHECK(essential_variable_count(SparsePoly(3)) == 0);
  CHECK(essential_variable_count(BlackBoxPoly::from_poly(SparsePoly(3))) == 0);
  const SparsePoly g = parse_poly("2 x1^3 + 6 x1 x2^2");
  CHECK(essential_variable_count(g) == 2);
  CHECK(essential_variable_count(BlackBoxPoly::from_poly(g)) == 2);
}

TEST_CASE("black-box and dense essential counts agree on power sums") {
  Rng rng(3);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, 4));
    const std::size_t r = static_cast<std::size_t>(testing::rand_int(rng, 1, static_cast<long>(n)));
    const unsigned d = static_cast<unsigned>(testing::rand_int(rng, 3, 5));
    const QMatrix l = testing::rand_matrix(rng, r, n, -3, 3);
    if (rank(l) < r) continue;
    const std::size_t dense = essential_variable_count(testing::power_sum(l, d));
    CHECK(dense == r);
    CHECK(essential_variable_count(power_sum_box(l, d)) == dense);
  }
}

TEST_CASE("variable minimization") {
  const auto m1 = minimize_variables(parse_poly("x1^3 + 3 x1^2 x2 + 3 x1 x2^2 + x2^3"));
  CHECK(m1.t == 1);
  CHECK(m1.g.used_variables() == std::vector<std::size_t>{0});
  CHECK(m1.g.term_count() == 1);
  const auto m2 = minimize_variables(testing::p_d(3, 3));
  CHECK(m2.t == 3);
  CHECK(m2.a == QMatrix::identity(3));
  const auto m3 = minimize_variables(parse_poly("x1^3", 3));
  CHECK(m3.t == 1);
  CHECK(m3.g == parse_poly("x1^3", 3));
}

TEST_CASE("minimized forms use t variables and transform back") {
  Rng rng(4);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, 4));
    const std::size_t r = static_cast<std::size_t>(testing::rand_int(rng, 1, static_cast<long>(n)));
    const unsigned d = static_cast<unsigned>(testing::rand_int(rng, 2, 4));
    // f(x) = h(L x) with h a random form in r variables
    const SparsePoly h = testing::rand_form(rng, r, d, 5);
    const QMatrix l = testing::rand_matrix(rng, r, n, -2, 2);
    const SparsePoly f = substitute(h, l);
    const auto m = minimize_variables(f);
    CHECK(m.t == essential_variable_count(f));
    CHECK(m.t <= r);
    for (std::size_t v : m.g.used_variables()) CHECK(v < m.t);
    CHECK(rank(m.a) == n);
    CHECK(substitute(m.g, inverse(m.a)) == f);
  }
}
