#include <doctest.h>

#include "test_support.hpp"
#include "waring/equivalence.hpp"
#include "waring/errors.hpp"
#include "waring/io.hpp"
#include "waring/linalg.hpp"
#include "waring/parallel.hpp"

using namespace waring;
using testing::Rng;

namespace {

const Verdict kAccept = Verdict::Accept();

SparsePoly sum_of_cubes_instance(Rng& rng, std::size_t n) {
  const QMatrix a = testing::rand_invertible(rng, n);
  return substitute(testing::p_d(n, 3), a);
}

}  // namespace

TEST_CASE("verdict strings") {
  CHECK(to_string(kAccept) == "ACCEPT");
  CHECK(to_string(Verdict::Reject(RejectReason::NotRealDiagonalizable)) ==
        "REJECT trace=NotRealDiagonalizable");
  CHECK(default_sample_bits(1) == 2);
  CHECK(default_sample_bits(4) == 6);
  CHECK(default_sample_bits(3) == 6);
}

TEST_CASE("simultaneous diagonalization on the textbook cubics") {
  const CubicSlices s = slices_of(parse_poly("2 x1^3 - 6 x1 x2^2"));
  CHECK(simdiag_decision(s, Field::Complex) == kAccept);
  CHECK(simdiag_decision(s, Field::Real) == Verdict::Reject(RejectReason::NotRealDiagonalizable));
  CHECK(simdiag_decision(slices_of(parse_poly("2 x1^3 + 12 x1 x2^2")), Field::Real) == kAccept);
  CHECK_THROWS_AS(simdiag_decision(slices_of(testing::p_d(3, 3)), Field::Complex), SingularMatrix);
}

TEST_CASE("simultaneous diagonalization on transformed sums of cubes") {
  Rng rng(1);
  int tested = 0;
  while (tested < 40) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 2, 5));
    const CubicSlices s = slices_of(sum_of_cubes_instance(rng, n));
    if (determinant(s.slices[0]).is_zero()) continue;
    CHECK(simdiag_decision(s, Field::Complex) == kAccept);
    CHECK(simdiag_decision(s, Field::Real) == kAccept);
    ++tested;
  }
}

TEST_CASE("deterministic decision on small examples") {
  CHECK(deterministic_equivalence(testing::p_d(3, 3), Field::Complex) == kAccept);
  CHECK(deterministic_equivalence(testing::p_d(3, 3), Field::Real) == kAccept);
  const SparsePoly noreal = parse_poly("2 x1^3 - 6 x1 x2^2");
  CHECK(deterministic_equivalence(noreal, Field::Complex) == kAccept);
  CHECK(deterministic_equivalence(noreal, Field::Real) ==
        Verdict::Reject(RejectReason::NotRealDiagonalizable));
  const SparsePoly real = parse_poly("2 x1^3 + 12 x1 x2^2");
  CHECK(deterministic_equivalence(real, Field::Real) == kAccept);
  CHECK(!deterministic_equivalence(parse_poly("x1^2 x2"), Field::Complex).accept);
  CHECK(deterministic_equivalence(SparsePoly(3), Field::Complex) ==
        Verdict::Reject(RejectReason::SingularSlicePencil));
  CHECK(deterministic_equivalence(parse_poly("-5 x1^3"), Field::Real) == kAccept);
  CHECK(deterministic_equivalence(parse_poly("0", 1), Field::Real) ==
        Verdict::Reject(RejectReason::SingularSlicePencil));
  CHECK_THROWS_AS(deterministic_equivalence(parse_poly("x1^2 + x2^3"), Field::Complex), NotCubic);
  CHECK_THROWS_AS(randomized_equivalence(parse_poly("x1^4"), Field::Complex, 1), NotCubic);
}

TEST_CASE("the moment point scan handles a singular first slice") {
  EquivalenceStats stats;
  CHECK(deterministic_equivalence(testing::p_d(3, 3), Field::Complex, &stats) == kAccept);
  REQUIRE(stats.moment_parameter);
  CHECK(*stats.moment_parameter == 1);
  CHECK(stats.peak_bits > 0);
}

TEST_CASE("deterministic decision accepts generated sums of cubes") {
  Rng rng(2);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = static_cast<std::size_t>(2 + iter % 5);
    const SparsePoly f = sum_of_cubes_instance(rng, n);
    CHECK(deterministic_equivalence(f, Field::Complex) == kAccept);
    CHECK(deterministic_equivalence(f, Field::Real) == kAccept);
  }
}

TEST_CASE("binary cubics follow the discriminant") {
  Rng rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    SparsePoly f = testing::rand_form(rng, 2, 3, 4, -3, 3);
    if (iter % 4 == 0) {
      // repeated factor l1^2 l2
      const SparsePoly l1 = SparsePoly::linear_form(testing::rand_vector(rng, 2, -3, 3));
      const SparsePoly l2 = SparsePoly::linear_form(testing::rand_vector(rng, 2, -3, 3));
      f = l1 * l1 * l2;
    }
    if (f.is_zero()) continue;
    const Rational disc = testing::binary_cubic_discriminant(f);
    CHECK(deterministic_equivalence(f, Field::Complex).accept == !disc.is_zero());
    CHECK(deterministic_equivalence(f, Field::Real).accept == (disc.sign() < 0));
  }
}

TEST_CASE("certified non-instances are rejected") {
  Rng rng(4);
  int certified = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 3, 4));
    const SparsePoly f = testing::rand_form(rng, n, 3, 6, -4, 4);
    if (!testing::hessian_certifies_non_instance(f, rng)) continue;
    ++certified;
    CHECK(!deterministic_equivalence(f, Field::Complex).accept);
    CHECK(!deterministic_equivalence(f, Field::Real).accept);
  }
  CHECK(certified >= 40);
}

TEST_CASE("forms with a squared Hessian factor are rejected") {
  Rng rng(5);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 2, 5));
    SparsePoly g = parse_poly("x1^2 x2", n);
    for (std::size_t k = 2; k < n; ++k) {
      Exponent e(n, 0);
      e[k] = 3;
      g.add_term(e, Rational(testing::rand_int(rng, 1, 4)));
    }
    const SparsePoly f = substitute(g, testing::rand_invertible(rng, n));
    CHECK(!deterministic_equivalence(f, Field::Complex).accept);
    CHECK(!deterministic_equivalence(f, Field::Real).accept);
  }
}

TEST_CASE("randomized decision is one-sided") {
  Rng rng(6);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CHECK(!randomized_equivalence(parse_poly("x1^2 x2"), Field::Complex, seed).accept);
    CHECK(randomized_equivalence(SparsePoly(2), Field::Complex, seed) ==
          Verdict::Reject(RejectReason::SingularSlicePencil));
  }
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 2, 4));
    const SparsePoly f = testing::rand_form(rng, n, 3, 5);
    const Verdict det_c = deterministic_equivalence(f, Field::Complex);
    const Verdict det_r = deterministic_equivalence(f, Field::Real);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      if (randomized_equivalence(f, Field::Complex, seed).accept) CHECK(det_c.accept);
      if (randomized_equivalence(f, Field::Real, seed).accept) CHECK(det_r.accept);
    }
    // an R-decomposition is also a C-decomposition
    if (det_r.accept) CHECK(det_c.accept);
  }
}

TEST_CASE("randomized decision is reproducible and mostly accepts sums of cubes") {
  Rng rng(7);
  const SparsePoly p3 = testing::p_d(3, 3);
  int rejected = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Verdict v = randomized_equivalence(p3, Field::Complex, seed);
    CHECK(v == randomized_equivalence(p3, Field::Complex, seed));
    if (!v.accept) {
      CHECK(v.trace == RejectReason::SingularSlicePencil);
      ++rejected;
    }
  }
  // failure probability is at most (n+1)/|S| = 4/64
  CHECK(rejected < 40);
}

TEST_CASE("deterministic verdict agrees with the randomized majority") {
  Rng rng(8);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 2, 4));
    const SparsePoly f = iter % 2 == 0 ? sum_of_cubes_instance(rng, n) : testing::rand_form(rng, n, 3, 5);
    for (Field field : {Field::Complex, Field::Real}) {
      int accepts = 0;
      for (std::uint64_t seed = 0; seed < 15; ++seed) {
        accepts += randomized_equivalence(f, field, seed, 20).accept ? 1 : 0;
      }
      CHECK(deterministic_equivalence(f, field).accept == (accepts * 2 > 15));
    }
  }
}

TEST_CASE("complex but not real instances") {
  Rng rng(9);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 2, 5));
    // (x1 + i x2)^3 + (x1 - i x2)^3 + x3^3 + ... ; Waring decompositions with
    // independent forms are unique, so no real one exists
    SparsePoly g = parse_poly("2 x1^3 - 6 x1 x2^2", n);
    for (std::size_t k = 2; k < n; ++k) {
      Exponent e(n, 0);
      e[k] = 3;
      g.add_term(e, Rational(1));
    }
    const SparsePoly f = substitute(g, testing::rand_invertible(rng, n));
    CHECK(deterministic_equivalence(f, Field::Complex) == kAccept);
    CHECK(deterministic_equivalence(f, Field::Real) == Verdict::Reject(RejectReason::NotRealDiagonalizable));
  }
}

TEST_CASE("thread count does not change results") {
  Rng rng(10);
  std::vector<SparsePoly> fs;
  for (int i = 0; i < 10; ++i) fs.push_back(testing::rand_form(rng, 3, 3, 5));
  fs.push_back(testing::p_d(4, 3));
  std::vector<Verdict> serial;
  std::vector<std::optional<long>> serial_t;
  for (const auto& f : fs) {
    EquivalenceStats st;
    serial.push_back(deterministic_equivalence(f, Field::Real, &st));
    serial_t.push_back(st.moment_parameter);
  }
  set_thread_count(3);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    EquivalenceStats st;
    CHECK(deterministic_equivalence(fs[i], Field::Real, &st) == serial[i]);
    CHECK(st.moment_parameter == serial_t[i]);
  }
  set_thread_count(1);
}
