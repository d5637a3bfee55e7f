#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "waring/black_box.hpp"
#include "waring/qmatrix.hpp"

namespace waring {

/// Points in Q^n, deduplicated and sorted lexicographically.
struct PointSet {
  std::size_t n = 0;
  std::vector<Vector> points;

  static PointSet from(std::size_t n, std::vector<Vector> pts);
  std::size_t size() const { return points.size(); }
};

/// gamma(t) = (1, t, ..., t^{n-1}) for t = 1..count. Any p hyperplanes with
/// (n-1)p + 1 <= count miss at least one of these points.
PointSet moment_points(std::size_t n, std::size_t count);

/// Hitting set for forms sum_i l_i^d with l_1..l_n independent:
/// union over p in M of p + (S x S grids in coordinates (1, j), j >= 2),
/// S = {0..d}. M is n(n-1)+1 moment points for d >= 3 and the single point
/// (1, ..., 1) for d <= 2. For n = 1 it is {0, ..., d}.
PointSet equivalence_hitting_set(std::size_t n, unsigned d);
/// Size before deduplication: |M| ((n-1)(d+1)^2 - (n-2)(d+1)).
std::size_t equivalence_hitting_set_raw_size(std::size_t n, unsigned d);

/// n x r integer matrices such that for every r x n matrix L of rank r some
/// member A has rank(L A) = r. Members are A(a)_{ij} = a^{i j} (1-based i, j)
/// for a = 2 .. 2 + n r (r+1) / 2, or just the identity when r = n.
struct TransversalFamily {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<QMatrix> matrices;
};

TransversalFamily transversal_family(std::size_t n, std::size_t r);
std::size_t transversal_family_size(std::size_t n, std::size_t r);

struct PitResult {
  bool nonzero = false;
  std::optional<Vector> witness;  // f(witness) != 0 when nonzero
  std::size_t evaluations = 0;
};

/// Zero test for black boxes promised to be sum_{i<=r} l_i^d with independent
/// l_i (r <= n). For k = 1..n, A in transversal_family(n, k) and y in
/// equivalence_hitting_set(k, d), evaluates f(A y); returns the first nonzero.
PitResult pit_sum_of_powers(const BlackBoxPoly& f, std::size_t n, unsigned d);
/// Upper bound on the evaluations made by pit_sum_of_powers.
std::size_t pit_evaluation_budget(std::size_t n, unsigned d);
/// The points A y visited by pit_sum_of_powers, as a set.
PointSet pit_hitting_set(std::size_t n, unsigned d);

}  // namespace waring
