#pragma once

// Linear dependencies among polynomials given by evaluation, and the number of
// essential variables of a form.

#include <cstddef>
#include <vector>

#include "waring/black_box.hpp"
#include "waring/hitting_sets.hpp"
#include "waring/qmatrix.hpp"
#include "waring/sparse_poly.hpp"

namespace waring {

/// Vectors v with sum_j v_j f_j = 0 (exactly, when the evaluation points hit
/// the span of the f_j; in general a superset of the true dependencies).
struct DependencySpace {
  std::size_t m = 0;
  std::vector<Vector> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Rows are points, columns are polynomials: M_ij = f_j(a_i).
QMatrix eval_matrix(const std::vector<BlackBoxPoly>& fs, const PointSet& points);
/// Kernel of eval_matrix. Throws DimensionMismatch when arities differ.
DependencySpace polydep_basis(const std::vector<BlackBoxPoly>& fs, const PointSet& points);

/// Black boxes for the n first partial derivatives, each obtained by exact
/// interpolation of f along x + s e_i at s = 0..deg and differentiation at s = 0.
std::vector<BlackBoxPoly> partial_derivative_boxes(const BlackBoxPoly& f);
/// Weights w_s with u'(0) = sum_{s=0}^{d} w_s u(s) for every u of degree <= d.
std::vector<Rational> derivative_weights(unsigned d);

/// dim span of the first partials, from the coefficient matrix.
std::size_t essential_variable_count(const SparsePoly& f);
/// Same count for a black box promised to be sum_i l_i^d with independent l_i
/// (d = degree bound); evaluates on the PIT hitting set of degree d - 1.
std::size_t essential_variable_count(const BlackBoxPoly& f);

struct VariableMinimization {
  QMatrix a;         // invertible n x n
  SparsePoly g;      // f(A x), using only x1..xt
  std::size_t t = 0;
};

/// Columns of A: a completion by standard basis vectors (in index order) of
/// the dependency space of the partials, followed by that space's basis.
VariableMinimization minimize_variables(const SparsePoly& f);

}  // namespace waring
