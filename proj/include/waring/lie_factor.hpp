#pragma once

// Lie algebras of products of linear forms, their deterministic computation
// from a black box, factorization into independent rational linear forms, and
// equivalence to P_d = x1^d + ... + xn^d over Q.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "waring/black_box.hpp"
#include "waring/hitting_sets.hpp"
#include "waring/qmatrix.hpp"
#include "waring/sparse_poly.hpp"

namespace waring {

/// f(x) = sum_i <p_i, x> / <q_i, x>, undefined (nullopt, i.e. NaN) on every
/// hyperplane <q_i, x> = 0 even when p_i = 0.
struct SimpleRationalFunction {
  std::size_t n = 0;
  std::vector<Vector> p;
  std::vector<Vector> q;  // nonzero

  std::optional<Rational> operator()(std::span<const Rational> x) const;
};

/// {u + l v : v in P(n,m), u in P(n,m^2) or 0, l = 1..2m+1} where P(n,k) are
/// the first k(n-1)+1 moment-curve points. A hitting set for simple rational
/// functions with m terms. Throws std::invalid_argument unless m, n >= 1.
PointSet lambda_points(std::size_t m, std::size_t n);
/// (m(n-1)+1) (m^2(n-1)+2) (2m+1)
std::size_t lambda_points_raw_size(std::size_t m, std::size_t n);

/// Matrices C with sum_{i,j} c_ij x_j dP/dx_i = 0.
struct LieBasis {
  std::size_t n = 0;
  std::vector<QMatrix> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Exact coefficient matching on the expanded polynomial.
LieBasis lie_algebra_dense(const SparsePoly& p);
/// For P promised to be a product of degree_bound() linear forms: the kernel
/// of the constraints sum c_ij x_j (dP/dx_i)(x) = 0 for x in
/// lambda_points(d, n), partials by interpolation. With stop_at_dimension the
/// scan ends as soon as the kernel has shrunk to that dimension.
LieBasis lie_algebra_product_forms(const BlackBoxPoly& p,
                                   std::optional<std::size_t> stop_at_dimension = std::nullopt);

/// P = lambda * prod forms[i]^exponents[i]; each form has first nonzero
/// coefficient 1 and the forms are sorted lexicographically, largest first.
struct LinearFactorization {
  Rational lambda;
  std::vector<Vector> forms;
  std::vector<unsigned> exponents;

  SparsePoly expand(std::size_t nvars) const;
  /// "lambda; (form) ^ alpha; ..."
  std::string to_string() const;
};

enum class FactorFailure { NotProductOfIndependentForms, RequiresFieldExtension };
std::string to_string(FactorFailure f);

struct FactorStats {
  std::size_t essential_variables = 0;
  std::size_t lie_dimension = 0;
  std::size_t trials = 0;  // generic elements C(t) tried
};

using FactorResult = std::variant<LinearFactorization, FactorFailure>;

/// Factorization into pairwise independent rational linear forms, via the Lie
/// algebra of P computed from a black box. Binary forms (two essential
/// variables) whose factors are dependent are split through rational roots.
/// Every returned factorization has been re-expanded and compared with P.
/// Throws NotHomogeneous.
FactorResult derand_lie_factor(const SparsePoly& p, FactorStats* stats = nullptr);

enum class LieRejectReason { ZeroHessian, FactorizationFailed, NoCoefficients, NoRationalRoot };
std::string to_string(LieRejectReason r);

struct LieEquivalence {
  bool accept = false;
  QMatrix a;                  // f(x) = P_d(A x) when accepted
  std::vector<Vector> forms;  // rows of A
  LieRejectReason reason = LieRejectReason::ZeroHessian;
  std::optional<FactorFailure> factor_failure;
};

/// Hessian determinant of f: det of the second-derivative matrix (computed
/// from the slice pencil for cubics).
SparsePoly hessian_determinant(const SparsePoly& f);

/// Decides whether f = P_d(A x) for an invertible rational A. Throws
/// NotHomogeneous unless f is homogeneous of degree d, std::invalid_argument
/// for d = 0 or d = 2.
LieEquivalence lie_equivalence_q(const SparsePoly& f, unsigned d);

}  // namespace waring
