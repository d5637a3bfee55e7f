#pragma once

// Cubic forms as symmetric 3-tensors: f = sum_{i,j,k} T_ijk x_i x_j x_k, with
// slice i the symmetric matrix (T_ijk)_{j,k}.

#include <cstddef>
#include <vector>

#include "waring/qmatrix.hpp"
#include "waring/sparse_poly.hpp"

namespace waring {

struct CubicSlices {
  std::size_t n = 0;
  std::vector<QMatrix> slices;

  /// Each slice symmetric and T_ijk invariant under all index permutations.
  bool is_valid() const;
  std::size_t max_bit_length() const;
  friend bool operator==(const CubicSlices&, const CubicSlices&) = default;
};

/// Throws NotCubic unless f is zero or homogeneous of degree 3.
CubicSlices slices_of(const SparsePoly& f);
/// Inverse of slices_of. Throws std::invalid_argument on a symmetry violation.
SparsePoly form_from_slices(const CubicSlices& t);

/// f(A y) for an n x k matrix A; the result has k variables.
SparsePoly substitute(const SparsePoly& f, const QMatrix& a);
/// Slices of f(A x) computed directly from the slices of f: T'_k = A^T D_k A
/// with D_k = sum_i a_ik S_i.
CubicSlices transformed_slices(const CubicSlices& s, const QMatrix& a);

/// The Hessian of a cubic as the linear matrix pencil 6 sum_k x_k T_k.
class HessianPencil {
 public:
  explicit HessianPencil(CubicSlices s) : s_(std::move(s)) {}
  QMatrix at(const Vector& x) const;
  /// Entries are linear forms in x1..xn.
  std::vector<std::vector<SparsePoly>> symbolic() const;

 private:
  CubicSlices s_;
};

inline HessianPencil hessian_as_slice_pencil(const CubicSlices& s) { return HessianPencil(s); }

}  // namespace waring
