#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "waring/rational.hpp"
#include "waring/sparse_poly.hpp"

namespace waring {

/// A polynomial known only through exact evaluation. The callable must be pure.
class BlackBoxPoly {
 public:
  using Fn = std::function<Rational(std::span<const Rational>)>;

  BlackBoxPoly(std::size_t nvars, unsigned degree_bound, Fn fn)
      : nvars_(nvars), degree_bound_(degree_bound), fn_(std::move(fn)) {}

  /// Wraps an expanded polynomial; the degree bound is its total degree.
  static BlackBoxPoly from_poly(SparsePoly p);

  std::size_t nvars() const { return nvars_; }
  unsigned degree_bound() const { return degree_bound_; }

  /// Throws DimensionMismatch when |x| != nvars.
  Rational operator()(std::span<const Rational> x) const;

 private:
  std::size_t nvars_;
  unsigned degree_bound_;
  Fn fn_;
};

}  // namespace waring
