#include "waring/black_box.hpp"

#include <memory>
#include <string>

#include "waring/errors.hpp"

namespace waring {

BlackBoxPoly BlackBoxPoly::from_poly(SparsePoly p) {
  const std::size_t n = p.nvars();
  const unsigned d = p.degree().value_or(0);
  auto shared = std::make_shared<const SparsePoly>(std::move(p));
  return BlackBoxPoly(n, d, [shared](std::span<const Rational> x) { return shared->eval(x); });
}

Rational BlackBoxPoly::operator()(std::span<const Rational> x) const {
  if (x.size() != nvars_) {
    throw DimensionMismatch("black box expects " + std::to_string(nvars_) + " coordinates, got " +
                            std::to_string(x.size()));
  }
  return fn_(x);
}

}  // namespace waring
