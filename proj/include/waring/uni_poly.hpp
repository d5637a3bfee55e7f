#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

/// Univariate polynomial over Q, coefficients stored lowest degree first with
/// trailing zeros stripped.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// c * x^k
  static UniPoly monomial(unsigned k, const Rational& c = Rational(1));
  /// prod (x - r)
  static UniPoly from_roots(std::span<const Rational> roots);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  /// Scaled to leading coefficient 1. Throws std::domain_error on zero.
  UniPoly monic() const;
  /// Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// e.g. "x^2 - 3 x + 2"; "0" for zero.
  std::string to_string(const std::string& var = "x") const;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

}  // namespace waring
