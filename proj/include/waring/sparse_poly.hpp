#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

using Exponent = std::vector<unsigned>;
using Point = std::vector<Rational>;

unsigned total_degree(const Exponent& e);

/// Canonical term order: higher total degree first, ties broken by
/// lexicographically larger exponent first (so x1 precedes x2).
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Multivariate polynomial over Q in variables x1..xn (0-based indices in the
/// API). No zero coefficient is ever stored.
class SparsePoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexGreater>;

  explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const Rational& c);
  static SparsePoly variable(std::size_t nvars, std::size_t index);
  /// sum_i coeffs[i] * x_i
  static SparsePoly linear_form(std::span<const Rational> coeffs);
  static SparsePoly monomial(const Exponent& e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^e to the polynomial. Throws DimensionMismatch if |e| != nvars.
  void add_term(const Exponent& e, const Rational& c);
  Rational coefficient(const Exponent& e) const;

  /// Total degree; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  /// Zero is homogeneous of every degree.
  bool is_homogeneous(unsigned d) const;
  bool is_homogeneous() const;
  /// Variables (0-based) occurring in some term.
  std::vector<std::size_t> used_variables() const;

  Rational eval(std::span<const Rational> x) const;
  SparsePoly derivative(std::size_t index) const;
  SparsePoly pow(unsigned e) const;
  /// Same polynomial viewed in a ring with more (or, if unused, fewer) variables.
  SparsePoly with_nvars(std::size_t nvars) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::size_t max_bit_length() const;

 private:
  void check_arity(const SparsePoly& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Exact evaluation; throws DimensionMismatch when |x| != p.nvars().
inline Rational eval_poly(const SparsePoly& p, std::span<const Rational> x) { return p.eval(x); }
/// Formal derivative with respect to x_{index+1}; throws std::out_of_range.
inline SparsePoly partial_derivative(const SparsePoly& p, std::size_t index) {
  return p.derivative(index);
}

}  // namespace waring
