#pragma once

#include <cstddef>
#include <vector>

#include "waring/uni_poly.hpp"

namespace waring {

/// Positive rational multiple of p with coprime integer coefficients.
UniPoly primitive_part(const UniPoly& p);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), monic. Throws std::domain_error on zero.
UniPoly squarefree_part(const UniPoly& p);

/// Sturm sequence P, P', -rem(...), ... where every element after the first two
/// is a positive rational multiple of the classical negated remainder, kept
/// primitive to hold coefficient sizes down.
struct SturmChain {
  std::vector<UniPoly> sequence;
};

/// Throws std::domain_error on zero.
SturmChain sturm_chain(const UniPoly& p);
/// Sign variations of the chain evaluated at x (zeros skipped).
std::size_t sign_variations_at(const SturmChain& chain, const Rational& x);
std::size_t sign_variations_at_pos_inf(const SturmChain& chain);
std::size_t sign_variations_at_neg_inf(const SturmChain& chain);

/// Number of distinct real roots. Throws std::domain_error on zero.
std::size_t count_real_roots(const UniPoly& p);
/// Number of distinct real roots in the half-open interval (a, b].
std::size_t count_real_roots_in(const UniPoly& p, const Rational& a, const Rational& b);

/// Distinct rational roots in increasing order. Throws std::domain_error on zero.
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace waring
