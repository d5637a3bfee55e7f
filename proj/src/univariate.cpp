#include "waring/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring {

namespace {

int sign_at_pos_inf(const UniPoly& p) { return p.leading().sign(); }

int sign_at_neg_inf(const UniPoly& p) {
  return p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign();
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b. Coefficients stay
// integral when a and b are integral.
UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  const int delta = a.degree() - b.degree();
  if (delta < 0) return a;
  return (a * b.leading().pow(static_cast<unsigned>(delta + 1))).divrem(b).second;
}

// Primitive remainder sequence starting a, b. With sturm_signs the signs are
// adjusted so each new element is a positive multiple of -rem(prev2, prev1).
std::vector<UniPoly> primitive_prs(const UniPoly& a, const UniPoly& b, bool sturm_signs) {
  std::vector<UniPoly> seq{a, b};
  while (!seq.back().is_zero()) {
    const UniPoly& s0 = seq[seq.size() - 2];
    const UniPoly& s1 = seq.back();
    const int delta = s0.degree() - s1.degree();
    UniPoly r = pseudo_remainder(s0, s1);
    if (r.is_zero()) break;
    r = primitive_part(r);
    if (sturm_signs) {
      // prem = lc^(delta+1) rem, so -rem ~ -sign(lc)^(delta+1) prem
      int s = -1;
      if (s1.leading().sign() < 0 && (delta + 1) % 2 == 1) s = 1;
      if (s < 0) r = -r;
    }
    seq.push_back(std::move(r));
  }
  return seq;
}

}  // namespace

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const Rational& c : p.coefficients()) {
    const Integer d = c.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Integer g = 0;
  std::vector<Rational> out;
  out.reserve(p.coefficients().size());
  for (const Rational& c : p.coefficients()) {
    const Rational scaled = c * Rational(den_lcm);
    const Integer num = scaled.numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    out.push_back(scaled);
  }
  for (Rational& c : out) c /= Rational(g);
  return UniPoly(std::move(out));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return UniPoly();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const bool swap = a.degree() < b.degree();
  const auto seq = primitive_prs(primitive_part(swap ? b : a), primitive_part(swap ? a : b), false);
  // last nonzero element
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (!it->is_zero()) return it->monic();
  }
  return UniPoly();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(Rational(1));
  const UniPoly g = gcd(p, p.derivative());
  return p.divrem(g).first.monic();
}

SturmChain sturm_chain(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  SturmChain chain;
  if (p.degree() == 0) {
    chain.sequence = {p};
    return chain;
  }
  chain.sequence = primitive_prs(p, p.derivative(), true);
  if (chain.sequence.back().is_zero()) chain.sequence.pop_back();
  return chain;
}

std::size_t sign_variations_at(const SturmChain& chain, const Rational& x) {
  std::vector<int> s;
  s.reserve(chain.sequence.size());
  for (const UniPoly& q : chain.sequence) s.push_back(q.eval(x).sign());
  return variations(s);
}

std::size_t sign_variations_at_pos_inf(const SturmChain& chain) {
  std::vector<int> s;
  for (const UniPoly& q : chain.sequence) s.push_back(sign_at_pos_inf(q));
  return variations(s);
}

std::size_t sign_variations_at_neg_inf(const SturmChain& chain) {
  std::vector<int> s;
  for (const UniPoly& q : chain.sequence) s.push_back(sign_at_neg_inf(q));
  return variations(s);
}

std::size_t count_real_roots(const UniPoly& p) {
  const SturmChain c = sturm_chain(p);
  return sign_variations_at_neg_inf(c) - sign_variations_at_pos_inf(c);
}

std::size_t count_real_roots_in(const UniPoly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) return 0;
  const SturmChain c = sturm_chain(p);
  return sign_variations_at(c, a) - sign_variations_at(c, b);
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  UniPoly q = squarefree_part(p);
  if (q.degree() <= 0) return roots;
  if (q.coeff(0).is_zero()) {
    roots.emplace_back(0);
    q = q.divrem(UniPoly::monomial(1)).first;
  }
  if (q.degree() <= 0) return roots;
  // integer primitive P, then the monic integer Q(y) = a^(d-1) P(y / a); its
  // rational roots are integers y and give the roots y / a of P
  const UniPoly prim = primitive_part(q);
  const int d = prim.degree();
  const Rational a = prim.leading();
  std::vector<Rational> mc(static_cast<std::size_t>(d) + 1);
  mc[static_cast<std::size_t>(d)] = 1;
  Rational apow(1);
  for (int i = d - 1; i >= 0; --i) {
    mc[static_cast<std::size_t>(i)] = prim.coeff(static_cast<std::size_t>(i)) * apow;
    apow *= a;
  }
  const UniPoly monic(std::move(mc));
  // Cauchy bound: every root y has |y| < 1 + max |c_i|
  Rational bound(0);
  for (const Rational& c : monic.coefficients()) bound = std::max(bound, c.abs());
  const Integer lim = (bound + Rational(1)).numerator() / (bound + Rational(1)).denominator() + 1;
  const SturmChain chain = sturm_chain(monic);
  std::vector<Rational> found;
  // bisect (lo, hi] with integer ends until width 1, then test hi
  std::vector<std::pair<Integer, Integer>> stack{{-lim, lim}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const std::size_t count =
        sign_variations_at(chain, Rational(lo)) - sign_variations_at(chain, Rational(hi));
    if (count == 0) continue;
    if (hi - lo == 1) {
      if (monic.eval(Rational(hi)).is_zero()) found.push_back(Rational(hi, a.numerator()));
      continue;
    }
    Integer mid = lo + (hi - lo) / 2;
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  for (Rational& r : found) roots.push_back(r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace waring
