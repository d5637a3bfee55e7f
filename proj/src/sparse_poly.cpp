#include "waring/sparse_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "waring/errors.hpp"

namespace waring {

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (unsigned v : e) d += v;
  return d;
}

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SparsePoly SparsePoly::constant(std::size_t nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  SparsePoly p(nvars);
  p.add_term(e, Rational(1));
  return p;
}

SparsePoly SparsePoly::linear_form(std::span<const Rational> coeffs) {
  SparsePoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

SparsePoly SparsePoly::monomial(const Exponent& e, const Rational& c) {
  SparsePoly p(e.size());
  p.add_term(e, c);
  return p;
}

void SparsePoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) {
    throw DimensionMismatch("exponent vector has length " + std::to_string(e.size()) +
                            ", expected " + std::to_string(nvars_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> SparsePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  // grlex order puts a highest-degree term first
  return total_degree(terms_.begin()->first);
}

bool SparsePoly::is_homogeneous(unsigned d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

bool SparsePoly::is_homogeneous() const {
  return terms_.empty() || is_homogeneous(*degree());
}

std::vector<std::size_t> SparsePoly::used_variables() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) used[i] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (used[i]) out.push_back(i);
  }
  return out;
}

Rational SparsePoly::eval(std::span<const Rational> x) const {
  if (x.size() != nvars_) {
    throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, expected " +
                            std::to_string(nvars_));
  }
  if (terms_.empty()) return Rational(0);
  // power tables per variable, built once per call
  std::vector<unsigned> max_exp(nvars_, 0);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
  }
  std::vector<std::vector<mpq_class>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    powers[i].resize(max_exp[i] + 1);
    powers[i][0] = 1;
    for (unsigned k = 1; k <= max_exp[i]; ++k) powers[i][k] = powers[i][k - 1] * x[i].raw();
  }
  mpq_class acc = 0;
  mpq_class term;
  for (const auto& [e, c] : terms_) {
    term = c.raw();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term *= powers[i][e[i]];
    }
    acc += term;
  }
  return Rational(acc);
}

SparsePoly SparsePoly::derivative(std::size_t index) const {
  if (index >= nvars_) throw std::out_of_range("derivative index out of range");
  SparsePoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent f = e;
    f[index] -= 1;
    out.add_term(f, c * Rational(static_cast<long>(e[index])));
  }
  return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(nvars_, Rational(1));
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::with_nvars(std::size_t nvars) const {
  SparsePoly out(nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f(nvars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i < nvars) {
        f[i] = e[i];
      } else if (e[i] != 0) {
        throw DimensionMismatch("variable x" + std::to_string(i + 1) + " is used");
      }
    }
    out.add_term(f, c);
  }
  return out;
}

void SparsePoly::check_arity(const SparsePoly& o) const {
  if (o.nvars_ != nvars_) {
    throw DimensionMismatch("polynomials have " + std::to_string(nvars_) + " and " +
                            std::to_string(o.nvars_) + " variables");
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_arity(b);
  SparsePoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::size_t SparsePoly::max_bit_length() const {
  std::size_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, c.bit_length());
  return m;
}

}  // namespace waring
