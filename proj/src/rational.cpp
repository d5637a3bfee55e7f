#include "waring/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace waring {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw std::invalid_argument("invalid integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::size_t bit_length(const Integer& z) {
  if (z == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::size_t Rational::bit_length() const {
  const std::size_t a = waring::bit_length(value_.get_num());
  const std::size_t b = waring::bit_length(value_.get_den());
  return a > b ? a : b;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  Rational r;
  r.value_ = mpq_class(num, den);  // already canonical: gcd preserved under powers
  return r;
}

std::optional<Rational> Rational::exact_root(unsigned d) const {
  if (d == 0) return std::nullopt;
  if (is_zero()) return Rational(0);
  if (sign() < 0 && d % 2 == 0) return std::nullopt;
  Integer num = ::abs(value_.get_num());
  Integer den = value_.get_den();
  Integer rn;
  Integer rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), d) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d) == 0) return std::nullopt;
  if (sign() < 0) rn = -rn;
  return Rational(rn, rd);
}

}  // namespace waring
