#include "waring/io.hpp"

#include <cctype>
#include <stdexcept>

#include "waring/errors.hpp"

namespace waring {

namespace {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) : text_(text) {}

  // Skips whitespace and comments.
  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos_ >= text_.size();
  }

  // Returns +1 / -1 for a sign token, 0 otherwise (nothing consumed).
  int sign() {
    skip();
    if (pos_ >= text_.size()) return 0;
    if (text_[pos_] == '+') {
      advance();
      return 1;
    }
    if (text_[pos_] == '-') {
      advance();
      return -1;
    }
    if (text_.substr(pos_).starts_with("\xE2\x88\x92")) {  // U+2212 minus sign
      pos_ += 3;
      ++col_;
      return -1;
    }
    return 0;
  }

  bool peek_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string digits() {
    skip();
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      advance();
    }
    if (out.empty()) fail("expected digits");
    return out;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    advance();
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string msg = what;
    if (pos_ < text_.size()) {
      msg += " near '" + std::string(text_.substr(pos_, 1)) + "'";
    } else {
      msg += " at end of input";
    }
    throw ParseError(msg, line_, col_);
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct RawTerm {
  Rational coeff;
  std::vector<std::pair<std::size_t, unsigned>> factors;  // (0-based var, exponent)
  std::size_t line;
  std::size_t column;
};

unsigned to_unsigned(const std::string& s, PolyLexer& lex) {
  if (s.size() > 9) lex.fail("exponent too large");
  return static_cast<unsigned>(std::stoul(s));
}

}  // namespace

SparsePoly parse_poly(std::string_view text, std::optional<std::size_t> nvars) {
  PolyLexer lex(text);
  std::vector<RawTerm> raw;
  std::size_t max_var = 0;
  bool first = true;
  if (lex.done()) lex.fail("empty polynomial");
  while (!lex.done()) {
    int s = lex.sign();
    if (s == 0) {
      if (!first) lex.fail("expected '+' or '-'");
      s = 1;
    }
    first = false;
    RawTerm t{Rational(s), {}, lex.line(), lex.column()};
    bool have_item = false;
    if (lex.peek_digit()) {
      Integer num(lex.digits());
      Integer den(1);
      if (lex.peek('/')) {
        lex.expect('/');
        den = Integer(lex.digits());
        if (den == 0) lex.fail("zero denominator");
      }
      t.coeff *= Rational(num, den);
      have_item = true;
    }
    while (true) {
      if (have_item && lex.peek('*')) {
        lex.expect('*');
        if (!lex.peek('x')) lex.fail("expected a variable after '*'");
      }
      if (!lex.peek('x')) break;
      const std::size_t vline = lex.line();
      const std::size_t vcol = lex.column();
      lex.expect('x');
      const std::string idx = lex.digits();
      if (idx.size() > 6 || std::stoul(idx) == 0) throw ParseError("invalid variable index", vline, vcol);
      const std::size_t k = std::stoul(idx);
      if (nvars && k > *nvars) {
        throw ParseError("inconsistent variable count: x" + idx + " with " + std::to_string(*nvars) +
                             " variables",
                         vline, vcol);
      }
      unsigned e = 1;
      if (lex.peek('^')) {
        lex.expect('^');
        e = to_unsigned(lex.digits(), lex);
      }
      t.factors.emplace_back(k - 1, e);
      max_var = std::max(max_var, k);
      have_item = true;
    }
    if (!have_item) lex.fail("expected a coefficient or variable");
    raw.push_back(std::move(t));
  }
  const std::size_t n = nvars ? *nvars : std::max<std::size_t>(max_var, 1);
  SparsePoly p(n);
  for (const RawTerm& t : raw) {
    Exponent e(n, 0);
    for (auto [v, k] : t.factors) e[v] += k;
    p.add_term(e, t.coeff);
  }
  return p;
}

std::string serialize_poly(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    if (s.empty()) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    const Rational a = c.abs();
    const bool constant = total_degree(e) == 0;
    bool need_space = false;
    if (constant || !a.is_one()) {
      s += a.to_string();
      need_space = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_space) s += " ";
      s += "x" + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
      need_space = true;
    }
  }
  return s;
}

nlohmann::json poly_to_json(const SparsePoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"c", c.to_string()}, {"e", e}});
  return {{"n", p.nvars()}, {"terms", terms}};
}

SparsePoly poly_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    SparsePoly p(n);
    for (const auto& t : j.at("terms")) {
      const auto e = t.at("e").get<Exponent>();
      if (e.size() != n) throw DimensionMismatch("exponent vector length differs from n");
      const auto& c = t.at("c");
      p.add_term(e, c.is_number_integer() ? Rational(c.get<long>()) : Rational::parse(c.get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("bad polynomial JSON: ") + ex.what());
  }
}

nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& x : v) out.push_back(x.to_string());
  return out;
}

nlohmann::json matrix_to_json(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

QMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto r = j.at("rows").get<std::size_t>();
    const auto c = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != r) throw DimensionMismatch("row count differs from \"rows\"");
    std::vector<Rational> data;
    data.reserve(r * c);
    for (const auto& row : entries) {
      if (row.size() != c) throw DimensionMismatch("row length differs from \"cols\"");
      for (const auto& x : row) {
        data.push_back(x.is_number_integer() ? Rational(x.get<long>()) : Rational::parse(x.get<std::string>()));
      }
    }
    return QMatrix(r, c, std::move(data));
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("bad matrix JSON: ") + ex.what());
  }
}

SparsePoly parse_poly_any(std::string_view text, std::optional<std::size_t> nvars) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
      throw std::invalid_argument(std::string("bad polynomial JSON: ") + ex.what());
    }
    SparsePoly p = poly_from_json(j);
    return nvars ? p.with_nvars(*nvars) : p;
  }
  return parse_poly(text, nvars);
}

std::string format_point(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += " ";
    s += v[i].to_string();
  }
  return s;
}

std::string format_matrix(const QMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) s += format_point(m.row(i)) + "\n";
  return s;
}

std::string format_linear_form(const Vector& coeffs) {
  return serialize_poly(SparsePoly::linear_form(coeffs));
}

}  // namespace waring
