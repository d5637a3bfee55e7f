#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q with positive dimensions.
class QMatrix {
 public:
  QMatrix() : QMatrix(1, 1) {}
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Rational> d);
  static QMatrix from_columns(std::span<const Vector> cols);
  static QMatrix from_rows(std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return data_; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  QMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  bool is_diagonal() const;
  Rational trace() const;
  /// M * v
  Vector apply(std::span<const Rational> v) const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& c);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
  friend QMatrix operator*(const Rational& c, QMatrix a) { return a *= c; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::size_t max_bit_length() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

std::size_t max_bit_length(std::span<const Rational> v);

}  // namespace waring
