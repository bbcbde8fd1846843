#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slocc/gaussian_rational.hpp"
#include "slocc/unipoly.hpp"

namespace slocc {

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(int rows, int cols, std::vector<GaussianRational> data);
  static Matrix identity(int n);
  static Matrix from_columns(const std::vector<Vector>& columns, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussianRational& operator()(int r, int c) { return data_[index(r, c)]; }
  const GaussianRational& operator()(int r, int c) const { return data_[index(r, c)]; }

  Vector column(int c) const;
  Vector row(int r) const;
  bool is_zero() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const GaussianRational& c);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix pow(unsigned e) const;
  GaussianRational trace() const;
  GaussianRational determinant() const;
  /// Throws ArithmeticError when singular.
  Matrix inverse() const;

  std::string to_string() const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussianRational> data_;
};

int rank(const Matrix& m);

/// Basis of {v : m v = 0}. Each basis vector has a 1 in its free column and
/// zeros in the other free columns (reduced echelon normalisation).
std::vector<Vector> nullspace(const Matrix& m);

/// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// det(T*I - m) via reduction to upper Hessenberg form.
UniPoly characteristic_polynomial(const Matrix& m);

/// f(m) by Horner's rule.
Matrix evaluate(const UniPoly& f, const Matrix& m);

/// Rank of the span of the given vectors.
int span_rank(const std::vector<Vector>& vectors);

}  // namespace slocc
