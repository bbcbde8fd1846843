#include "slocc/matrix.hpp"

#include <sstream>

namespace slocc {

Matrix::Matrix(int rows, int cols, std::vector<GaussianRational> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(rows) * cols) throw std::invalid_argument("matrix data has wrong size");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, int rows) {
  Matrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    const auto& col = columns[static_cast<std::size_t>(c)];
    if (static_cast<int>(col.size()) != rows) throw std::invalid_argument("column has wrong length");
    for (int r = 0; r < rows; ++r) m(r, c) = col[static_cast<std::size_t>(r)];
  }
  return m;
}

Vector Matrix::column(int c) const {
  Vector v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
  return v;
}

Vector Matrix::row(int r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(index(r, 0)),
                data_.begin() + static_cast<std::ptrdiff_t>(index(r, 0) + cols_));
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const auto& y = b(k, j);
        if (!y.is_zero()) p(i, j) += x * y;
      }
    }
  return p;
}

Matrix operator*(Matrix a, const GaussianRational& c) {
  for (auto& x : a.data_) x *= c;
  return a;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (static_cast<int>(v.size()) != a.cols_) throw std::invalid_argument("matrix shape mismatch");
  Vector out(static_cast<std::size_t>(a.rows_));
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      const auto& y = v[static_cast<std::size_t>(k)];
      if (!x.is_zero() && !y.is_zero()) out[static_cast<std::size_t>(i)] += x * y;
    }
  return out;
}

Matrix Matrix::pow(unsigned e) const {
  if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

GaussianRational Matrix::trace() const {
  GaussianRational t;
  for (int k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
  return t;
}

GaussianRational Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix a = *this;
  GaussianRational det = 1;
  for (int c = 0; c < cols_; ++c) {
    int p = c;
    while (p < rows_ && a(p, c).is_zero()) ++p;
    if (p == rows_) return 0;
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    GaussianRational inv = a(c, c).inverse();
    for (int r = c + 1; r < rows_; ++r) {
      if (a(r, c).is_zero()) continue;
      GaussianRational f = a(r, c) * inv;
      for (int j = c; j < cols_; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  int n = rows_;
  Matrix a = *this, inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw ArithmeticError("singular matrix");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    GaussianRational s = a(c, c).inverse();
    for (int j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      GaussianRational f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

using IntRow = std::vector<GaussianInteger>;

IntRow integral_row(const Vector& row) {
  Integer den = 1;
  for (const auto& x : row) den = lcm(den, denominator_lcm(x));
  IntRow out;
  out.reserve(row.size());
  GaussianRational scale{Rational(den)};
  for (const auto& x : row) {
    GaussianRational y = x * scale;
    out.push_back({y.re().get_num(), y.im().get_num()});
  }
  return out;
}

void make_primitive(IntRow& row) {
  GaussianInteger g;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    g = gauss_gcd(g, x);
    if (g.is_unit()) return;
  }
  if (g.is_zero() || g.is_unit()) return;
  for (auto& x : row)
    if (!x.is_zero()) x = exact_div(x, g);
}

struct Echelon {
  std::vector<Vector> rows;  // reduced: pivot entries 1, zeros above and below
  std::vector<int> pivots;
};

// Fraction-free forward elimination over Z[i] with primitive rows, then
// back-substitution over Q(i) to reduced echelon form.
Echelon reduced_echelon(const Matrix& m) {
  std::vector<IntRow> rows;
  for (int r = 0; r < m.rows(); ++r) {
    IntRow row = integral_row(m.row(r));
    make_primitive(row);
    rows.push_back(std::move(row));
  }
  std::vector<int> pivots;
  int next = 0;
  for (int c = 0; c < m.cols() && next < m.rows(); ++c) {
    int p = -1;
    for (int r = next; r < m.rows(); ++r) {
      if (rows[r][c].is_zero()) continue;
      if (p < 0 || rows[r][c].norm() < rows[p][c].norm()) p = r;
    }
    if (p < 0) continue;
    std::swap(rows[p], rows[next]);
    const IntRow& piv = rows[next];
    for (int r = next + 1; r < m.rows(); ++r) {
      if (rows[r][c].is_zero()) continue;
      GaussianInteger g = gauss_gcd(piv[c], rows[r][c]);
      GaussianInteger a = exact_div(piv[c], g);
      GaussianInteger b = exact_div(rows[r][c], g);
      for (int j = c; j < m.cols(); ++j) rows[r][j] = a * rows[r][j] - b * piv[j];
      make_primitive(rows[r]);
    }
    pivots.push_back(c);
    ++next;
  }
  Echelon e;
  e.pivots = pivots;
  for (int k = 0; k < static_cast<int>(pivots.size()); ++k) {
    Vector row;
    row.reserve(rows[k].size());
    for (const auto& x : rows[k]) row.push_back(x.to_rational());
    GaussianRational inv = row[static_cast<std::size_t>(pivots[k])].inverse();
    for (auto& x : row) x *= inv;
    e.rows.push_back(std::move(row));
  }
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    int c = pivots[k];
    for (int r = 0; r < k; ++r) {
      GaussianRational f = e.rows[r][c];
      if (f.is_zero()) continue;
      for (int j = c; j < m.cols(); ++j) e.rows[r][j] -= f * e.rows[k][j];
    }
  }
  return e;
}

}  // namespace

int rank(const Matrix& m) { return static_cast<int>(reduced_echelon(m).pivots.size()); }

std::vector<Vector> nullspace(const Matrix& m) {
  Echelon e = reduced_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(static_cast<std::size_t>(m.cols()));
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[static_cast<std::size_t>(r)];
  }
  Echelon e = reduced_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(static_cast<std::size_t>(m.cols()));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.rows[k][m.cols()];
  return x;
}

UniPoly characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  int n = m.rows();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (int c = 0; c + 2 < n; ++c) {
    int p = c + 1;
    while (p < n && h(p, c).is_zero()) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h(p, j), h(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h(i, p), h(i, c + 1));
    }
    GaussianRational inv = h(c + 1, c).inverse();
    for (int r = c + 2; r < n; ++r) {
      if (h(r, c).is_zero()) continue;
      GaussianRational f = h(r, c) * inv;
      for (int j = 0; j < n; ++j) h(r, j) -= f * h(c + 1, j);
      for (int i = 0; i < n; ++i) h(i, c + 1) += f * h(i, r);
    }
  }
  // Leading principal minors of T*I - h by the Hessenberg recurrence.
  std::vector<UniPoly> p(static_cast<std::size_t>(n) + 1);
  p[0] = UniPoly(1);
  UniPoly t = UniPoly::indeterminate();
  for (int k = 1; k <= n; ++k) {
    UniPoly acc = (t - UniPoly(h(k - 1, k - 1))) * p[k - 1];
    GaussianRational prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod.is_zero()) break;
      acc -= p[i - 1] * (prod * h(i - 1, k - 1));
    }
    p[k] = std::move(acc);
  }
  return p[n];
}

Matrix evaluate(const UniPoly& f, const Matrix& m) {
  Matrix acc(m.rows(), m.cols());
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (int k = 0; k < m.rows(); ++k) acc(k, k) += *it;
  }
  return acc;
}

int span_rank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  int len = static_cast<int>(vectors.front().size());
  Matrix m(static_cast<int>(vectors.size()), len);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < len; ++c) m(r, c) = vectors[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return rank(m);
}

}  // namespace slocc
