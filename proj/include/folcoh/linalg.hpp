#pragma once

// Dense exact linear algebra over Gaussian rationals.
//
// Elimination is fraction-free (Bareiss) after clearing row denominators, with
// first-nonzero pivoting in column order so that bases are reproducible.

#include "error.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace folcoh {

using Vector = std::vector<Scalar>;

/// Dense matrix of exact scalars, row-major. Used for every operator between
/// form spaces (d, del, delbar, d^Lambda, wedge with omega^k, ...).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = Scalar(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<Scalar>> &rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.front().size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c)
        throw Error(ErrorKind::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<Vector> &cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows)
        throw Error(ErrorKind::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i)
        m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      v[i] = (*this)(i, j);
    return v;
  }

  std::vector<Vector> columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      out.push_back(column(j));
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar &s) { return s.is_zero(); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix &operator*=(const Scalar &s) {
    for (auto &x : data_)
      x *= s;
    return *this;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorKind::DimensionMismatch, "matrix product " + a.shape() + " * " + b.shape());
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar &aik = a(i, k);
        if (aik.is_zero())
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero())
            c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector operator*(const Matrix &a, const Vector &v) {
    if (a.cols_ != v.size())
      throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !v[k].is_zero())
          out[i] += a(i, k) * v[k];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix &b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix &b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(Scalar s, Matrix m) { return m *= s; }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
  void check_same(const Matrix &b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw Error(ErrorKind::DimensionMismatch, shape() + " vs " + b.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using OperatorMatrix = Matrix;

/// [A | B] side by side.
inline Matrix hstack(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "hstack " + a.shape() + " | " + b.shape());
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

struct Echelon {
  Matrix reduced;                  // upper echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

namespace detail {

inline Integer row_denominator_lcm(const Matrix &m, std::size_t i) {
  Integer l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Scalar &s = m(i, j);
    if (s.is_zero())
      continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.im().get_den_mpz_t());
  }
  return l;
}

} // namespace detail

inline Echelon echelon(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = detail::row_denominator_lcm(m, i);
    if (l != 1) {
      Scalar s{Rational(l)};
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) *= s;
    }
  }

  Echelon e;
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero())
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(m(p, j), m(r, j));
    const Scalar pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Scalar lead = m(i, c);
      const bool eliminate = !lead.is_zero();
      for (std::size_t j = c + 1; j < cols; ++j) {
        const bool own = !m(i, j).is_zero();
        const bool other = eliminate && !m(r, j).is_zero();
        if (!own && !other)
          continue;
        Scalar v = own ? pivot * m(i, j) : Scalar();
        if (other)
          v -= lead * m(r, j);
        if (!v.is_zero())
          v /= prev;
        m(i, j) = std::move(v);
      }
      m(i, c) = Scalar();
    }
    prev = pivot;
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

inline std::size_t rank(const Matrix &m) { return echelon(m).pivots.size(); }

/// Exact determinant of a square matrix.
inline Scalar determinant(Matrix m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NotSquare, "determinant of " + m.shape());
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero())
      ++p;
    if (p == n)
      return Scalar();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero())
        continue;
      Scalar f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero())
          m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// A list of linearly independent vectors in a space of fixed dimension.
class SubspaceBasis {
public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient) : ambient_(ambient) {}

  /// Basis of the span of arbitrary generators (dependent ones are dropped).
  static SubspaceBasis span(std::size_t ambient, const std::vector<Vector> &generators);
  static SubspaceBasis whole(std::size_t ambient) {
    SubspaceBasis b(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      Vector v(ambient);
      v[i] = Scalar(1);
      b.vectors_.push_back(std::move(v));
    }
    return b;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<Vector> &vectors() const { return vectors_; }

  /// Columns are the basis vectors.
  Matrix matrix() const { return Matrix::from_columns(ambient_, vectors_); }

  bool contains(const Vector &v) const {
    if (v.size() != ambient_)
      throw Error(ErrorKind::AmbientMismatch, "vector length");
    if (std::all_of(v.begin(), v.end(), [](const Scalar &s) { return s.is_zero(); }))
      return true;
    return rank(Matrix::from_columns(ambient_, append(v))) == dim();
  }

private:
  std::vector<Vector> append(const Vector &v) const {
    auto out = vectors_;
    out.push_back(v);
    return out;
  }

  std::size_t ambient_ = 0;
  std::vector<Vector> vectors_;
};

/// Basis of the column space, taken from the pivot columns of M.
inline SubspaceBasis image_basis(const Matrix &m) {
  SubspaceBasis b(m.rows());
  auto pivots = echelon(m).pivots;
  std::vector<Vector> cols;
  for (auto c : pivots)
    cols.push_back(m.column(c));
  // pivots already certify independence
  return SubspaceBasis::span(m.rows(), cols);
}

namespace detail {

inline Vector back_substitute(const Echelon &e, std::size_t free_col, std::size_t n) {
  Vector x(n);
  x[free_col] = Scalar(1);
  for (std::size_t r = e.pivots.size(); r-- > 0;) {
    std::size_t pc = e.pivots[r];
    Scalar acc;
    for (std::size_t j = pc + 1; j < n; ++j)
      if (!x[j].is_zero() && !e.reduced(r, j).is_zero())
        acc += e.reduced(r, j) * x[j];
    if (!acc.is_zero())
      x[pc] = -acc / e.reduced(r, pc);
  }
  return x;
}

} // namespace detail

inline SubspaceBasis kernel_basis(const Matrix &m) {
  const std::size_t n = m.cols();
  SubspaceBasis out(n);
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<Vector> vs;
  for (std::size_t f = 0; f < n; ++f)
    if (!is_pivot[f])
      vs.push_back(detail::back_substitute(e, f, n));
  return SubspaceBasis::span(n, vs);
}

inline SubspaceBasis SubspaceBasis::span(std::size_t ambient, const std::vector<Vector> &generators) {
  SubspaceBasis b(ambient);
  if (generators.empty())
    return b;
  Matrix m = Matrix::from_columns(ambient, generators);
  for (auto c : echelon(m).pivots)
    b.vectors_.push_back(generators[c]);
  return b;
}

inline SubspaceBasis subspace_sum(const SubspaceBasis &u, const SubspaceBasis &v) {
  if (u.ambient() != v.ambient())
    throw Error(ErrorKind::AmbientMismatch, "subspace_sum");
  auto gens = u.vectors();
  gens.insert(gens.end(), v.vectors().begin(), v.vectors().end());
  return SubspaceBasis::span(u.ambient(), gens);
}

/// U ∩ V from the null space of [U | -V].
inline SubspaceBasis subspace_intersect(const SubspaceBasis &u, const SubspaceBasis &v) {
  if (u.ambient() != v.ambient())
    throw Error(ErrorKind::AmbientMismatch, "subspace_intersect");
  if (u.dim() == 0 || v.dim() == 0)
    return SubspaceBasis(u.ambient());
  Matrix mu = u.matrix();
  Matrix mv = v.matrix();
  mv *= Scalar(-1);
  SubspaceBasis null = kernel_basis(hstack(mu, mv));
  std::vector<Vector> gens;
  for (const auto &c : null.vectors()) {
    Vector head(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(u.dim()));
    gens.push_back(mu * head);
  }
  return SubspaceBasis::span(u.ambient(), gens);
}

/// dim K - dim I, after checking that I lies inside K.
inline std::size_t quotient_dim(const SubspaceBasis &k, const SubspaceBasis &i) {
  if (k.ambient() != i.ambient())
    throw Error(ErrorKind::AmbientMismatch, "quotient_dim");
  if (i.dim() > 0) {
    Matrix both = hstack(k.matrix(), i.matrix());
    if (rank(both) != k.dim())
      throw Error(ErrorKind::NotContained, "denominator not contained in numerator (dim K = " +
                                               std::to_string(k.dim()) + ", dim I = " +
                                               std::to_string(i.dim()) + ")");
  }
  return k.dim() - i.dim();
}

/// Solves B X = Y for X, where B has independent columns. Returns nullopt when
/// some column of Y is outside the column space of B.
inline std::optional<Matrix> solve_in_basis(const Matrix &b, const Matrix &y) {
  if (b.rows() != y.rows())
    throw Error(ErrorKind::DimensionMismatch, "solve_in_basis " + b.shape() + " / " + y.shape());
  const std::size_t nb = b.cols();
  Echelon e = echelon(hstack(b, y));
  if (e.pivots.size() != nb)
    return std::nullopt;
  for (std::size_t r = 0; r < nb; ++r)
    if (e.pivots[r] != r)
      throw Error(ErrorKind::DimensionMismatch, "solve_in_basis: basis columns are dependent");
  Matrix x(nb, y.cols());
  for (std::size_t c = 0; c < y.cols(); ++c) {
    for (std::size_t r = nb; r-- > 0;) {
      Scalar acc = e.reduced(r, nb + c);
      for (std::size_t j = r + 1; j < nb; ++j)
        if (!x(j, c).is_zero() && !e.reduced(r, j).is_zero())
          acc -= e.reduced(r, j) * x(j, c);
      if (!acc.is_zero())
        acc /= e.reduced(r, r);
      x(r, c) = std::move(acc);
    }
  }
  return x;
}

inline std::optional<Matrix> inverse(const Matrix &m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NotSquare, "inverse of " + m.shape());
  if (rank(m) != m.rows())
    return std::nullopt;
  return solve_in_basis(m, Matrix::identity(m.rows()));
}

} // namespace folcoh
