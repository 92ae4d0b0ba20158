#pragma once

// Constant-coefficient exterior algebra on an n-dimensional frame.
//
// Real frame: dx_1 < ... < dx_n, with coordinates paired as (x_{2j-1}, x_{2j}).
// Complex frame (n = 2m): dz_1 < ... < dz_m < dzbar_1 < ... < dzbar_m, where
// dz_j = dx_{2j-1} + i dx_{2j}. Indices are 0-based in code.

#include "error.hpp"
#include "linalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace folcoh {

enum class Frame { Real, Complex };

using MultiIndex = std::vector<int>;

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

/// Degree-k monomials of an n-frame in lexicographic order, with reverse lookup.
class MonomialBasis {
public:
  MonomialBasis(int n, int k) : n_(n), k_(k) {
    if (k < 0 || k > n)
      return;
    MultiIndex idx(static_cast<std::size_t>(k));
    build(idx, 0, 0);
  }

  int n() const { return n_; }
  int degree() const { return k_; }
  std::size_t size() const { return list_.size(); }
  const MultiIndex &operator[](std::size_t i) const { return list_[i]; }
  const std::vector<MultiIndex> &list() const { return list_; }

  std::size_t index(const MultiIndex &m) const {
    auto it = lookup_.find(m);
    if (it == lookup_.end())
      throw Error(ErrorKind::DimensionMismatch, "monomial not in basis");
    return it->second;
  }

private:
  void build(MultiIndex &idx, int pos, int start) {
    if (pos == k_) {
      lookup_.emplace(idx, list_.size());
      list_.push_back(idx);
      return;
    }
    for (int i = start; i < n_; ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      build(idx, pos + 1, i + 1);
    }
  }

  int n_;
  int k_;
  std::vector<MultiIndex> list_;
  std::map<MultiIndex, std::size_t> lookup_;
};

/// (p, q) type of a complex-frame monomial: p holomorphic factors, q antiholomorphic.
inline std::pair<int, int> bidegree(const MultiIndex &m, int half) {
  int p = 0;
  for (int i : m)
    if (i < half)
      ++p;
  return {p, static_cast<int>(m.size()) - p};
}

/// Merges two increasing index lists; returns false when they overlap.
/// sign is (-1)^(number of inversions).
inline bool merge_indices(const MultiIndex &a, const MultiIndex &b, MultiIndex &out, int &sign) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  long inversions = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += static_cast<long>(a.size() - i);
      out.push_back(b[j++]);
    } else {
      return false;
    }
  }
  sign = (inversions % 2) ? -1 : 1;
  return true;
}

class FrameForm {
public:
  FrameForm(Frame frame, int n, int degree) : frame_(frame), n_(n), degree_(degree) {}

  static FrameForm monomial(Frame frame, int n, MultiIndex idx, Scalar c = Scalar(1)) {
    FrameForm f(frame, n, static_cast<int>(idx.size()));
    f.add(idx, c);
    return f;
  }

  static FrameForm from_vector(Frame frame, int n, int degree, const Vector &v) {
    MonomialBasis basis(n, degree);
    if (v.size() != basis.size())
      throw Error(ErrorKind::DimensionMismatch, "coefficient vector length");
    FrameForm f(frame, n, degree);
    for (std::size_t i = 0; i < v.size(); ++i)
      f.add(basis[i], v[i]);
    return f;
  }

  Frame frame() const { return frame_; }
  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::map<MultiIndex, Scalar> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const MultiIndex &idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add(const MultiIndex &idx, const Scalar &c) {
    if (static_cast<int>(idx.size()) != degree_)
      throw Error(ErrorKind::DimensionMismatch, "monomial degree");
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  Vector to_vector() const {
    MonomialBasis basis(n_, degree_);
    Vector v(basis.size());
    for (const auto &[idx, c] : terms_)
      v[basis.index(idx)] = c;
    return v;
  }

  FrameForm &operator+=(const FrameForm &o) {
    check_compatible(o);
    if (o.degree_ != degree_)
      throw Error(ErrorKind::DimensionMismatch, "adding forms of different degree");
    for (const auto &[idx, c] : o.terms_)
      add(idx, c);
    return *this;
  }

  FrameForm &operator*=(const Scalar &s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &t : terms_)
      t.second *= s;
    return *this;
  }

  friend FrameForm operator+(FrameForm a, const FrameForm &b) { return a += b; }
  friend FrameForm operator*(Scalar s, FrameForm f) { return f *= s; }

  friend bool operator==(const FrameForm &a, const FrameForm &b) {
    return a.frame_ == b.frame_ && a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  void check_compatible(const FrameForm &o) const {
    if (frame_ != o.frame_ || n_ != o.n_)
      throw Error(ErrorKind::FrameMismatch, "forms live in different frames");
  }

  std::string str() const {
    if (terms_.empty())
      return "0";
    std::string s;
    for (const auto &[idx, c] : terms_) {
      if (!s.empty())
        s += " + ";
      s += "(" + c.str() + ")";
      for (int i : idx)
        s += " " + symbol(i);
    }
    return s;
  }

private:
  std::string symbol(int i) const {
    if (frame_ == Frame::Real)
      return "dx" + std::to_string(i + 1);
    int half = n_ / 2;
    return i < half ? "dz" + std::to_string(i + 1) : "dzbar" + std::to_string(i - half + 1);
  }

  Frame frame_;
  int n_;
  int degree_;
  std::map<MultiIndex, Scalar> terms_;
};

/// a ∧ b. A result of degree above n is the zero form of that degree.
inline FrameForm wedge(const FrameForm &a, const FrameForm &b) {
  a.check_compatible(b);
  FrameForm out(a.frame(), a.n(), a.degree() + b.degree());
  if (out.degree() > a.n())
    return out;
  MultiIndex merged;
  int sign = 1;
  for (const auto &[ia, ca] : a.terms())
    for (const auto &[ib, cb] : b.terms())
      if (merge_indices(ia, ib, merged, sign)) {
        Scalar c = ca * cb;
        if (sign < 0)
          c = -c;
        out.add(merged, c);
      }
  return out;
}

/// Matrix of v -> a ∧ v from degree k to degree k + deg a.
inline Matrix wedge_map(const FrameForm &a, int k) {
  const int n = a.n();
  MonomialBasis src(n, k), dst(n, k + a.degree());
  Matrix m(dst.size(), src.size());
  MultiIndex merged;
  int sign = 1;
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto &[ia, ca] : a.terms())
      if (merge_indices(ia, src[j], merged, sign)) {
        std::size_t i = dst.index(merged);
        m(i, j) += sign < 0 ? -ca : ca;
      }
  return m;
}

/// k-th exterior power: entry (I, J) is the minor of M on rows I, columns J.
/// If vectors transform by v -> M v, degree-k coefficient vectors transform
/// by induced_map(M, k).
inline Matrix induced_map(const Matrix &m, int k) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NotSquare, "induced_map of " + m.shape());
  const int n = static_cast<int>(m.rows());
  MonomialBasis basis(n, k);
  Matrix out(basis.size(), basis.size());
  const std::size_t kk = static_cast<std::size_t>(k);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Matrix minor(kk, kk);
      for (std::size_t i = 0; i < kk; ++i)
        for (std::size_t j = 0; j < kk; ++j)
          minor(i, j) = m(static_cast<std::size_t>(basis[a][i]), static_cast<std::size_t>(basis[b][j]));
      out(a, b) = kk == 0 ? Scalar(1) : determinant(std::move(minor));
    }
  return out;
}

/// Rows are dz_1..dz_m, dzbar_1..dzbar_m expressed over columns dx_1..dx_{2m}.
inline Matrix complex_frame_change(int n) {
  if (n % 2 != 0)
    throw Error(ErrorKind::OddDimension, "complex frame needs even dimension, got " + std::to_string(n));
  const std::size_t m = static_cast<std::size_t>(n / 2);
  Matrix f(2 * m, 2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    f(j, 2 * j) = Scalar(1);
    f(j, 2 * j + 1) = Scalar::i();
    f(m + j, 2 * j) = Scalar(1);
    f(m + j, 2 * j + 1) = -Scalar::i();
  }
  return f;
}

/// Degree-k coefficient change: real-frame coefficients -> complex-frame
/// coefficients. For 1-forms, sum v_i dx_i = sum u_a theta_a with u = F^{-t} v.
inline Matrix real_to_complex_coefficients(int n, int k) {
  Matrix f = complex_frame_change(n);
  auto inv = inverse(f.transpose());
  return induced_map(*inv, k);
}

inline Matrix complex_to_real_coefficients(int n, int k) {
  return induced_map(complex_frame_change(n).transpose(), k);
}

inline FrameForm to_complex_frame(const FrameForm &f) {
  if (f.frame() != Frame::Real)
    throw Error(ErrorKind::FrameMismatch, "expected a real-frame form");
  Vector u = real_to_complex_coefficients(f.n(), f.degree()) * f.to_vector();
  return FrameForm::from_vector(Frame::Complex, f.n(), f.degree(), u);
}

inline FrameForm to_real_frame(const FrameForm &f) {
  if (f.frame() != Frame::Complex)
    throw Error(ErrorKind::FrameMismatch, "expected a complex-frame form");
  Vector v = complex_to_real_coefficients(f.n(), f.degree()) * f.to_vector();
  return FrameForm::from_vector(Frame::Real, f.n(), f.degree(), v);
}

/// Splits a complex-frame form into its (p, q) components.
inline std::map<std::pair<int, int>, FrameForm> bigrade(const FrameForm &f) {
  if (f.frame() != Frame::Complex)
    throw Error(ErrorKind::FrameMismatch, "bigrade needs a complex-frame form");
  std::map<std::pair<int, int>, FrameForm> out;
  for (const auto &[idx, c] : f.terms()) {
    auto pq = bidegree(idx, f.n() / 2);
    auto it = out.try_emplace(pq, Frame::Complex, f.n(), f.degree()).first;
    it->second.add(idx, c);
  }
  return out;
}

/// Positions of the (p, q) monomials inside the degree p+q basis.
inline std::vector<std::size_t> bidegree_positions(int n, int p, int q) {
  MonomialBasis basis(n, p + q);
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (bidegree(basis[i], n / 2) == std::make_pair(p, q))
      pos.push_back(i);
  return pos;
}

} // namespace folcoh
