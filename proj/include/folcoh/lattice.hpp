#pragma once

// Orbits of the dual action k -> A^t k on Fourier mode indices.
//
// Invariant functions on the torus are supported on finite orbits of this
// action, so finite orbits index the mode decomposition of the basic complex.

#include "error.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace folcoh {

using LatticeVector = std::vector<Integer>;

/// Integer polynomial, coefficients from the constant term upward.
using IntPoly = std::vector<Integer>;

class UnimodularMatrix {
public:
  std::size_t n() const { return n_; }
  const Integer &operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const Integer &det() const { return det_; }

  std::vector<std::vector<Integer>> rows() const {
    std::vector<std::vector<Integer>> out(n_, std::vector<Integer>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        out[i][j] = (*this)(i, j);
    return out;
  }

  /// Entries as exact scalars.
  Matrix as_matrix() const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        m(i, j) = Scalar((*this)(i, j));
    return m;
  }

  friend bool operator==(const UnimodularMatrix &x, const UnimodularMatrix &y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

private:
  friend UnimodularMatrix validate_unimodular(const std::vector<std::vector<Integer>> &);
  std::size_t n_ = 0;
  std::vector<Integer> a_;
  Integer det_;
};

inline UnimodularMatrix validate_unimodular(const std::vector<std::vector<Integer>> &entries) {
  const std::size_t n = entries.size();
  if (n == 0)
    throw Error(ErrorKind::NotSquare, "empty matrix");
  for (const auto &row : entries)
    if (row.size() != n)
      throw Error(ErrorKind::NotSquare, "matrix rows must have length " + std::to_string(n));
  UnimodularMatrix a;
  a.n_ = n;
  for (const auto &row : entries)
    a.a_.insert(a.a_.end(), row.begin(), row.end());
  Scalar det = determinant(a.as_matrix());
  a.det_ = det.re().get_num(); // integer matrix, integer determinant
  if (abs(a.det_) != 1)
    throw Error(ErrorKind::NotUnimodular, "determinant is " + a.det_.get_str());
  return a;
}

inline UnimodularMatrix validate_unimodular(const std::vector<std::vector<long>> &entries) {
  std::vector<std::vector<Integer>> z;
  for (const auto &row : entries) {
    z.emplace_back();
    for (long v : row)
      z.back().emplace_back(v);
  }
  return validate_unimodular(z);
}

// --- polynomials -----------------------------------------------------------

namespace poly {

inline void trim(IntPoly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

/// Exact division by a monic divisor; returns {quotient, remainder}.
inline std::pair<IntPoly, IntPoly> divmod_monic(IntPoly num, const IntPoly &den) {
  IntPoly q;
  trim(num);
  if (num.size() < den.size())
    return {q, num};
  q.assign(num.size() - den.size() + 1, 0);
  for (std::size_t shift = q.size(); shift-- > 0;) {
    Integer c = num[shift + den.size() - 1];
    q[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[shift + j] -= c * den[j];
  }
  trim(num);
  trim(q);
  return {q, num};
}

inline std::size_t euler_phi(std::size_t d) {
  std::size_t result = d, m = d;
  for (std::size_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0)
        m /= p;
      result -= result / p;
    }
  if (m > 1)
    result -= result / m;
  return result;
}

/// Phi_d via x^d - 1 = prod_{e | d} Phi_e.
inline IntPoly cyclotomic(std::size_t d) {
  IntPoly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (std::size_t e = 1; e < d; ++e)
    if (d % e == 0)
      p = divmod_monic(p, cyclotomic(e)).first;
  return p;
}

} // namespace poly

/// det(xI - A) by Faddeev-LeVerrier.
inline IntPoly characteristic_polynomial(const UnimodularMatrix &a) {
  const std::size_t n = a.n();
  Matrix am = a.as_matrix();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = am * mk;
    for (std::size_t i = 0; i < n; ++i)
      mk(i, i) += Scalar(c[n - k + 1]);
    Matrix amk = am * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      tr += amk(i, i).re();
    c[n - k] = -tr / static_cast<long>(k);
  }
  IntPoly out;
  for (auto &x : c)
    out.push_back(x.get_num());
  return out;
}

/// lcm of all d with Phi_d dividing the characteristic polynomial. A lattice
/// vector k has a finite orbit iff (A^t)^L k = k.
inline Integer period_bound(const UnimodularMatrix &a) {
  IntPoly chi = characteristic_polynomial(a);
  const std::size_t n = a.n();
  Integer l = 1;
  // phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2n^2.
  for (std::size_t d = 1; d <= 2 * n * n + 2; ++d) {
    if (poly::euler_phi(d) > n)
      continue;
    if (poly::divmod_monic(chi, poly::cyclotomic(d)).second.empty()) {
      Integer dd = static_cast<unsigned long>(d);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dd.get_mpz_t());
    }
  }
  return l;
}

// --- the dual action -------------------------------------------------------

/// A finite orbit of A^t. elements[0] is the representative and
/// elements[i+1] = A^t elements[i].
struct LatticeOrbit {
  LatticeVector representative;
  std::vector<LatticeVector> elements;

  std::size_t size() const { return elements.size(); }

  /// max_i |representative_i|, the smallest truncation radius that counts this orbit.
  Integer radius() const {
    Integer r = 0;
    for (const auto &x : representative)
      r = std::max<Integer>(r, abs(x));
    return r;
  }

  bool is_zero() const {
    return std::all_of(representative.begin(), representative.end(),
                       [](const Integer &x) { return x == 0; });
  }

  friend bool operator==(const LatticeOrbit &a, const LatticeOrbit &b) {
    return a.elements == b.elements;
  }
};

inline std::string to_string(const LatticeVector &k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i)
      s += ",";
    s += k[i].get_str();
  }
  return s + ")";
}

/// Precomputed A^t and (A^t)^L for repeated classification.
class DualAction {
public:
  explicit DualAction(const UnimodularMatrix &a) : n_(a.n()), t_(a.n() * a.n()) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        t_[i * n_ + j] = a(j, i);
    period_ = period_bound(a);
    power_ = power(t_, period_.get_ui());
  }

  std::size_t n() const { return n_; }
  const Integer &period() const { return period_; }

  LatticeVector apply(const LatticeVector &k) const { return mul(t_, k); }

  bool is_periodic(const LatticeVector &k) const {
    check(k);
    return mul(power_, k) == k;
  }

  /// The cycle of k, rotated to start at its lexicographic minimum.
  LatticeOrbit orbit(const LatticeVector &k) const {
    LatticeOrbit o;
    LatticeVector cur = k;
    do {
      o.elements.push_back(cur);
      cur = apply(cur);
    } while (cur != k);
    auto it = std::min_element(o.elements.begin(), o.elements.end());
    std::rotate(o.elements.begin(), it, o.elements.end());
    o.representative = o.elements.front();
    return o;
  }

private:
  void check(const LatticeVector &k) const {
    if (k.size() != n_)
      throw Error(ErrorKind::DimensionMismatch,
                  "lattice vector of length " + std::to_string(k.size()) + " for n = " + std::to_string(n_));
  }

  LatticeVector mul(const std::vector<Integer> &m, const LatticeVector &k) const {
    check(k);
    LatticeVector out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (m[i * n_ + j] != 0)
          out[i] += m[i * n_ + j] * k[j];
    return out;
  }

  std::vector<Integer> matmul(const std::vector<Integer> &x, const std::vector<Integer> &y) const {
    std::vector<Integer> z(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        if (x[i * n_ + k] != 0)
          for (std::size_t j = 0; j < n_; ++j)
            z[i * n_ + j] += x[i * n_ + k] * y[k * n_ + j];
    return z;
  }

  std::vector<Integer> power(std::vector<Integer> base, unsigned long e) const {
    std::vector<Integer> r(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      r[i * n_ + i] = 1;
    while (e) {
      if (e & 1)
        r = matmul(r, base);
      base = matmul(base, base);
      e >>= 1;
    }
    return r;
  }

  std::size_t n_;
  std::vector<Integer> t_;
  Integer period_;
  std::vector<Integer> power_;
};

struct ModeClass {
  bool finite = false;
  LatticeOrbit orbit; // empty when infinite
};

inline ModeClass classify_mode(const UnimodularMatrix &a, const LatticeVector &k) {
  DualAction act(a);
  ModeClass c;
  if (act.is_periodic(k)) {
    c.finite = true;
    c.orbit = act.orbit(k);
  }
  return c;
}

/// All finite orbits whose representative lies in the box max|k_i| <= radius,
/// sorted by representative.
inline std::vector<LatticeOrbit> enumerate_orbits(const UnimodularMatrix &a, long radius) {
  std::vector<LatticeOrbit> out;
  if (radius < 0)
    return out;
  DualAction act(a);
  const std::size_t n = a.n();
  LatticeVector k(n, Integer(-radius));
  for (;;) {
    if (act.is_periodic(k)) {
      LatticeOrbit o = act.orbit(k);
      if (o.representative == k)
        out.push_back(std::move(o));
    }
    // odometer in lexicographic order
    std::size_t i = n;
    while (i > 0 && k[i - 1] == radius) {
      k[i - 1] = -radius;
      --i;
    }
    if (i == 0)
      break;
    ++k[i - 1];
  }
  return out;
}

} // namespace folcoh
