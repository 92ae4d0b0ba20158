#pragma once

// Transverse symplectic and complex structures compatible with the holonomy.
//
// Both are the standard constant structures on the torus in the pairing
// (x_1, y_1, ..., x_m, y_m): omega = sum dx_{2j-1} ∧ dx_{2j} and
// J d/dx_{2j-1} = d/dx_{2j}. The holonomy matrix must preserve them.

#include "error.hpp"
#include "exterior.hpp"
#include "lattice.hpp"
#include "linalg.hpp"

#include <string>
#include <vector>

namespace folcoh {

namespace detail {

inline Matrix standard_gram(std::size_t n) {
  Matrix g(n, n);
  for (std::size_t j = 0; j + 1 < n; j += 2) {
    g(j, j + 1) = Scalar(1);
    g(j + 1, j) = Scalar(-1);
  }
  return g;
}

inline Matrix standard_j(std::size_t n) {
  Matrix j(n, n);
  for (std::size_t a = 0; a + 1 < n; a += 2) {
    j(a + 1, a) = Scalar(1);
    j(a, a + 1) = Scalar(-1);
  }
  return j;
}

inline int require_even(const UnimodularMatrix &a, ErrorKind kind) {
  if (a.n() % 2 != 0)
    throw Error(kind, "codimension " + std::to_string(a.n()) + " is odd");
  return static_cast<int>(a.n());
}

} // namespace detail

struct SymplecticData {
  int m = 0;                 // half-dimension
  Matrix gram;               // Omega, with omega = 1/2 sum Omega_ij dx_i ∧ dx_j
  FrameForm omega{Frame::Real, 0, 2};
  FrameForm volume{Frame::Real, 0, 0}; // omega^m / m!
  std::vector<Matrix> pairing;         // G_k on degree-k monomials, k = 0..2m
  std::vector<Matrix> star;            // *_s : degree k -> degree 2m-k, k = 0..2m

  int n() const { return 2 * m; }

  /// omega^k as a form of degree 2k.
  FrameForm omega_power(int k) const {
    FrameForm p = FrameForm::monomial(Frame::Real, n(), {});
    for (int i = 0; i < k; ++i)
      p = wedge(p, omega);
    return p;
  }
};

struct ComplexData {
  int m = 0;
  Matrix j;            // standard complex structure on tangent vectors
  Matrix frame_change; // rows dz_1..dz_m, dzbar_1..dzbar_m over dx_1..dx_{2m}
  Matrix to_complex;   // 1-form coefficients: real -> complex (F^{-t})
  Matrix to_real;      // and back (F^t)

  int n() const { return 2 * m; }
};

/// Solves e_I ∧ *e_J = G_k(e_I, e_J) vol for every pair of degree-k monomials.
inline Matrix solve_symplectic_star(const SymplecticData &s, int k) {
  const int n = s.n();
  MonomialBasis src(n, k), dst(n, n - k);
  MultiIndex top(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    top[static_cast<std::size_t>(i)] = i;
  const Scalar vol = s.volume.coefficient(top);

  Matrix pairing(src.size(), dst.size());
  MultiIndex merged;
  int sign = 1;
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = 0; b < dst.size(); ++b)
      if (merge_indices(src[a], dst[b], merged, sign))
        pairing(a, b) = Scalar(sign);

  Matrix rhs = s.pairing[static_cast<std::size_t>(k)];
  rhs *= vol;
  auto solved = solve_in_basis(pairing, rhs);
  if (!solved || rank(pairing) != dst.size())
    throw Error(ErrorKind::SingularWedgePairing, "degree " + std::to_string(k));
  return *solved;
}

inline SymplecticData check_symplectic(const UnimodularMatrix &a) {
  const int n = detail::require_even(a, ErrorKind::OddCodimension);
  SymplecticData s;
  s.m = n / 2;
  s.gram = detail::standard_gram(a.n());
  Matrix am = a.as_matrix();
  if (!(am.transpose() * s.gram * am == s.gram))
    throw Error(ErrorKind::NotSymplectic, "A^t Omega A != Omega");

  s.omega = FrameForm(Frame::Real, n, 2);
  for (int j = 0; j < s.m; ++j)
    s.omega.add({2 * j, 2 * j + 1}, Scalar(1));
  FrameForm vol = s.omega_power(s.m);
  long fact = 1;
  for (int i = 2; i <= s.m; ++i)
    fact *= i;
  vol *= Scalar(Rational(1, fact));
  if (vol.is_zero())
    throw Error(ErrorKind::SingularWedgePairing, "omega^m vanishes");
  s.volume = vol;

  // Covector pairing G(dx_i, dx_j) = (Omega^{-1})^t_ij; fixed so that *_s(1) = vol
  // and *_s = id on 1-forms in dimension 2.
  Matrix p = inverse(s.gram)->transpose();
  for (int k = 0; k <= n; ++k)
    s.pairing.push_back(induced_map(p, k));
  for (int k = 0; k <= n; ++k)
    s.star.push_back(solve_symplectic_star(s, k));
  return s;
}

inline ComplexData check_complex(const UnimodularMatrix &a) {
  const int n = detail::require_even(a, ErrorKind::OddDimension);
  ComplexData c;
  c.m = n / 2;
  c.j = detail::standard_j(a.n());
  Matrix am = a.as_matrix();
  if (!(am * c.j == c.j * am))
    throw Error(ErrorKind::NotComplexCompatible, "AJ != JA");
  c.frame_change = complex_frame_change(n);
  c.to_real = c.frame_change.transpose();
  c.to_complex = *inverse(c.to_real);
  return c;
}

/// *_s from degree k to degree 2m - k on monomial coefficients.
inline const Matrix &symplectic_star(const SymplecticData &s, int k) {
  if (k < 0 || k > s.n())
    throw Error(ErrorKind::DimensionMismatch, "degree " + std::to_string(k));
  return s.star[static_cast<std::size_t>(k)];
}

} // namespace folcoh
