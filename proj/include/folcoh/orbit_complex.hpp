#pragma once

// The basic complex, one lattice orbit at a time.
//
// An invariant form supported on a finite orbit O = {k_0, A^t k_0, ...} is
// determined by its constant coefficient v at the representative k_0; the
// coefficient at A^t k is Lambda(A^t) v. Consistency around the orbit requires
// v to be fixed by Lambda((A^t)^|O|). Differentials act at k_0 by wedging with
// the mode covector kappa = sum_j (k_0)_j dx_j (the common factor 2*pi*i is
// dropped; it does not change any kernel or image).

#include "error.hpp"
#include "exterior.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "structures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace folcoh {

struct OrbitFiber {
  LatticeOrbit orbit;
  int degree = 0;
  SubspaceBasis basis; // inside the real degree-k monomial space at the representative

  std::size_t dim() const { return basis.dim(); }
};

struct BigradedFiber {
  LatticeOrbit orbit;
  int p = 0;
  int q = 0;
  SubspaceBasis basis; // inside the complex degree-(p+q) monomial space

  std::size_t dim() const { return basis.dim(); }
};

/// (A^t)^|O| acting on 1-form coefficients.
inline Matrix return_map(const UnimodularMatrix &a, const LatticeOrbit &o) {
  Matrix t = a.as_matrix().transpose();
  Matrix r = Matrix::identity(a.n());
  for (std::size_t i = 0; i < o.size(); ++i)
    r = t * r;
  return r;
}

inline FrameForm mode_covector(const LatticeOrbit &o) {
  const int n = static_cast<int>(o.representative.size());
  FrameForm kappa(Frame::Real, n, 1);
  for (int j = 0; j < n; ++j)
    kappa.add({j}, Scalar(o.representative[static_cast<std::size_t>(j)]));
  return kappa;
}

/// Matrix X with dst * X = ambient * src, i.e. the operator in fiber
/// coordinates. Throws NonInvariantImage when the image leaves dst.
inline Matrix restrict_operator(const Matrix &ambient, const SubspaceBasis &src, const SubspaceBasis &dst,
                                const std::string &what) {
  if (src.dim() == 0)
    return Matrix(dst.dim(), 0);
  Matrix image = ambient * src.matrix();
  if (dst.dim() == 0) {
    if (!image.is_zero())
      throw Error(ErrorKind::NonInvariantImage, what + " has image outside a zero fiber");
    return Matrix(0, src.dim());
  }
  auto x = solve_in_basis(dst.matrix(), image);
  if (!x)
    throw Error(ErrorKind::NonInvariantImage, what + " leaves the invariant fiber");
  return *x;
}

inline OrbitFiber invariant_space(const UnimodularMatrix &a, const LatticeOrbit &o, int k) {
  OrbitFiber f{o, k, SubspaceBasis(0)};
  if (k < 0 || k > static_cast<int>(a.n()))
    return f;
  Matrix lifted = induced_map(return_map(a, o), k);
  f.basis = kernel_basis(lifted - Matrix::identity(lifted.rows()));
  return f;
}

/// Invariant (p, q)-forms: vectors on (p, q) monomials fixed by the complexified
/// return map.
inline BigradedFiber bigraded_space(const UnimodularMatrix &a, const ComplexData &c, const LatticeOrbit &o, int p,
                                    int q) {
  const int n = c.n();
  BigradedFiber f{o, p, q, SubspaceBasis(0)};
  if (p < 0 || q < 0 || p > c.m || q > c.m)
    return f;
  const int k = p + q;
  Matrix r = c.to_complex * return_map(a, o) * c.to_real;
  Matrix lifted = induced_map(r, k);
  auto positions = bidegree_positions(n, p, q);
  Matrix shifted = lifted - Matrix::identity(lifted.rows());
  Matrix restricted(shifted.rows(), positions.size());
  for (std::size_t i = 0; i < shifted.rows(); ++i)
    for (std::size_t j = 0; j < positions.size(); ++j)
      restricted(i, j) = shifted(i, positions[j]);
  std::vector<Vector> embedded;
  SubspaceBasis fixed = kernel_basis(restricted);
  for (const auto &v : fixed.vectors()) {
    Vector full(lifted.rows());
    for (std::size_t j = 0; j < positions.size(); ++j)
      full[positions[j]] = v[j];
    embedded.push_back(std::move(full));
  }
  f.basis = SubspaceBasis::span(lifted.rows(), embedded);
  return f;
}

inline Matrix d_operator(const UnimodularMatrix &a, const LatticeOrbit &o, int k) {
  OrbitFiber src = invariant_space(a, o, k);
  OrbitFiber dst = invariant_space(a, o, k + 1);
  if (k < 0 || k >= static_cast<int>(a.n()))
    return Matrix(dst.dim(), src.dim());
  return restrict_operator(wedge_map(mode_covector(o), k), src.basis, dst.basis, "d");
}

/// Type components of the mode covector in the complex frame.
inline std::pair<FrameForm, FrameForm> split_mode_covector(const ComplexData &c, const LatticeOrbit &o) {
  const int n = c.n();
  Vector u = c.to_complex * mode_covector(o).to_vector();
  FrameForm holo(Frame::Complex, n, 1), anti(Frame::Complex, n, 1);
  for (int i = 0; i < n; ++i)
    (i < c.m ? holo : anti).add({i}, u[static_cast<std::size_t>(i)]);
  return {holo, anti};
}

struct DelPair {
  Matrix del;    // (p,q) -> (p+1,q)
  Matrix delbar; // (p,q) -> (p,q+1)
};

/// All fibers and operators of one orbit, built once.
class OrbitModel {
public:
  OrbitModel(const UnimodularMatrix &a, LatticeOrbit orbit, const SymplecticData *symplectic = nullptr,
             const ComplexData *complex = nullptr)
      : orbit_(std::move(orbit)), n_(static_cast<int>(a.n())) {
    build_real(a);
    if (symplectic)
      build_symplectic(*symplectic);
    if (complex)
      build_complex(a, *complex);
  }

  const LatticeOrbit &orbit() const { return orbit_; }
  int n() const { return n_; }
  int half() const { return n_ / 2; }
  bool has_symplectic() const { return !star_.empty(); }
  bool has_complex() const { return !bifibers_.empty(); }

  std::size_t dim(int k) const { return in_range(k) ? fibers_[idx(k)].dim() : 0; }
  const OrbitFiber &fiber(int k) const { return fibers_.at(idx(k)); }

  /// d from degree k to k+1, for any integer k (zero maps outside 0..n).
  Matrix d(int k) const {
    if (k < 0 || k >= n_)
      return Matrix(dim(k + 1), dim(k));
    return d_[idx(k)];
  }

  /// d^Lambda from degree k to k-1.
  Matrix d_lambda(int k) const {
    require(has_symplectic(), "symplectic");
    if (k <= 0 || k > n_)
      return Matrix(dim(k - 1), dim(k));
    return d_lambda_[idx(k)];
  }

  Matrix star(int k) const {
    require(has_symplectic(), "symplectic");
    return star_.at(idx(k));
  }

  /// omega^power ∧ from degree m - power to m + power.
  Matrix lefschetz(int power) const {
    require(has_symplectic(), "symplectic");
    return lefschetz_.at(static_cast<std::size_t>(power));
  }

  std::size_t bidim(int p, int q) const {
    if (p < 0 || q < 0 || p > half() || q > half())
      return 0;
    return bifibers_.at(bidx(p, q)).dim();
  }

  const BigradedFiber &bifiber(int p, int q) const { return bifibers_.at(bidx(p, q)); }

  /// del from (p,q) to (p+1,q); zero maps outside the diamond.
  Matrix del(int p, int q) const {
    require(has_complex(), "complex");
    if (p < 0 || q < 0 || p > half() || q > half())
      return Matrix(bidim(p + 1, q), bidim(p, q));
    return del_.at(bidx(p, q));
  }

  Matrix delbar(int p, int q) const {
    require(has_complex(), "complex");
    if (p < 0 || q < 0 || p > half() || q > half())
      return Matrix(bidim(p, q + 1), bidim(p, q));
    return delbar_.at(bidx(p, q));
  }

private:
  bool in_range(int k) const { return k >= 0 && k <= n_; }
  static std::size_t idx(int k) { return static_cast<std::size_t>(k); }
  std::size_t bidx(int p, int q) const { return static_cast<std::size_t>(p * (half() + 1) + q); }

  static void require(bool ok, const char *what) {
    if (!ok)
      throw Error(ErrorKind::StructureMissing, std::string(what) + " structure not built for this orbit");
  }

  void build_real(const UnimodularMatrix &a) {
    for (int k = 0; k <= n_; ++k)
      fibers_.push_back(invariant_space(a, orbit_, k));
    FrameForm kappa = mode_covector(orbit_);
    for (int k = 0; k < n_; ++k)
      d_.push_back(restrict_operator(wedge_map(kappa, k), fibers_[idx(k)].basis, fibers_[idx(k + 1)].basis, "d"));
  }

  void build_symplectic(const SymplecticData &s) {
    for (int k = 0; k <= n_; ++k)
      star_.push_back(restrict_operator(symplectic_star(s, k), fibers_[idx(k)].basis,
                                        fibers_[idx(n_ - k)].basis, "symplectic star"));
    // d^Lambda = (-1)^{k+1} * d * on degree k
    d_lambda_.push_back(Matrix(0, dim(0)));
    for (int k = 1; k <= n_; ++k) {
      Matrix m = star_[idx(n_ - k + 1)] * d(n_ - k) * star_[idx(k)];
      if ((k + 1) % 2 != 0)
        m *= Scalar(-1);
      d_lambda_.push_back(std::move(m));
    }
    const int m = half();
    for (int power = 0; power <= m; ++power) {
      Matrix w = wedge_map(s.omega_power(power), m - power);
      lefschetz_.push_back(
          restrict_operator(w, fibers_[idx(m - power)].basis, fibers_[idx(m + power)].basis, "lefschetz"));
    }
  }

  void build_complex(const UnimodularMatrix &a, const ComplexData &c) {
    const int m = c.m;
    for (int p = 0; p <= m; ++p)
      for (int q = 0; q <= m; ++q)
        bifibers_.push_back(bigraded_space(a, c, orbit_, p, q));
    auto [holo, anti] = split_mode_covector(c, orbit_);
    for (int p = 0; p <= m; ++p)
      for (int q = 0; q <= m; ++q) {
        const auto &src = bifibers_[bidx(p, q)];
        const std::size_t target = binomial(static_cast<std::size_t>(n_), static_cast<std::size_t>(p + q + 1));
        SubspaceBasis right = p < m ? bifibers_[bidx(p + 1, q)].basis : SubspaceBasis(target);
        SubspaceBasis up = q < m ? bifibers_[bidx(p, q + 1)].basis : SubspaceBasis(target);
        del_.push_back(restrict_operator(wedge_map(holo, p + q), src.basis, right, "del"));
        delbar_.push_back(restrict_operator(wedge_map(anti, p + q), src.basis, up, "delbar"));
      }
  }

  LatticeOrbit orbit_;
  int n_;
  std::vector<OrbitFiber> fibers_;
  std::vector<Matrix> d_;
  std::vector<Matrix> star_;
  std::vector<Matrix> d_lambda_;
  std::vector<Matrix> lefschetz_;
  std::vector<BigradedFiber> bifibers_;
  std::vector<Matrix> del_;
  std::vector<Matrix> delbar_;
};

inline DelPair del_operators(const UnimodularMatrix &a, const LatticeOrbit &o, int p, int q) {
  ComplexData c = check_complex(a);
  OrbitModel model(a, o, nullptr, &c);
  return {model.del(p, q), model.delbar(p, q)};
}

/// d^Lambda on the degree-k fiber of one orbit.
inline Matrix d_lambda_operator(const UnimodularMatrix &a, const LatticeOrbit &o, const SymplecticData &s, int k) {
  return OrbitModel(a, o, &s).d_lambda(k);
}

/// omega^power ∧ on the fiber of degree m - power.
inline Matrix lefschetz_operator(const UnimodularMatrix &a, const SymplecticData &s, const LatticeOrbit &o,
                                 int power) {
  if (power < 0 || power > s.m)
    throw Error(ErrorKind::DimensionMismatch, "Lefschetz power " + std::to_string(power));
  return OrbitModel(a, o, &s).lefschetz(power);
}

} // namespace folcoh
