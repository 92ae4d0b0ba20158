#pragma once

// Whole-box computation without orbit factorization.
//
// Every periodic mode in the box (found by plain iteration of A^t, closed
// under the action) gets its own copy of the constant-coefficient exterior
// algebra. Invariance is imposed as one global linear system and all
// cohomologies are computed in ambient coordinates. This is an independent
// route to the totals produced by the per-orbit engines.

#include "engines.hpp"
#include "exterior.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "structures.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace folcoh {

/// Returns true when iterating A^t from k comes back to k within max_steps.
inline bool returns_by_iteration(const UnimodularMatrix &a, const LatticeVector &k, std::size_t max_steps) {
  const std::size_t n = a.n();
  LatticeVector cur = k;
  for (std::size_t step = 0; step < max_steps; ++step) {
    LatticeVector next(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        next[i] += a(j, i) * cur[j];
    if (next == k)
      return true;
    cur = std::move(next);
  }
  return false;
}

class DenseModel {
public:
  // Finite orders in GL(n, Z) stay far below this for the dimensions handled here.
  static constexpr std::size_t kIterationCap = 1000;

  DenseModel(const UnimodularMatrix &a, long radius, const SymplecticData *symplectic = nullptr,
             const ComplexData *complex = nullptr)
      : n_(static_cast<int>(a.n())) {
    collect_modes(a, radius);
    for (int k = 0; k <= n_; ++k)
      invariant_.push_back(real_invariants(a, k));
    if (symplectic)
      symplectic_ = *symplectic;
    if (complex) {
      complex_ = *complex;
      build_bigraded();
    }
  }

  const std::vector<LatticeVector> &modes() const { return modes_; }
  std::size_t invariant_dim(int k) const { return k < 0 || k > n_ ? 0 : invariant_[idx(k)].dim(); }

  DimTable compute(Theory t) const {
    if (needs_complex(t) && !complex_)
      throw Error(ErrorKind::StructureMissing, "dense: complex structure missing");
    if (needs_symplectic(t) && !symplectic_)
      throw Error(ErrorKind::StructureMissing, "dense: symplectic structure missing");
    DimTable out;
    switch (t) {
    case Theory::DeRham:
      for (int k = 0; k <= n_; ++k)
        out[Grading::degree(k)] = quotient_dim(ker_on(d(k), real(k)), im_on(d(k - 1), real(k - 1)));
      break;
    case Theory::DLambda:
      for (int k = 0; k <= n_; ++k)
        out[Grading::degree(k)] =
            quotient_dim(ker_on(d_lambda(k), real(k)), im_on(d_lambda(k + 1), real(k + 1)));
      break;
    case Theory::DDLambda:
      for (int k = 0; k <= n_; ++k) {
        auto num = ker_on(d(k - 1) * d_lambda(k), real(k));
        auto den = subspace_sum(im_on(d(k - 1), real(k - 1)), im_on(d_lambda(k + 1), real(k + 1)));
        out[Grading::degree(k)] = quotient_dim(num, den);
      }
      break;
    case Theory::DPlusDLambda:
      for (int k = 0; k <= n_; ++k) {
        auto num = subspace_intersect(ker_on(d(k), real(k)), ker_on(d_lambda(k), real(k)));
        out[Grading::degree(k)] = quotient_dim(num, im_on(d(k - 1) * d_lambda(k), real(k)));
      }
      break;
    case Theory::Dolbeault:
      for_bidegrees([&](int p, int q) {
        return quotient_dim(ker_on(delbar(p + q), bi(p, q)), im_on(delbar(p + q - 1), bi(p, q - 1)));
      }, out);
      break;
    case Theory::BottChern:
      for_bidegrees([&](int p, int q) {
        int k = p + q;
        auto num = subspace_intersect(ker_on(del(k), bi(p, q)), ker_on(delbar(k), bi(p, q)));
        return quotient_dim(num, im_on(del(k - 1) * delbar(k - 2), bi(p - 1, q - 1)));
      }, out);
      break;
    case Theory::Aeppli:
      for_bidegrees([&](int p, int q) {
        int k = p + q;
        auto num = ker_on(del(k + 1) * delbar(k), bi(p, q));
        auto den = subspace_sum(im_on(del(k - 1), bi(p - 1, q)), im_on(delbar(k - 1), bi(p, q - 1)));
        return quotient_dim(num, den);
      }, out);
      break;
    }
    return out;
  }

private:
  static std::size_t idx(int k) { return static_cast<std::size_t>(k); }

  std::size_t block(int k) const { return k < 0 || k > n_ ? 0 : binomial(idx(n_), idx(k)); }
  std::size_t ambient(int k) const { return modes_.size() * block(k); }

  void collect_modes(const UnimodularMatrix &a, long radius) {
    std::vector<LatticeVector> periodic;
    LatticeVector k(a.n(), Integer(-radius));
    for (;;) {
      if (returns_by_iteration(a, k, kIterationCap))
        periodic.push_back(k);
      std::size_t i = a.n();
      while (i > 0 && k[i - 1] == radius) {
        k[i - 1] = -radius;
        --i;
      }
      if (i == 0)
        break;
      ++k[i - 1];
    }
    // close under the action so that invariance is a square system
    std::vector<LatticeVector> queue = periodic;
    while (!queue.empty()) {
      LatticeVector v = queue.back();
      queue.pop_back();
      if (index_.count(v))
        continue;
      index_[v] = 0;
      LatticeVector next(a.n(), 0);
      for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
          next[i] += a(j, i) * v[j];
      queue.push_back(next);
      at_.push_back({v, next});
    }
    for (auto &[v, pos] : index_) {
      pos = modes_.size();
      modes_.push_back(v);
    }
  }

  SubspaceBasis real_invariants(const UnimodularMatrix &a, int k) const {
    Matrix step = induced_map(a.as_matrix().transpose(), k);
    const std::size_t b = block(k);
    Matrix system(ambient(k), ambient(k));
    // (Q v)_{A^t s} = Lambda^k(A^t) v_s; invariant iff Q v = v
    for (const auto &[s, t] : at_) {
      std::size_t si = index_.at(s), ti = index_.at(t);
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j)
          system(ti * b + i, si * b + j) += step(i, j);
    }
    for (std::size_t i = 0; i < system.rows(); ++i)
      system(i, i) -= Scalar(1);
    return kernel_basis(system);
  }

  Matrix block_diagonal(int from, int to, const std::function<Matrix(const LatticeVector &)> &per_mode) const {
    Matrix m(ambient(to), ambient(from));
    if (m.rows() == 0 || m.cols() == 0)
      return m;
    const std::size_t bf = block(from), bt = block(to);
    for (std::size_t s = 0; s < modes_.size(); ++s) {
      Matrix local = per_mode(modes_[s]);
      for (std::size_t i = 0; i < bt; ++i)
        for (std::size_t j = 0; j < bf; ++j)
          m(s * bt + i, s * bf + j) = local(i, j);
    }
    return m;
  }

  FrameForm covector(const LatticeVector &k) const {
    FrameForm kappa(Frame::Real, n_, 1);
    for (int j = 0; j < n_; ++j)
      kappa.add({j}, Scalar(k[idx(j)]));
    return kappa;
  }

  Matrix d(int k) const {
    return block_diagonal(k, k + 1, [&](const LatticeVector &v) { return wedge_map(covector(v), k); });
  }

  Matrix d_lambda(int k) const {
    if (k <= 0 || k > n_)
      return Matrix(ambient(k - 1), ambient(k));
    auto star = [&](int deg) {
      return block_diagonal(deg, n_ - deg, [&](const LatticeVector &) { return symplectic_star(*symplectic_, deg); });
    };
    Matrix m = star(n_ - k + 1) * d(n_ - k) * star(k);
    if ((k + 1) % 2 != 0)
      m *= Scalar(-1);
    return m;
  }

  // complex frame, full degree-k space per mode
  Matrix del(int k) const { return typed_wedge(k, true); }
  Matrix delbar(int k) const { return typed_wedge(k, false); }

  Matrix typed_wedge(int k, bool holomorphic) const {
    return block_diagonal(k, k + 1, [&](const LatticeVector &v) {
      Vector u = complex_->to_complex * covector(v).to_vector();
      FrameForm part(Frame::Complex, n_, 1);
      for (int i = 0; i < n_; ++i)
        if ((i < complex_->m) == holomorphic)
          part.add({i}, u[idx(i)]);
      return wedge_map(part, k);
    });
  }

  const SubspaceBasis &real(int k) const {
    static const SubspaceBasis empty(0);
    return k < 0 || k > n_ ? empty : invariant_[idx(k)];
  }

  SubspaceBasis bi(int p, int q) const {
    const int m = n_ / 2;
    if (p < 0 || q < 0 || p > m || q > m)
      return SubspaceBasis(ambient(p + q));
    return bigraded_.at({p, q});
  }

  void build_bigraded() {
    const int m = complex_->m;
    for (int k = 0; k <= n_; ++k) {
      Matrix change = block_diagonal(k, k, [&](const LatticeVector &) { return real_to_complex_coefficients(n_, k); });
      std::vector<Vector> complexified;
      for (const auto &v : invariant_[idx(k)].vectors())
        complexified.push_back(change * v);
      SubspaceBasis all = SubspaceBasis::span(ambient(k), complexified);
      MonomialBasis mono(n_, k);
      for (int p = 0; p <= m; ++p) {
        int q = k - p;
        if (q < 0 || q > m)
          continue;
        std::vector<Vector> units;
        for (std::size_t s = 0; s < modes_.size(); ++s)
          for (std::size_t i = 0; i < mono.size(); ++i)
            if (bidegree(mono[i], m) == std::make_pair(p, q)) {
              Vector e(ambient(k));
              e[s * mono.size() + i] = Scalar(1);
              units.push_back(std::move(e));
            }
        bigraded_[{p, q}] = subspace_intersect(all, SubspaceBasis::span(ambient(k), units));
      }
    }
  }

  /// Kernel of M restricted to span(B), as ambient vectors.
  static SubspaceBasis ker_on(const Matrix &m, const SubspaceBasis &b) {
    if (b.dim() == 0)
      return SubspaceBasis(b.ambient());
    Matrix basis = b.matrix();
    SubspaceBasis coeffs = kernel_basis(m * basis);
    std::vector<Vector> out;
    for (const auto &c : coeffs.vectors())
      out.push_back(basis * c);
    return SubspaceBasis::span(b.ambient(), out);
  }

  /// M(span B), as ambient vectors in the target.
  static SubspaceBasis im_on(const Matrix &m, const SubspaceBasis &b) {
    if (b.dim() == 0)
      return SubspaceBasis(m.rows());
    return image_basis(m * b.matrix());
  }

  template <class F> void for_bidegrees(F &&f, DimTable &out) const {
    const int m = n_ / 2;
    for (int p = 0; p <= m; ++p)
      for (int q = 0; q <= m; ++q)
        out[Grading::bidegree(p, q)] = f(p, q);
  }

  int n_;
  std::vector<LatticeVector> modes_;
  std::map<LatticeVector, std::size_t> index_;
  std::vector<std::pair<LatticeVector, LatticeVector>> at_; // (mode, A^t mode)
  std::vector<SubspaceBasis> invariant_;
  std::optional<SymplecticData> symplectic_;
  std::optional<ComplexData> complex_;
  std::map<std::pair<int, int>, SubspaceBasis> bigraded_;
};

} // namespace folcoh
