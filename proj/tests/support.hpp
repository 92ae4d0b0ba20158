#pragma once

#include "folcoh/growth.hpp"

#include <random>
#include <vector>

namespace folcoh::testing {

inline UnimodularMatrix mat(const std::vector<std::vector<long>> &rows) { return validate_unimodular(rows); }

// Shear of the 2-torus; symplectic for dx∧dy.
inline UnimodularMatrix shear2() { return mat({{1, 1}, {0, 1}}); }

// Complex shear (w, z) -> (w + z, z) of the 4-torus in coordinates (x1, y1, x2, y2).
inline UnimodularMatrix shear4() { return mat({{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}}); }

inline UnimodularMatrix rotation2() { return mat({{0, -1}, {1, 0}}); }

inline LatticeVector lv(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs)
    v.push_back(Integer(x));
  return v;
}

inline LatticeOrbit orbit_of(const UnimodularMatrix &a, const LatticeVector &k) {
  ModeClass c = classify_mode(a, k);
  if (!c.finite)
    throw std::logic_error("mode " + to_string(k) + " has an infinite orbit");
  return c.orbit;
}

inline Structures symplectic_only(const UnimodularMatrix &a) {
  Structures s;
  s.symplectic = check_symplectic(a);
  return s;
}

inline Structures complex_only(const UnimodularMatrix &a) {
  Structures s;
  s.complex = check_complex(a);
  return s;
}

inline std::vector<Theory> symplectic_theories() {
  return {Theory::DeRham, Theory::DLambda, Theory::DDLambda, Theory::DPlusDLambda};
}

inline std::vector<Theory> complex_theories() {
  return {Theory::DeRham, Theory::Dolbeault, Theory::BottChern, Theory::Aeppli};
}

inline Scalar random_scalar(std::mt19937 &rng, int lo, int hi, bool gaussian) {
  std::uniform_int_distribution<int> d(lo, hi);
  Scalar re(Rational(d(rng), 1 + std::abs(d(rng)) % 3));
  if (!gaussian)
    return re;
  return re + Scalar(Rational(d(rng))) * Scalar::i();
}

inline Matrix random_matrix(std::mt19937 &rng, std::size_t rows, std::size_t cols, bool gaussian = true) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = random_scalar(rng, -3, 3, gaussian);
  return m;
}

/// Random matrix of rank at most r, as a product of thin factors.
inline Matrix random_low_rank(std::mt19937 &rng, std::size_t rows, std::size_t cols, std::size_t r) {
  return random_matrix(rng, rows, r) * random_matrix(rng, r, cols);
}

inline Vector vec(std::initializer_list<Scalar> xs) { return Vector(xs); }

inline std::vector<std::size_t> dims_of(const DimTable &t) {
  std::vector<std::size_t> out;
  for (const auto &[g, d] : t)
    out.push_back(d);
  return out;
}

} // namespace folcoh::testing
