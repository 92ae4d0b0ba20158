#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace folcoh;
using namespace folcoh::testing;

namespace {

ErrorKind kind_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidConfig;
}

Vector apply_star(const SymplecticData &s, int k, const MultiIndex &idx) {
  return symplectic_star(s, k) * FrameForm::monomial(Frame::Real, s.n(), idx).to_vector();
}

// Shear on (x1, y1) next to a quarter turn on (x2, y2).
UnimodularMatrix mixed_symplectic4() {
  return mat({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
}

} // namespace

TEST(Symplectic, AcceptsExamples) {
  EXPECT_NO_THROW(check_symplectic(shear2()));
  EXPECT_NO_THROW(check_symplectic(mat({{1, 0}, {0, 1}})));
  EXPECT_NO_THROW(check_symplectic(mixed_symplectic4()));
}

TEST(Symplectic, RejectsExamples) {
  EXPECT_EQ(kind_of([] { check_symplectic(mat({{1, 0}, {0, -1}})); }), ErrorKind::NotSymplectic);
  EXPECT_EQ(kind_of([] { check_symplectic(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})); }), ErrorKind::OddCodimension);
  // the complex shear does not preserve the standard form
  EXPECT_EQ(kind_of([] { check_symplectic(shear4()); }), ErrorKind::NotSymplectic);
}

TEST(Symplectic, GramInvarianceMatchesDirectProduct) {
  // [[1,0],[0,-1]]: A^t Omega A = -Omega, computed by hand
  Matrix a = mat({{1, 0}, {0, -1}}).as_matrix();
  Matrix omega = Matrix::from_rows({{0, 1}, {-1, 0}});
  Matrix minus = omega;
  minus *= Scalar(-1);
  EXPECT_EQ(a.transpose() * omega * a, minus);
}

TEST(Symplectic, VolumeIsNonzeroTopForm) {
  for (int m = 1; m <= 3; ++m) {
    std::vector<std::vector<long>> id(static_cast<std::size_t>(2 * m), std::vector<long>(2 * m, 0));
    for (int i = 0; i < 2 * m; ++i)
      id[i][i] = 1;
    SymplecticData s = check_symplectic(mat(id));
    EXPECT_EQ(s.volume.degree(), 2 * m);
    MultiIndex all;
    for (int i = 0; i < 2 * m; ++i)
      all.push_back(i);
    EXPECT_EQ(s.volume.coefficient(all), Scalar(1));
  }
}

TEST(SymplecticStar, TwoTorusValues) {
  SymplecticData s = check_symplectic(shear2());
  // *1 = omega = dx ∧ dy
  EXPECT_EQ(apply_star(s, 0, {}), s.omega.to_vector());
  EXPECT_EQ(s.omega, FrameForm::monomial(Frame::Real, 2, {0, 1}));
  EXPECT_EQ(apply_star(s, 1, {1}), FrameForm::monomial(Frame::Real, 2, {1}).to_vector());
  EXPECT_EQ(apply_star(s, 1, {0}), FrameForm::monomial(Frame::Real, 2, {0}).to_vector());
  EXPECT_EQ(apply_star(s, 2, {0, 1}), vec({1}));
}

TEST(SymplecticStar, DefiningRelation) {
  // a ∧ *b = G(a, b) vol on basis pairs
  for (int m = 1; m <= 2; ++m) {
    std::vector<std::vector<long>> id(static_cast<std::size_t>(2 * m), std::vector<long>(2 * m, 0));
    for (int i = 0; i < 2 * m; ++i)
      id[i][i] = 1;
    SymplecticData s = check_symplectic(mat(id));
    const int n = 2 * m;
    for (int k = 0; k <= n; ++k) {
      MonomialBasis basis(n, k);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          FrameForm a = FrameForm::monomial(Frame::Real, n, basis[i]);
          FrameForm starb = FrameForm::from_vector(Frame::Real, n, n - k, apply_star(s, k, basis[j]));
          FrameForm expect = s.volume;
          expect *= s.pairing[static_cast<std::size_t>(k)](i, j);
          EXPECT_EQ(wedge(a, starb), expect);
        }
    }
  }
}

TEST(SymplecticStar, Involutive) {
  for (const auto &a : {shear2(), mixed_symplectic4(), mat({{1, 0, 0, 0, 0, 0},
                                                            {0, 1, 0, 0, 0, 0},
                                                            {0, 0, 1, 0, 0, 0},
                                                            {0, 0, 0, 1, 0, 0},
                                                            {0, 0, 0, 0, 1, 0},
                                                            {0, 0, 0, 0, 0, 1}})}) {
    SymplecticData s = check_symplectic(a);
    for (int k = 0; k <= s.n(); ++k)
      EXPECT_EQ(symplectic_star(s, s.n() - k) * symplectic_star(s, k),
                Matrix::identity(binomial(static_cast<std::size_t>(s.n()), static_cast<std::size_t>(k))));
  }
}

TEST(SymplecticStar, PairingSymmetryAlternatesWithDegree) {
  SymplecticData s = check_symplectic(mixed_symplectic4());
  for (int k = 0; k <= s.n(); ++k) {
    Matrix g = s.pairing[static_cast<std::size_t>(k)];
    Matrix signed_t = g.transpose();
    if (k % 2)
      signed_t *= Scalar(-1);
    EXPECT_EQ(g, signed_t) << k;
  }
}

TEST(Complex, AcceptsExamples) {
  EXPECT_NO_THROW(check_complex(shear4()));
  EXPECT_NO_THROW(check_complex(mat({{1, 0}, {0, 1}})));
  // multiplication by i commutes with J
  EXPECT_NO_THROW(check_complex(mat({{0, -1}, {1, 0}})));
}

TEST(Complex, RejectsExamples) {
  EXPECT_EQ(kind_of([] { check_complex(shear2()); }), ErrorKind::NotComplexCompatible);
  EXPECT_EQ(kind_of([] { check_complex(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})); }), ErrorKind::OddDimension);
}

TEST(Complex, CommutatorComputedByHand) {
  Matrix a = shear2().as_matrix();
  Matrix j = Matrix::from_rows({{0, -1}, {1, 0}});
  EXPECT_FALSE(a * j == j * a);
}

TEST(Complex, FrameChangeMatricesAreInverseTransposes) {
  ComplexData c = check_complex(shear4());
  EXPECT_EQ(c.to_real * c.to_complex, Matrix::identity(4));
  EXPECT_EQ(c.to_real, c.frame_change.transpose());
}
