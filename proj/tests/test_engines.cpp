#include "support.hpp"

#include <gtest/gtest.h>

using namespace folcoh;
using namespace folcoh::testing;

namespace {

using Dims = std::vector<std::size_t>;

struct Shear2 : ::testing::Test {
  UnimodularMatrix a = shear2();
  SymplecticData s = check_symplectic(a);
  OrbitModel at(std::initializer_list<long> k) const { return OrbitModel(a, orbit_of(a, lv(k)), &s); }
};

struct Shear4 : ::testing::Test {
  UnimodularMatrix a = shear4();
  ComplexData c = check_complex(a);
  OrbitModel at(std::initializer_list<long> k) const { return OrbitModel(a, orbit_of(a, lv(k)), nullptr, &c); }
};

// nonzero entries of a [p][q] table
std::map<std::pair<int, int>, std::size_t> support_of(const Bidims &b) {
  std::map<std::pair<int, int>, std::size_t> out;
  for (std::size_t p = 0; p < b.size(); ++p)
    for (std::size_t q = 0; q < b[p].size(); ++q)
      if (b[p][q])
        out[{static_cast<int>(p), static_cast<int>(q)}] = b[p][q];
  return out;
}

Bidims all_ones_except_middle(std::size_t middle) {
  Bidims b(3, std::vector<std::size_t>(3, 1));
  b[1][1] = middle;
  return b;
}

} // namespace

TEST_F(Shear2, DeRhamPerOrbit) {
  EXPECT_EQ(de_rham_dims(at({0, 0})), (Dims{1, 1, 1}));
  for (long k : {1L, -1L, 5L})
    EXPECT_EQ(de_rham_dims(at({0, k})), (Dims{0, 0, 1}));
  EXPECT_EQ(de_rham_dims(a, orbit_of(a, lv({0, 2}))), (Dims{0, 0, 1}));
}

TEST_F(Shear2, SymplecticTheoriesPerOrbit) {
  EXPECT_EQ(d_lambda_dims(at({0, 0})), (Dims{1, 1, 1}));
  EXPECT_EQ(dd_lambda_dims(at({0, 0})), (Dims{1, 1, 1}));
  EXPECT_EQ(d_plus_dlambda_dims(at({0, 0})), (Dims{1, 1, 1}));
  for (long k : {1L, -3L}) {
    EXPECT_EQ(d_lambda_dims(at({0, k})), (Dims{1, 0, 0}));
    EXPECT_EQ(dd_lambda_dims(at({0, k})), (Dims{1, 0, 1}));
    EXPECT_EQ(d_plus_dlambda_dims(at({0, k})), (Dims{0, 1, 0}));
  }
}

TEST_F(Shear2, DLambdaOperatorValues) {
  for (long k2 : {1L, 4L, -2L}) {
    LatticeOrbit o = orbit_of(a, lv({0, k2}));
    OrbitModel x(a, o, &s);
    EXPECT_TRUE(d_lambda_operator(a, o, s, 0).is_zero());
    EXPECT_TRUE(x.d_lambda(1).is_zero());
    // f dx∧dy -> -k2 f dy, in frame coordinates
    Matrix dl = x.d_lambda(2);
    ASSERT_EQ(dl.rows(), 1u);
    Vector top = x.fiber(2).basis.vectors().front();
    Vector image = x.fiber(1).basis.matrix() * dl.column(0);
    EXPECT_EQ(image, vec({0, Scalar(-k2) * top[0]}));
  }
}

TEST_F(Shear2, LefschetzOperatorValues) {
  for (long k2 : {0L, 5L}) {
    LatticeOrbit o = orbit_of(a, lv({0, k2}));
    Matrix l0 = lefschetz_operator(a, s, o, 0);
    EXPECT_EQ(l0, Matrix::identity(1));
    Matrix l1 = lefschetz_operator(a, s, o, 1);
    EXPECT_EQ(rank(l1), 1u);
    EXPECT_EQ(l1.rows(), 1u);
  }
  EXPECT_THROW(lefschetz_operator(a, s, orbit_of(a, lv({0, 0})), 2), Error);
}

TEST_F(Shear2, ReversedGradation) {
  for (const auto &o : enumerate_orbits(a, 4)) {
    OrbitModel x(a, o, &s);
    Dims dr = de_rham_dims(x), dl = d_lambda_dims(x);
    std::reverse(dl.begin(), dl.end());
    EXPECT_EQ(dr, dl);
  }
}

TEST_F(Shear2, InequalitiesPerOrbit) {
  auto ineq = inequality_check(at({0, 3}));
  ASSERT_EQ(ineq.size(), 3u);
  for (const auto &q : ineq)
    EXPECT_TRUE(q.holds()) << q.name << " " << q.location;
  EXPECT_EQ(ineq[2].name, "deRham<=dPlusDLambda+ddLambda");
  EXPECT_EQ(ineq[2].lhs, 1u);
  EXPECT_EQ(ineq[2].rhs, 1u);
}

TEST_F(Shear2, PoincareDualityAggregated) {
  std::map<Theory, DimTable> totals;
  for (const auto &o : enumerate_orbits(a, 3)) {
    OrbitModel x(a, o, &s);
    for (const auto &[t, table] : compute_available(x))
      for (const auto &[g, d] : table)
        totals[t][g] += d;
  }
  EXPECT_EQ(dims_of(totals[Theory::DDLambda]), (Dims{7, 1, 7}));
  for (const auto &f : duality_report(totals, 2)) {
    EXPECT_TRUE(f.expected_to_hold);
    EXPECT_TRUE(f.equal()) << f.pair << " " << f.left.str();
  }
}

TEST_F(Shear2, ComplexTheoriesNeedTheComplexStructure) {
  try {
    compute_theory(at({0, 1}), Theory::Dolbeault);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::StructureMissing);
  }
  OrbitModel bare(a, orbit_of(a, lv({0, 1})));
  EXPECT_THROW(compute_theory(bare, Theory::DDLambda), Error);
  EXPECT_EQ(compute_available(bare).size(), 1u);
}

TEST_F(Shear4, DeRhamPerOrbit) {
  EXPECT_EQ(de_rham_dims(at({0, 0, 0, 0})), (Dims{1, 2, 4, 2, 1}));
  for (const auto &k : {lv({0, 0, 1, 0}), lv({0, 0, 0, -1}), lv({0, 0, 2, 3})})
    EXPECT_EQ(de_rham_dims(OrbitModel(a, orbit_of(a, k))), (Dims{0, 0, 1, 0, 1})) << to_string(k);
}

TEST_F(Shear4, ZeroModeTables) {
  OrbitModel x = at({0, 0, 0, 0});
  EXPECT_EQ(dolbeault_dims(x), all_ones_except_middle(2));
  EXPECT_EQ(bott_chern_dims(x), all_ones_except_middle(2));
  EXPECT_EQ(aeppli_dims(x), all_ones_except_middle(2));
}

TEST_F(Shear4, NonzeroModeTables) {
  for (const auto &k : {lv({0, 0, 1, 0}), lv({0, 0, -1, 2}), lv({0, 0, 0, 1})}) {
    OrbitModel x(a, orbit_of(a, k), nullptr, &c);
    using Support = std::map<std::pair<int, int>, std::size_t>;
    EXPECT_EQ(support_of(dolbeault_dims(x)), (Support{{{0, 2}, 1}, {{2, 2}, 1}})) << to_string(k);
    EXPECT_EQ(support_of(bott_chern_dims(x)), (Support{{{2, 1}, 1}, {{1, 2}, 1}, {{2, 2}, 1}})) << to_string(k);
    EXPECT_EQ(support_of(aeppli_dims(x)), (Support{{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 1}, {{2, 2}, 1}}))
        << to_string(k);
  }
}

TEST_F(Shear4, InequalitiesPerOrbit) {
  for (const auto &o : enumerate_orbits(a, 2)) {
    OrbitModel x(a, o, nullptr, &c);
    auto ineq = inequality_check(x);
    EXPECT_EQ(ineq.size(), 9u + 5u);
    for (const auto &q : ineq)
      EXPECT_TRUE(q.holds()) << q.name << " " << q.location;
  }
  auto ineq = inequality_check(at({0, 0, 1, 0}));
  auto it = std::find_if(ineq.begin(), ineq.end(), [](const Inequality &q) {
    return q.name == "dolbeault<=bottChern+aeppli" && q.location == "(1,1)";
  });
  ASSERT_NE(it, ineq.end());
  EXPECT_EQ(it->lhs, 0u);
  EXPECT_EQ(it->rhs, 1u);
}

TEST_F(Shear4, TrivialOrbitHasSlack) {
  for (const auto &q : inequality_check(at({0, 0, 0, 0}))) {
    EXPECT_TRUE(q.holds());
    if (q.name == "dolbeault<=bottChern+aeppli") {
      EXPECT_EQ(q.rhs, 2 * q.lhs);
    }
  }
}

TEST_F(Shear4, BottChernAeppliAndSerreDualitiesFail) {
  std::map<Theory, DimTable> totals;
  for (const auto &o : enumerate_orbits(a, 1)) {
    OrbitModel x(a, o, nullptr, &c);
    for (const auto &[t, table] : compute_available(x))
      for (const auto &[g, d] : table)
        totals[t][g] += d;
  }
  auto report = duality_report(totals, 4);
  auto find = [&](const std::string &pair, Grading g) {
    return *std::find_if(report.begin(), report.end(),
                         [&](const DualityFinding &f) { return f.pair == pair && f.left == g; });
  };
  DualityFinding bca = find("bottChern<->aeppli", Grading::bidegree(0, 0));
  EXPECT_FALSE(bca.expected_to_hold);
  EXPECT_EQ(bca.right, Grading::bidegree(2, 2));
  EXPECT_EQ(bca.left_dim, 1u);
  EXPECT_EQ(bca.right_dim, 9u);
  DualityFinding serre = find("serre:dolbeault", Grading::bidegree(0, 0));
  EXPECT_FALSE(serre.equal());
  EXPECT_EQ(serre.right_dim, 9u);
}

TEST(Grading, TextAndOrder) {
  EXPECT_EQ(Grading::degree(3).str(), "3");
  EXPECT_EQ(Grading::bidegree(1, 2).str(), "(1,2)");
  EXPECT_LT(Grading::bidegree(0, 2), Grading::bidegree(1, 0));
  EXPECT_EQ(gradings_for(Theory::Aeppli, 4).size(), 9u);
  EXPECT_EQ(gradings_for(Theory::DeRham, 4).size(), 5u);
}

TEST(Theory, NamesRoundTrip) {
  for (Theory t : all_theories)
    EXPECT_EQ(parse_theory(to_string(t)), t);
  EXPECT_FALSE(parse_theory("hodge").has_value());
}
