#include "folcoh/dense.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace folcoh;
using namespace folcoh::testing;

namespace {

using Samples = std::vector<std::size_t>;

Samples values(const DimensionProfile &p) {
  Samples out;
  for (const auto &s : p.samples)
    out.push_back(s.second);
  return out;
}

Samples formula(long max_n, std::size_t (*f)(long)) {
  Samples out;
  for (long n = 0; n <= max_n; ++n)
    out.push_back(f(n));
  return out;
}

const DimensionProfile &profile(const std::vector<DimensionProfile> &ps, Theory t, Grading g) {
  const DimensionProfile *p = find_profile(ps, t, g);
  if (!p)
    throw std::logic_error("missing profile");
  return *p;
}

} // namespace

TEST(ClassifyGrowth, Examples) {
  Verdict flat = classify_growth(Samples{1, 1, 1, 1}, 3);
  EXPECT_TRUE(flat.stabilized);
  EXPECT_EQ(flat.value, 1u);

  Verdict line = classify_growth(Samples{1, 3, 5, 7}, 3);
  EXPECT_FALSE(line.stabilized);
  EXPECT_EQ(line.differences, (std::vector<long long>{2, 2, 2}));

  Verdict square = classify_growth(Samples{9, 25, 49}, 3);
  EXPECT_FALSE(square.stabilized);
  EXPECT_EQ(square.differences, (std::vector<long long>{16, 24}));
}

TEST(ClassifyGrowth, WindowLooksOnlyAtTheTail) {
  Verdict late = classify_growth(Samples{1, 4, 6, 6, 6}, 3);
  EXPECT_TRUE(late.stabilized);
  EXPECT_EQ(late.value, 6u);
  EXPECT_FALSE(classify_growth(Samples{1, 4, 6, 6, 6}, 4).stabilized);
}

TEST(ClassifyGrowth, InsufficientSamples) {
  try {
    classify_growth(Samples{1, 1}, 3);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientSamples);
  }
  EXPECT_THROW(classify_growth(Samples{1}, 0), Error);
}

TEST(Aggregate, ShearTwoProfiles) {
  auto a = shear2();
  auto ps = aggregate(a, symplectic_only(a), 6, symplectic_theories());
  auto odd = [](long n) { return static_cast<std::size_t>(2 * n + 1); };
  auto one = [](long) { return std::size_t{1}; };
  EXPECT_EQ(values(profile(ps, Theory::DeRham, Grading::degree(0))), formula(6, one));
  EXPECT_EQ(values(profile(ps, Theory::DeRham, Grading::degree(1))), formula(6, one));
  EXPECT_EQ(values(profile(ps, Theory::DeRham, Grading::degree(2))), formula(6, odd));
  EXPECT_EQ(values(profile(ps, Theory::DPlusDLambda, Grading::degree(1))), formula(6, odd));
  EXPECT_EQ(values(profile(ps, Theory::DDLambda, Grading::degree(1))), formula(6, one));
  EXPECT_EQ(values(profile(ps, Theory::DDLambda, Grading::degree(2))), formula(6, odd));

  const auto &top = profile(ps, Theory::DeRham, Grading::degree(2));
  EXPECT_EQ(top.samples.front(), (std::pair<long, std::size_t>{0, 1}));
  EXPECT_FALSE(top.verdict.stabilized);
  EXPECT_EQ(top.verdict.differences, (std::vector<long long>(6, 2)));
  EXPECT_TRUE(profile(ps, Theory::DeRham, Grading::degree(0)).verdict.stabilized);
}

TEST(Aggregate, ShearFourDeRham) {
  auto a = shear4();
  auto ps = aggregate(a, complex_only(a), 4, {Theory::DeRham});
  auto sq = [](long n) { return static_cast<std::size_t>((2 * n + 1) * (2 * n + 1)); };
  auto sq3 = [](long n) { return static_cast<std::size_t>((2 * n + 1) * (2 * n + 1) + 3); };
  auto two = [](long) { return std::size_t{2}; };
  EXPECT_EQ(values(profile(ps, Theory::DeRham, Grading::degree(2))), formula(4, sq3));
  EXPECT_EQ(values(profile(ps, Theory::DeRham, Grading::degree(3))), formula(4, two));
  EXPECT_EQ(values(profile(ps, Theory::DeRham, Grading::degree(4))), formula(4, sq));
  const auto &three = profile(ps, Theory::DeRham, Grading::degree(3));
  EXPECT_TRUE(three.verdict.stabilized);
  EXPECT_EQ(three.verdict.value, 2u);
}

TEST(Aggregate, ProfilesAreMonotone) {
  for (const auto &[a, s, ts] : {std::tuple{shear2(), symplectic_only(shear2()), symplectic_theories()},
                                 std::tuple{shear4(), complex_only(shear4()), complex_theories()}}) {
    for (const auto &p : aggregate(a, s, 3, ts))
      for (std::size_t i = 1; i < p.samples.size(); ++i)
        EXPECT_LE(p.samples[i - 1].second, p.samples[i].second);
  }
}

TEST(Aggregate, StructureMissing) {
  try {
    aggregate(shear2(), Structures{}, 2, {Theory::DDLambda});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::StructureMissing);
  }
  EXPECT_THROW(aggregate(shear4(), Structures{}, 2, {Theory::Aeppli}), Error);
}

TEST(Orientability, Examples) {
  auto a = shear2();
  auto ps = aggregate(a, Structures{}, 4, {Theory::DeRham});
  EXPECT_FALSE(orientability_indicator(ps, 2).orientable);

  auto b = shear4();
  EXPECT_FALSE(orientability_indicator(aggregate(b, Structures{}, 3, {Theory::DeRham}), 4).orientable);

  // identity: every mode is fixed, nonzero modes are acyclic
  auto id = mat({{1, 0}, {0, 1}});
  auto idp = aggregate(id, Structures{}, 3, {Theory::DeRham});
  EXPECT_TRUE(orientability_indicator(idp, 2).orientable);
  EXPECT_EQ(values(profile(idp, Theory::DeRham, Grading::degree(1))), (Samples{2, 2, 2, 2}));

  // hyperbolic: only the zero mode is periodic
  auto hyp = mat({{2, 1}, {1, 1}});
  auto hp = aggregate(hyp, Structures{}, 3, {Theory::DeRham});
  auto ind = orientability_indicator(hp, 2);
  EXPECT_TRUE(ind.orientable);
  EXPECT_NE(ind.note.find("not a proof"), std::string::npos);

  EXPECT_THROW(orientability_indicator({}, 2), Error);
}

TEST(Lefschetz, ShearTwoIsEpimorphic) {
  auto a = shear2();
  SymplecticData s = check_symplectic(a);
  for (long n = 0; n <= 4; ++n) {
    auto report = lefschetz_report(a, s, n);
    ASSERT_EQ(report.size(), 2u);
    for (const auto &line : report) {
      EXPECT_TRUE(line.epimorphism);
      EXPECT_EQ(line.rank, line.target);
      EXPECT_EQ(line.target, static_cast<std::size_t>(2 * n + 1));
    }
  }
  auto only_zero = lefschetz_report(a, s, 0);
  EXPECT_EQ(only_zero[1].rank, 1u);
  EXPECT_EQ(only_zero[1].target, 1u);
}

TEST(Lefschetz, RanksNeverExceedTargets) {
  auto a = mat({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  SymplecticData s = check_symplectic(a);
  std::vector<LefschetzLine> previous;
  for (long n = 0; n <= 2; ++n) {
    auto report = lefschetz_report(a, s, n);
    ASSERT_EQ(report.size(), 3u);
    for (std::size_t i = 0; i < report.size(); ++i) {
      EXPECT_LE(report[i].rank, report[i].target);
      EXPECT_EQ(report[i].epimorphism, report[i].rank == report[i].target);
      if (!previous.empty()) {
        EXPECT_GE(report[i].rank, previous[i].rank);
        EXPECT_GE(report[i].target, previous[i].target);
      }
    }
    // omega^0 is the identity on the middle degree
    EXPECT_TRUE(report[0].epimorphism);
    previous = report;
  }
}

TEST(DenseOracle, MatchesOrbitTotals) {
  const std::vector<std::tuple<UnimodularMatrix, Structures, std::vector<Theory>>> cases = {
      {shear2(), symplectic_only(shear2()), symplectic_theories()},
      {shear4(), complex_only(shear4()), complex_theories()},
      {rotation2(), symplectic_only(rotation2()), symplectic_theories()}};
  for (const auto &[a, st, ts] : cases) {
    const auto results = survey(a, st, 2, ts);
    for (long n = 0; n <= 2; ++n) {
      DenseModel dense(a, n, st.symplectic ? &*st.symplectic : nullptr, st.complex ? &*st.complex : nullptr);
      const auto totals = totals_at(results, n);
      for (Theory t : ts)
        EXPECT_EQ(dense.compute(t), totals.at(t)) << to_string(t) << " N=" << n;
      for (int k = 0; k <= static_cast<int>(a.n()); ++k) {
        std::size_t fibers = 0;
        for (const auto &r : results)
          if (r.radius <= n)
            fibers += r.fiber_dims[static_cast<std::size_t>(k)];
        EXPECT_EQ(dense.invariant_dim(k), fibers) << "degree " << k; // one fiber per orbit
      }
    }
  }
}

TEST(DenseOracle, StructureMissing) {
  DenseModel dense(shear2(), 1);
  EXPECT_THROW(dense.compute(Theory::DLambda), Error);
  EXPECT_EQ(dense.modes().size(), 3u);
}
