#include <gtest/gtest.h>

#include "mctool/convolution.hpp"
#include "population.hpp"

using namespace mctool;

namespace {

const CycNum z3 = root_of_unity(3, 1);
const CycNum z3sq = root_of_unity(3, 2);

MonodromyTuple rank_one(std::initializer_list<CycNum> xs) {
  std::vector<Mat> es;
  for (const auto& x : xs) es.push_back(Mat::scalar(1, x));
  return MonodromyTuple(es);
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

JordanData jd(std::initializer_list<std::pair<CycNum, std::size_t>> blocks) {
  std::vector<JordanBlock> bs;
  for (const auto& [e, l] : blocks) bs.push_back({e, l});
  return JordanData(bs);
}

const MonodromyTuple& micro() {
  static const MonodromyTuple t = rank_one({CycNum(-1), CycNum(-1)});
  return t;
}

}  // namespace

TEST(FreeWord, ReductionAndText) {
  FreeWord w = FreeWord::parse("a1 a2 a2^-1 a3");
  EXPECT_EQ(w.to_string(), "a1 a3");
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(FreeWord().to_string(), "1");
  EXPECT_EQ(commutator(FreeWord::generator(1), FreeWord::generator(2)).to_string(), "a1^-1 a2^-1 a1 a2");
  expect_error(ErrorKind::ParseError, [] { (void)FreeWord::parse("b1"); });
  expect_error(ErrorKind::ParseError, [] { (void)FreeWord::parse("a1^2"); });
}

TEST(BraidAuto, Examples) {
  BraidAuto b = braid_auto(1, 1, 1, 1);
  EXPECT_EQ(b.images[0].to_string(), "a2^-1 a1 a2");
  // (a1 a2)^-1 a2 (a1 a2)
  EXPECT_EQ(b.images[1].to_string(), "a2^-1 a1^-1 a2 a1 a2");
  BraidAuto c = braid_auto(2, 1, 1, 1);
  FreeWord comm = commutator(FreeWord::generator(1), FreeWord::generator(3));
  EXPECT_EQ(c.images[1], comm.inverse() * FreeWord::generator(2) * comm);
  expect_error(ErrorKind::IndexOutOfRange, [] { (void)braid_auto(2, 1, 3, 1); });
  expect_error(ErrorKind::IndexOutOfRange, [] { (void)braid_auto(2, 1, 1, 2); });
}

TEST(BraidAuto, FixesTheFullProduct) {
  for (std::size_t p = 1; p <= 5; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      FreeWord prod;
      for (std::size_t k = 1; k <= p + q; ++k) prod = prod * FreeWord::generator(k);
      for (std::size_t i = 1; i <= p; ++i) {
        for (std::size_t j = 1; j <= q; ++j) EXPECT_EQ(braid_auto(p, q, i, j).apply(prod), prod);
      }
    }
  }
}

TEST(EvaluateCocycle, Examples) {
  ParabolicCocycleSpace space(micro(), kummer(CycNum(-1)));
  Vec vals{CycNum(5), CycNum(7), CycNum(11)};
  EXPECT_EQ(space.evaluate(vals, FreeWord::parse("a1")), Vec{CycNum(5)});
  EXPECT_EQ(space.evaluate(vals, FreeWord::parse("a1 a1^-1")), Vec{CycNum(0)});
  EXPECT_EQ(space.evaluate(vals, FreeWord()), Vec{CycNum(0)});
  // d([a1, a3]) = d(a1)(l - 1) + d(a3)(1 - A_1) with A_1 = l = -1
  Vec c = space.evaluate(vals, commutator(FreeWord::generator(1), FreeWord::generator(3)));
  EXPECT_EQ(c, Vec{CycNum(5) * CycNum(-2) + CycNum(11) * CycNum(2)});
  EXPECT_EQ(space.twisted_evaluation(vals)[0], c[0]);
}

TEST(EvaluateCocycle, CocycleRelationOnWords) {
  testkit::Population pop(201);
  for (int t = 0; t < 5; ++t) {
    auto smp = pop.next();
    ParabolicCocycleSpace space(smp.tuple, pop.scalars(smp.order, 2));
    const std::size_t m = space.p() + space.q(), n = space.fiber_rank();
    Vec vals;
    for (std::size_t k = 0; k < m * n; ++k) vals.push_back(pop.gen().scalar(smp.order, 3));
    FreeWord a = FreeWord::parse("a1 a2^-1 a3"), b = FreeWord::parse("a2 a1^-1");
    // rho(b) from the fiber tuple
    Mat rb = space.fiber().entry(1) * inverse(space.fiber().entry(0));
    Vec lhs = space.evaluate(vals, a * b);
    Vec rhs = space.evaluate(vals, a) * rb;
    Vec eb = space.evaluate(vals, b);
    for (std::size_t x = 0; x < n; ++x) rhs[x] += eb[x];
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(McBlocks, Examples) {
  auto d = mc_blocks(micro(), CycNum(-1));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], Mat::from_ints({{1, -2}, {0, 1}}));
  EXPECT_EQ(d[1], Mat::from_ints({{1, 0}, {2, 1}}));
  MonodromyTuple t({Mat::from_ints({{0, 1}, {1, 0}}), Mat::diagonal({z3, z3sq})});
  auto e = mc_blocks(t, z3);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(e[i].block(2 * i, 2 * i, 2, 2), z3 * t.entry(i));
  auto single = mc_blocks(rank_one({z3}), CycNum(-1));
  EXPECT_EQ(single[0], Mat::scalar(1, -z3));
  expect_error(ErrorKind::LambdaIsOne, [] { (void)mc_blocks(micro(), CycNum(1)); });
}

TEST(McSpace, Examples) {
  EXPECT_EQ(mc_space(micro(), CycNum(-1)).dim(), 2u);
  Subspace g = mc_space(rank_one({z3, CycNum(1), z3}), z3sq);
  EXPECT_EQ(g.dim(), 2u);
  // A_2 = 1 kills the second block of K
  for (std::size_t b = 0; b < g.dim(); ++b) EXPECT_TRUE(g.basis()(b, 1).is_zero());
  expect_error(ErrorKind::PropertyTFailed, [] { (void)mc_space(rank_one({z3, CycNum(1)}), z3); });
  expect_error(ErrorKind::LambdaIsOne, [] { (void)mc_space(micro(), CycNum(1)); });
}

TEST(Mc, WorkedExample) {
  MonodromyTuple out = mc(micro(), CycNum(-1));
  EXPECT_EQ(out.entry(0), Mat::from_ints({{1, -2}, {0, 1}}));
  EXPECT_EQ(out.entry(1), Mat::from_ints({{1, 0}, {2, 1}}));
  EXPECT_EQ(out.infinity_entry(), Mat::from_ints({{1, 2}, {-2, -3}}));
}

TEST(Mc, RankOneInputGivesRankTwo) {
  CycNum a = root_of_unity(5, 1), b = root_of_unity(5, 2), l = root_of_unity(5, 4);
  ASSERT_FALSE((a * b * l).is_one());
  MonodromyTuple out = mc(rank_one({a, b}), l);
  EXPECT_EQ(out.rank(), 2u);
  EXPECT_EQ(algebra_closure_dim(out.entries()), 4u);
}

TEST(ConvolutionRank, Examples) {
  EXPECT_EQ(convolution_rank(micro(), kummer(CycNum(-1))), 2);
  MonodromyTuple t({Mat::from_ints({{0, 1}, {1, 0}}), Mat::diagonal({z3, z3sq})});
  CycNum l = root_of_unity(4, 1);
  long q1 = static_cast<long>(2 * 2 - fixed_dim(t.entry(0)) - fixed_dim(t.entry(1)) -
                              fixed_dim(l.inv() * t.infinity_entry()));
  EXPECT_EQ(convolution_rank(t, kummer(l)), q1);
  expect_error(ErrorKind::HasGlobalSections,
               [] { (void)convolution_rank(MonodromyTuple({Mat::identity(2)}), kummer(CycNum(-1))); });
}

TEST(ConvolveRankOne, MatchesWorkedExample) {
  MonodromyTuple out = convolve_rank_one(micro(), kummer(CycNum(-1)));
  EXPECT_EQ(out, mc(micro(), CycNum(-1)));
  EXPECT_EQ(out.infinity_entry(), Mat::from_ints({{1, 2}, {-2, -3}}));
  expect_error(ErrorKind::LambdaIsOne, [] { (void)convolve_rank_one(micro(), RankOneTuple({CycNum(-1), CycNum(1)})); });
  expect_error(ErrorKind::PropertyTFailed, [] { (void)convolve_rank_one(rank_one({CycNum(-1), CycNum(1)}), kummer(z3)); });
}

TEST(ConvolveRankOne, TwoScalars) {
  MonodromyTuple t({Mat::from_ints({{0, 1}, {1, 0}}), Mat::diagonal({z3, z3sq}), Mat::scalar(2, CycNum(-1))});
  RankOneTuple r({root_of_unity(4, 1), root_of_unity(4, 3)});
  MonodromyTuple out = convolve_rank_one(t, r);
  EXPECT_EQ(static_cast<long>(out.rank()), convolution_rank(t, r));
  EXPECT_EQ(out.puncture_count(), 6u);
  // each D_{i,j} - 1 has the rank of D_i - 1 from MC with l_j
  for (std::size_t j = 0; j < 2; ++j) {
    MonodromyTuple m = mc(t, r.scalar(j));
    for (std::size_t i = 0; i < 3; ++i) {
      const Mat& d = out.entry(j * 3 + i);
      EXPECT_EQ(rank(d - Mat::identity(d.rows(), d.order())),
                rank(m.entry(i) - Mat::identity(m.rank(), m.order())));
    }
  }
}

TEST(TwistedEvaluation, Injective) {
  ParabolicCocycleSpace space(micro(), kummer(CycNum(-1)));
  Mat tau = twisted_evaluation(space);
  EXPECT_EQ(rank(tau), space.dim());
  // coboundaries map to zero
  for (std::size_t b = 0; b < space.coboundaries().dim(); ++b) {
    Vec v = space.twisted_evaluation(space.coboundaries().basis().row(b));
    for (const auto& x : v) EXPECT_TRUE(x.is_zero());
  }
  Vec zero(3, CycNum(0));
  for (const auto& x : space.twisted_evaluation(zero)) EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(space.image(), mc_space(micro(), CycNum(-1)));
}

TEST(Predictors, Finite) {
  EXPECT_EQ(*predict_jordan_finite(jd({{CycNum(-1), 1}}), CycNum(-1), 2), jd({{CycNum(1), 2}}));
  EXPECT_EQ(*predict_jordan_finite(jd({{CycNum(1), 2}}), z3, 3), jd({{z3, 1}, {CycNum(1), 1}, {CycNum(1), 1}}));
  CycNum z5 = root_of_unity(5, 1);
  EXPECT_EQ(*predict_jordan_finite(jd({{z5, 1}}), z3, 4),
            jd({{z5 * z3, 1}, {CycNum(1), 1}, {CycNum(1), 1}, {CycNum(1), 1}}));
  EXPECT_FALSE(predict_jordan_finite(jd({{z5, 3}}), z3, 2).has_value());
}

TEST(Predictors, Infinity) {
  EXPECT_EQ(*predict_jordan_infinity(jd({{CycNum(1), 1}}), CycNum(-1), 2), jd({{CycNum(-1), 2}}));
  EXPECT_EQ(*predict_jordan_infinity(jd({{z3, 1}}), z3, 1), jd({{z3sq, 1}}));
  EXPECT_FALSE(predict_jordan_infinity(jd({{CycNum(1), 3}}), z3, 2).has_value());
}

TEST(ConvolutionProperty, EngineMatchesClosedForm) {
  testkit::Population pop(202);
  for (int t = 0; t < 20; ++t) {
    auto smp = pop.next();
    CycNum l = pop.nontrivial_root(smp.order);
    EXPECT_EQ(convolve_rank_one(smp.tuple, kummer(l)), mc(smp.tuple, l)) << smp.origin;
  }
}

TEST(ConvolutionProperty, StabilityAndIrreducibility) {
  testkit::Population pop(203);
  for (int t = 0; t < 15; ++t) {
    auto smp = pop.next();
    CycNum l = pop.nontrivial_root(smp.order);
    McSpaces s = mc_subspaces(smp.tuple, l);
    for (const auto& d : mc_blocks(smp.tuple, l)) {
      for (std::size_t b = 0; b < s.w.dim(); ++b) EXPECT_TRUE(s.w.contains(s.w.basis().row(b) * d));
    }
    MonodromyTuple out = mc(smp.tuple, l);
    if (out.rank() > 0) EXPECT_EQ(algebra_closure_dim(out.entries()), out.rank() * out.rank());
  }
}

TEST(ConvolutionProperty, JordanPredictions) {
  testkit::Population pop(204);
  for (int t = 0; t < 15; ++t) {
    auto smp = pop.next();
    RankOneTuple r = pop.scalars(smp.order, static_cast<std::size_t>(pop.gen().integer(1, 2)));
    MonodromyTuple out = convolve_rank_one(smp.tuple, r);
    const std::size_t p = smp.tuple.puncture_count();
    for (std::size_t j = 0; j < r.size(); ++j) {
      for (std::size_t i = 0; i < p; ++i) {
        auto pred = predict_jordan_finite(jordan_data(smp.tuple.entry(i)), r.scalar(j), out.rank());
        if (pred) EXPECT_EQ(jordan_data(out.entry(j * p + i)), *pred);
      }
    }
    if (r.size() == 1) {
      auto pred = predict_jordan_infinity(jordan_data(smp.tuple.infinity_entry()), r.scalar(0), out.rank());
      if (pred) EXPECT_EQ(jordan_data(out.infinity_entry()), *pred);
    }
  }
}
