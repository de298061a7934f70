#include <gtest/gtest.h>

#include <vector>

#include "mctool/linalg.hpp"
#include "support.hpp"

using namespace mctool;
using mctool::testkit::Gen;

namespace {

const CycNum z3 = root_of_unity(3, 1);

Vec ints(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

JordanData jd(std::initializer_list<std::pair<CycNum, std::size_t>> blocks) {
  std::vector<JordanBlock> bs;
  for (const auto& [e, l] : blocks) bs.push_back({e, l});
  return JordanData(bs);
}

}  // namespace

TEST(Rref, Examples) {
  RrefResult r = rref(Mat::identity(3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.reduced, Mat::identity(3));
  EXPECT_EQ(rref(Mat(2, 2)).rank, 0u);
  // z^2 * (1, z) = (z^2, 1), so [[1, z], [z^2, -1]] has full rank (det = -2)
  // while [[1, z], [z^2, 1]] has rank 1.
  Mat m = Mat::from_rows({{CycNum(1), z3}, {z3 * z3, CycNum(-1)}});
  EXPECT_EQ(det(m), CycNum(-2));
  EXPECT_EQ(rank(m), 2u);
  Mat m1 = Mat::from_rows({{CycNum(1), z3}, {z3 * z3, CycNum(1)}});
  EXPECT_EQ(rank(m1), 1u);
  EXPECT_EQ(rref(m1).reduced.row(0), (Vec{CycNum(1), z3}));
}

TEST(Kernel, Examples) {
  Mat a = Mat::diagonal({z3, CycNum::one(3)}) - Mat::identity(2, 3);
  Subspace k = kernel_basis(a);
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(Vec{CycNum(0), CycNum(1)}));
  EXPECT_EQ(image_basis(Mat(2, 2)).dim(), 0u);
  Mat swap = Mat::from_ints({{0, 1}, {1, 0}}) - Mat::identity(2);
  Subspace ks = kernel_basis(swap);
  EXPECT_EQ(ks.dim(), 1u);
  EXPECT_TRUE(ks.contains(ints({1, 1})));
}

TEST(Intersect, Examples) {
  Subspace u = Subspace::span(Mat::from_ints({{1, 0, 0}, {0, 1, 0}}));
  Subspace w = Subspace::span(Mat::from_ints({{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(intersect(u, u), u);
  Subspace i = intersect(u, w);
  EXPECT_EQ(i, Subspace::span(Mat::from_ints({{0, 1, 0}})));
  Subspace l1 = Subspace::span(Mat::from_ints({{1, 0}})), l2 = Subspace::span(Mat::from_ints({{1, 1}}));
  EXPECT_EQ(intersect(l1, l2).dim(), 0u);
  try {
    (void)intersect(u, l1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbientMismatch);
  }
}

TEST(Subspace, Coordinates) {
  Subspace s = Subspace::span(Mat::from_ints({{1, 2, 3}, {0, 1, 1}}));
  Vec v = ints({2, 5, 7});
  auto c = s.coordinates(v);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c * s.basis(), v);
  EXPECT_FALSE(s.coordinates(ints({0, 0, 1})).has_value());
}

TEST(Determinant, InverseAndPower) {
  Mat m = Mat::from_ints({{2, 1}, {1, 1}});
  EXPECT_EQ(det(m), CycNum(1));
  EXPECT_EQ(inverse(m), Mat::from_ints({{1, -1}, {-1, 2}}));
  EXPECT_EQ(mat_pow(m, -1), inverse(m));
  EXPECT_EQ(mat_pow(m, 3), m * m * m);
  try {
    (void)inverse(Mat::from_ints({{1, 2}, {2, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
  }
}

TEST(Jordan, Examples) {
  EXPECT_EQ(jordan_data(Mat::identity(3), {CycNum(1)}), jd({{CycNum(1), 1}, {CycNum(1), 1}, {CycNum(1), 1}}));
  EXPECT_EQ(jordan_data(Mat::from_ints({{1, 2}, {0, 1}})), jd({{CycNum(1), 2}}));
  // oracle: trace -2, det 1 and M + 1 has rank 1
  Mat m = Mat::from_ints({{1, 2}, {-2, -3}});
  EXPECT_EQ(rank(m + Mat::identity(2)), 1u);
  EXPECT_EQ(jordan_data(m), jd({{CycNum(-1), 2}}));
}

TEST(Jordan, OutsideCandidates) {
  try {
    (void)jordan_data(Mat::from_ints({{1, 1}, {1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EigenvalueOutsideCandidates);
  }
  // rational diagonal entries are candidates too
  EXPECT_EQ(jordan_data(Mat::from_ints({{2, 1}, {0, 2}})), jd({{CycNum(2), 2}}));
}

TEST(Jordan, EqualityAcrossOrders) {
  EXPECT_EQ(jd({{z3, 1}}), jd({{z3.embed(12), 1}}));
  EXPECT_NE(jd({{z3, 2}}), jd({{z3, 1}, {z3, 1}}));
}

TEST(Kronecker, Examples) {
  CycNum lam = root_of_unity(5, 2);
  Mat b = Mat::from_ints({{1, 2}, {3, 4}});
  EXPECT_EQ(kronecker(Mat::scalar(1, lam), b), lam * b);
  EXPECT_EQ(kronecker(Mat::identity(2), Mat::identity(3)), Mat::identity(6));
  Mat k = kronecker(Mat::diagonal({z3, z3 * z3}), Mat::scalar(2, CycNum(-1)));
  EXPECT_EQ(jordan_data(k), jd({{-z3, 1}, {-z3, 1}, {-(z3 * z3), 1}, {-(z3 * z3), 1}}));
  EXPECT_EQ(direct_sum(Mat::identity(1), Mat::identity(2)), Mat::identity(3));
}

TEST(ExteriorCube, Examples) {
  EXPECT_EQ(exterior_cube(Mat::identity(7)), Mat::identity(35));
  CycNum c = root_of_unity(4, 1) + CycNum(2);
  EXPECT_EQ(exterior_cube(Mat::scalar(4, c)), Mat::scalar(4, c * c * c));
  Gen g(5);
  for (int t = 0; t < 5; ++t) {
    Mat a = g.matrix(4, 4, 3);
    CycNum d = det(a);
    EXPECT_EQ(det(exterior_cube(a)), d * d * d);
  }
  try {
    (void)exterior_cube(Mat::identity(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionTooSmall);
  }
}

TEST(ExteriorCube, BasisOrder) {
  // e_0^e_1^e_2 is the first basis vector, e_1^e_2^e_3 the last for n = 4
  Mat p = Mat::from_ints({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}});
  Mat e = exterior_cube(p);
  // e_0 -> e_1, e_1 -> e_2, e_2 -> e_3: (012) -> (123)
  EXPECT_EQ(e(0, 3), CycNum(1));
}

TEST(Conjugator, Examples) {
  std::vector<Mat> s{Mat::from_ints({{1, 2}, {3, 4}})};
  auto x = simultaneous_conjugator(s, s);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x * s[0], s[0] * *x);

  std::vector<Mat> a{Mat::diagonal(ints({1, 2}))}, b{Mat::diagonal(ints({2, 1}))};
  auto sw = simultaneous_conjugator(a, b);
  ASSERT_TRUE(sw.has_value());
  EXPECT_EQ((*sw) * a[0] * inverse(*sw), b[0]);
  EXPECT_EQ((*sw)(0, 0), CycNum(0));
  EXPECT_EQ((*sw)(1, 1), CycNum(0));

  std::vector<Mat> u{Mat::from_ints({{1, 1}, {0, 1}})}, one{Mat::identity(2)};
  EXPECT_FALSE(simultaneous_conjugator(u, one).has_value());
}

TEST(BilinearForms, Examples) {
  std::vector<Mat> id{Mat::identity(2)};
  BilinearFormInfo all = invariant_bilinear_forms(id);
  EXPECT_EQ(all.basis.size(), 4u);
  EXPECT_TRUE(all.has_nondegenerate_symmetric);
  EXPECT_TRUE(all.has_nondegenerate_alternating);

  std::vector<Mat> refl{Mat::from_ints({{0, 1}, {1, 0}})};
  EXPECT_TRUE(invariant_bilinear_forms(refl).has_nondegenerate_symmetric);

  std::vector<Mat> sl2{Mat::from_ints({{1, 1}, {0, 1}}), Mat::from_ints({{1, 0}, {1, 1}})};
  BilinearFormInfo f = invariant_bilinear_forms(sl2);
  ASSERT_EQ(f.basis.size(), 1u);
  EXPECT_FALSE(f.has_nondegenerate_symmetric);
  EXPECT_TRUE(f.has_nondegenerate_alternating);
  EXPECT_EQ(f.basis[0], f.basis[0](0, 1) * Mat::from_ints({{0, 1}, {-1, 0}}));
}

TEST(AlgebraClosure, Examples) {
  std::vector<Mat> id{Mat::identity(2)};
  EXPECT_EQ(algebra_closure_dim(id), 1u);
  std::vector<Mat> d{Mat::diagonal(ints({1, -1}))};
  EXPECT_EQ(algebra_closure_dim(d), 2u);
  std::vector<Mat> m2{Mat::from_ints({{0, 1}, {1, 0}}), Mat::diagonal({z3, z3 * z3})};
  EXPECT_EQ(algebra_closure_dim(m2), 4u);
}

TEST(FixedSpace, Examples) {
  std::vector<Mat> id{Mat::identity(3)};
  EXPECT_EQ(common_fixed_space(id).dim(), 3u);
  std::vector<Mat> d{Mat::diagonal({z3, CycNum(1)})};
  Subspace f = common_fixed_space(d);
  EXPECT_EQ(f.dim(), 1u);
  EXPECT_TRUE(f.contains(Vec{CycNum(0), CycNum(1)}));
  std::vector<Mat> two{Mat::from_ints({{0, 1}, {1, 0}}), Mat::scalar(2, CycNum(-1))};
  EXPECT_EQ(common_fixed_space(two).dim(), 0u);
}

TEST(LinalgProperty, RankNullity) {
  Gen g(21);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = static_cast<std::size_t>(g.integer(1, 5)), c = static_cast<std::size_t>(g.integer(1, 5));
    Mat m = g.matrix(r, c, 12);
    Subspace k = kernel_basis(m);
    EXPECT_EQ(k.dim() + rank(m), r);
    EXPECT_TRUE((k.basis() * m).is_zero() || k.dim() == 0);
    Mat rk = right_kernel(m);
    EXPECT_EQ(rk.cols() + rank(m), c);
    if (rk.cols()) EXPECT_TRUE((m * rk).is_zero());
  }
}

TEST(LinalgProperty, JordanConjugationInvariant) {
  Gen g(22);
  std::vector<Mat> samples{Mat::from_ints({{1, 2}, {-2, -3}}), Mat::diagonal({z3, z3, CycNum(1)}),
                           direct_sum(Mat::from_ints({{1, 1}, {0, 1}}), Mat::scalar(1, z3))};
  for (const auto& m : samples) {
    for (int t = 0; t < 5; ++t) {
      Mat p = g.invertible(m.rows());
      EXPECT_EQ(jordan_data(p * m * inverse(p)), jordan_data(m));
    }
  }
}

TEST(LinalgProperty, ExteriorCubeFunctorial) {
  Gen g(23);
  for (int t = 0; t < 5; ++t) {
    Mat a = g.matrix(4, 4, 4), b = g.matrix(4, 4, 4);
    EXPECT_EQ(exterior_cube(a * b), exterior_cube(a) * exterior_cube(b));
  }
}

TEST(LinalgProperty, KroneckerMixedProduct) {
  Gen g(24);
  for (int t = 0; t < 5; ++t) {
    Mat a = g.matrix(2, 2, 3), b = g.matrix(3, 3, 3), c = g.matrix(2, 2, 3), d = g.matrix(3, 3, 3);
    EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
  }
}

TEST(LinalgProperty, ConjugatorConjugates) {
  Gen g(25);
  for (int t = 0; t < 10; ++t) {
    std::vector<Mat> s{g.matrix(3, 3, 3), g.matrix(3, 3, 3)};
    Mat p = g.invertible(3);
    std::vector<Mat> tt{p * s[0] * inverse(p), p * s[1] * inverse(p)};
    auto x = simultaneous_conjugator(s, tt);
    ASSERT_TRUE(x.has_value());
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(*x * s[i] * inverse(*x), tt[i]);
  }
}

TEST(LinalgProperty, IrreducibleHasNoFixedVectors) {
  Gen g(26);
  for (int t = 0; t < 10; ++t) {
    std::vector<Mat> s{g.invertible(3), g.invertible(3)};
    if (algebra_closure_dim(s) != 9) continue;
    std::vector<Mat> dual;
    for (const auto& m : s) dual.push_back(inverse(m).transpose());
    EXPECT_EQ(common_fixed_space(s).dim(), 0u);
    EXPECT_EQ(common_fixed_space(dual).dim(), 0u);
  }
}
