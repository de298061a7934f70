#include <gtest/gtest.h>

#include "mctool/cyclo.hpp"
#include "support.hpp"

using namespace mctool;
using mctool::testkit::close;
using mctool::testkit::Gen;
using mctool::testkit::to_complex;

namespace {

IntPoly poly(std::initializer_list<long> cs) {
  IntPoly p;
  for (long c : cs) p.emplace_back(c);
  return p;
}

}  // namespace

TEST(CyclotomicPolynomial, SmallOrders) {
  EXPECT_EQ(cyclotomic_polynomial(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), poly({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), poly({1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, ProductOverDivisorsIsXnMinusOne) {
  for (std::uint64_t n : {6u, 12u, 15u, 30u, 36u}) {
    IntPoly prod = poly({1});
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      IntPoly f = cyclotomic_polynomial(d);
      IntPoly out(prod.size() + f.size() - 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += prod[i] * f[j];
      }
      prod = out;
    }
    IntPoly expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    EXPECT_EQ(prod, expect) << n;
    EXPECT_EQ(cyclotomic_polynomial(n).size(), euler_phi(n) + 1);
  }
}

TEST(CycNum, SpecExamples) {
  const CycNum z3 = root_of_unity(3, 1);
  EXPECT_EQ(z3 + z3 * z3, CycNum(-1));
  const CycNum i = root_of_unity(4, 1);
  EXPECT_EQ(i * i, CycNum(-1));
  const CycNum inv = (CycNum(1) - z3).inv();
  EXPECT_EQ(inv, (CycNum(2) + z3) / CycNum(3));
  // numerical oracle: (1 - w)(2 + w) = 3 for w = exp(2 pi i / 3)
  EXPECT_TRUE(close(to_complex(inv) * (1.0L - to_complex(z3)), 1.0L));
}

TEST(CycNum, RootOfUnity) {
  EXPECT_EQ(root_of_unity(2, 1), CycNum(-1));
  EXPECT_EQ(root_of_unity(3, 4), root_of_unity(3, 1));
  EXPECT_EQ(root_of_unity(12, 4).order(), 12u);
  EXPECT_EQ(root_of_unity(12, 4), root_of_unity(3, 1).embed(12));
  for (std::uint64_t n : {1u, 2u, 3u, 5u, 7u, 8u, 12u, 15u}) {
    CycNum z = root_of_unity(n, 1);
    EXPECT_EQ(z.root_of_unity_order(), n);
    CycNum p = CycNum::one(n);
    for (std::uint64_t k = 1; k < n; ++k) {
      p *= z;
      EXPECT_FALSE(p.is_one()) << n << " " << k;
    }
    EXPECT_TRUE((p * z).is_one());
  }
}

TEST(CycNum, Embedding) {
  EXPECT_EQ(root_of_unity(3, 1).embed(6), root_of_unity(6, 2));
  EXPECT_EQ(CycNum(-1).embed(12), CycNum(-1));
  CycNum z12_3 = root_of_unity(4, 1).embed(12);
  EXPECT_EQ(z12_3, root_of_unity(12, 3));
  EXPECT_EQ(z12_3 * z12_3, CycNum(-1));
  try {
    (void)root_of_unity(4, 1).embed(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotADivisor);
  }
}

TEST(CycNum, MixedOrdersUseLcm) {
  CycNum s = root_of_unity(3, 1) + root_of_unity(4, 1);
  EXPECT_EQ(s.order(), 12u);
  EXPECT_TRUE(close(to_complex(s), to_complex(root_of_unity(3, 1)) + to_complex(root_of_unity(4, 1))));
}

TEST(CycNum, DivisionByZero) {
  try {
    (void)CycNum::zero(5).inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(CycNum, OrderOverflow) {
  // lcm(1009, 1013) is just above the default bound of 10^6
  try {
    (void)(root_of_unity(1009, 1) + root_of_unity(1013, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderOverflow);
  }
  EXPECT_EQ((root_of_unity(11, 1) + root_of_unity(13, 1)).order(), 143u);
}

TEST(CycNum, CanonicalRationals) {
  CycNum a = CycNum::from_coeffs(5, {Rational(2, 4), Rational(-6, 8)});
  EXPECT_EQ(a.coeff(0), Rational(1, 2));
  EXPECT_EQ(a.coeff(1), Rational(-3, 4));
  EXPECT_GT(a.denominator(), 0);
  EXPECT_EQ(a, parse_cycnum("1/2 - 3/4*z", 5));
}

TEST(CycNum, ParseAndPrint) {
  for (const char* text : {"0", "1", "-1", "z", "1/2 - z^3", "2/3 + 1/3*z", "-z^2"}) {
    CycNum x = parse_cycnum(text, 7);
    EXPECT_EQ(parse_cycnum(x.to_string(), 7), x) << text;
  }
  EXPECT_EQ(parse_cycnum("z^3", 3), CycNum::one(3));
  EXPECT_EQ(parse_cycnum("z^-1", 3), root_of_unity(3, 2));
  EXPECT_EQ(parse_cycnum("2(z+1)", 4), CycNum(2) * (root_of_unity(4, 1) + CycNum(1)));
  EXPECT_EQ(parse_cycnum("z^2", 3).to_string(), "-1 - z");
  for (const char* bad : {"", "1/", "z^", "(1+z", "x", "1/0"}) {
    try {
      (void)parse_cycnum(bad, 3);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::DivisionByZero) << bad;
    }
  }
}

TEST(CycNum, Galois) {
  CycNum z = root_of_unity(12, 1);
  EXPECT_EQ(z.galois(5), root_of_unity(12, 5));
  EXPECT_EQ(z.galois(-1) * z, CycNum::one(12));
}

TEST(CycNum, ProjectInvertsEmbed) {
  Gen g(7);
  for (int t = 0; t < 20; ++t) {
    CycNum a = g.scalar(6);
    EXPECT_EQ(a.embed(30).project(6), a);
  }
}

TEST(CycNumProperty, FieldAxioms) {
  Gen g(11);
  for (std::uint64_t n : {1u, 3u, 4u, 5u, 8u, 12u}) {
    for (int t = 0; t < 30; ++t) {
      CycNum a = g.scalar(n), b = g.scalar(n), c = g.scalar(n);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a - a, CycNum::zero(n));
      if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
      EXPECT_TRUE(close(to_complex(a * b), to_complex(a) * to_complex(b), 1e-6L));
    }
  }
}

TEST(CycNumProperty, EmbedIsHomomorphism) {
  Gen g(13);
  for (int t = 0; t < 30; ++t) {
    CycNum a = g.scalar(4), b = g.scalar(4);
    EXPECT_EQ((a * b).embed(12), a.embed(12) * b.embed(12));
    EXPECT_EQ((a + b).embed(12), a.embed(12) + b.embed(12));
    EXPECT_TRUE(close(to_complex(a.embed(12)), to_complex(a), 1e-9L));
  }
}

TEST(CycNum, RootsInField) {
  EXPECT_EQ(roots_of_unity_in_field(3).size(), 6u);
  EXPECT_EQ(roots_of_unity_in_field(4).size(), 4u);
  EXPECT_EQ(roots_of_unity_in_field(1).size(), 2u);
}
