#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unicrit/bi_poly.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/int_poly.hpp"
#include "unicrit/polycore.hpp"

using namespace unicrit;

namespace {

// x-outer, y-inner bivariate polynomial from rows (coefficients of x^i as polys in y).
BiPoly xy(std::vector<IntPoly> rows) { return BiPoly("x", "y", std::move(rows)); }

IntPoly Y(std::initializer_list<long> c) { return IntPoly(c, "y"); }

}  // namespace

TEST(IntPoly, ArithmeticBasics) {
  IntPoly a{-1, 0, 1};
  IntPoly b{-1, 1};
  EXPECT_EQ(a, b * IntPoly({1, 1}));
  EXPECT_EQ(a.derivative(), (IntPoly{0, 2}));
  EXPECT_EQ(IntPoly({2, 4, 6}).primitive_part(), (IntPoly{1, 2, 3}));
  EXPECT_EQ(IntPoly({2, -4}).primitive_part(), (IntPoly{-1, 2}));
  EXPECT_EQ((IntPoly{1, 1}).pow(3), (IntPoly{1, 3, 3, 1}));
  EXPECT_EQ((IntPoly{1, 0, 1}).compose(IntPoly{1, 1}), (IntPoly{2, 2, 1}));
  EXPECT_EQ(a(BigInt(3)), 8);
}

TEST(IntPoly, KroneckerMatchesSchoolbook) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly a = oracle::random_poly(rng, 60, 1L << 40);
    IntPoly b = oracle::random_poly(rng, 60, 1L << 40);
    if (trial % 3 == 0) a = a * pow(BigInt(10), 200);
    EXPECT_EQ(multiply_kronecker(a, b), multiply_schoolbook(a, b));
  }
}

TEST(BiPoly, KroneckerProductMatchesRowwise) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<IntPoly> ra, rb;
    for (int i = 0; i < 4; ++i) ra.push_back(oracle::random_poly(rng, 5, 50).with_var("y"));
    for (int i = 0; i < 3; ++i) rb.push_back(oracle::random_poly(rng, 5, 50).with_var("y"));
    BiPoly A = xy(ra), B = xy(rb);
    BiPoly P = A * B;
    for (long x = -2; x <= 2; ++x)
      for (long y = -2; y <= 2; ++y) EXPECT_EQ(P(x, y), A(x, y) * B(x, y));
  }
}

TEST(Resultant, SpecExamples) {
  BiPoly lin = xy({Y({-2}), Y({1})});          // x - 2
  BiPoly sq = xy({Y({0, -1}), Y({}), Y({1})});  // x^2 - y
  BiPoly ii = xy({Y({1}), Y({}), Y({1})});      // x^2 + 1
  EXPECT_EQ(resultant(lin, sq, "x"), Y({4, -1}));
  EXPECT_EQ(resultant(ii, sq, "x"), Y({1, 2, 1}));
  EXPECT_EQ(resultant(lin * ii, sq, "x"), Y({4, -1}) * Y({1, 2, 1}));
}

TEST(Resultant, RejectsConstantInEliminatedVariable) {
  BiPoly c = xy({Y({1, 1})});
  BiPoly sq = xy({Y({0, -1}), Y({}), Y({1})});
  EXPECT_THROW(resultant(c, sq, "x"), InvalidArgument);
}

TEST(Resultant, UnivariateMatchesSylvesterDeterminant) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = oracle::random_poly(rng, 7, 20);
    IntPoly b = oracle::random_poly(rng, 7, 20);
    if (a.degree() + b.degree() == 0) continue;
    EXPECT_EQ(resultant(a, b), oracle::sylvester_resultant(a, b)) << a.to_string() << " , " << b.to_string();
  }
}

TEST(Resultant, MultiplicativityRandomTriples) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly a = oracle::random_poly(rng, 6, 9), b = oracle::random_poly(rng, 6, 9), c = oracle::random_poly(rng, 6, 9);
    EXPECT_EQ(resultant(a * b, c), resultant(a, c) * resultant(b, c));
  }
}

TEST(Resultant, InterpolationAgreesWithPrs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<IntPoly> ra, rb;
    const int da = 1 + trial % 4, db = 1 + (trial / 4) % 3;
    for (int i = 0; i <= da; ++i) ra.push_back(oracle::random_poly(rng, 3, 9).with_var("y"));
    for (int i = 0; i <= db; ++i) rb.push_back(oracle::random_poly(rng, 3, 9).with_var("y"));
    ra.back() = Y({1, 1});
    rb.back() = Y({2});
    BiPoly A = xy(ra), B = xy(rb);
    IntPoly r1 = resultant(A, B, "x");
    IntPoly r2 = resultant_prs(A, B, "x");
    EXPECT_EQ(r1, r2);
    for (long y = -3; y <= 3; ++y) {
      if (y == -1) continue;  // leading coefficient y+1 vanishes
      EXPECT_EQ(r1(BigInt(y)), resultant(A.eval_inner(y), B.eval_inner(y)));
    }
  }
}

TEST(Gcd, SpecExamples) {
  EXPECT_EQ(gcd_subresultant(IntPoly{-1, 0, 1}, IntPoly{-1, 1}), (IntPoly{-1, 1}));
  EXPECT_EQ(gcd_subresultant(IntPoly{2, 1, 2, 1}, IntPoly{2, 1}), (IntPoly{2, 1}));
  EXPECT_EQ(gcd_subresultant(IntPoly{1, 0, 1}, IntPoly{1, 1, 1}), (IntPoly{1}));
  EXPECT_TRUE(gcd_subresultant(IntPoly(), IntPoly()).is_zero());
}

TEST(Gcd, ModularAgreesWithSubresultant) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly g = oracle::random_poly(rng, 5, 30);
    IntPoly a = oracle::random_poly(rng, 8, 30) * g;
    IntPoly b = oracle::random_poly(rng, 8, 30) * g;
    IntPoly g1 = gcd_subresultant(a, b);
    IntPoly g2 = gcd_modular(a, b);
    EXPECT_EQ(g1, g2);
    EXPECT_TRUE(exact_quotient(a, g1).has_value());
    EXPECT_TRUE(exact_quotient(b, g1).has_value());
    if (g.degree() > 0) EXPECT_TRUE(exact_quotient(g1, g.primitive_part()).has_value());
  }
}

TEST(Gcd, ScalesWithCommonFactor) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly a = oracle::random_poly(rng, 6, 9), b = oracle::random_poly(rng, 6, 9);
    IntPoly G = oracle::random_poly(rng, 4, 9);
    if (G.degree() < 1) continue;
    EXPECT_EQ(gcd(a * G, b * G), normalized(G * gcd(a, b)));
  }
}

TEST(Squarefree, Examples) {
  IntPoly xm1{-1, 1}, xp2{2, 1};
  EXPECT_EQ(squarefree_part(xm1 * xm1 * xp2), normalized(xm1 * xp2));
  EXPECT_EQ(squarefree_part(IntPoly{0, 0, 0, 1}), (IntPoly{0, 1}));
  IntPoly p{7, 1, 1};
  EXPECT_EQ(squarefree_part(p), p);
  EXPECT_EQ(squarefree_part(squarefree_part(p * p)), p);
}

TEST(Squarefree, YunDecompositionReassembles) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly a = oracle::random_poly(rng, 3, 9), b = oracle::random_poly(rng, 3, 9);
    IntPoly p = a * b.pow(2) * a.pow(2);
    if (p.degree() < 1) continue;
    auto dec = squarefree_decomposition(p);
    IntPoly prod = IntPoly::constant(1);
    for (auto& [f, e] : dec) prod *= f.pow(e);
    EXPECT_EQ(normalized(prod), normalized(p));
    IntPoly sf = squarefree_part(p);
    EXPECT_EQ(gcd(sf, sf.derivative()).degree(), 0);
  }
}

TEST(Cyclotomic, SmallCases) {
  EXPECT_EQ(cyclotomic(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic(3), (IntPoly{1, 1, 1}));
  EXPECT_EQ(cyclotomic(6), (IntPoly{1, -1, 1}));
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(4), 0);
  EXPECT_EQ(moebius(6), 1);
  EXPECT_EQ(moebius(30), -1);
  EXPECT_EQ(euler_phi(12), 4u);
}

TEST(Cyclotomic, ProductOverDivisorsIsXmMinusOne) {
  for (unsigned long m = 1; m <= 30; ++m) {
    IntPoly prod = IntPoly::constant(1);
    for (auto d : divisors(m)) prod *= cyclotomic(d);
    EXPECT_EQ(prod, IntPoly::monomial(1, m) - IntPoly::constant(1)) << m;
    EXPECT_EQ(cyclotomic(m).degree(), static_cast<int>(euler_phi(m)));
  }
}

TEST(RootTransforms, Examples) {
  EXPECT_EQ(root_power_transform(IntPoly{-3, 1}, 2), (IntPoly{-9, 1}));
  EXPECT_EQ(root_power_transform(IntPoly{1, 0, 1}, 2), (IntPoly{1, 2, 1}));
  EXPECT_EQ(root_power_transform(IntPoly{7, 1, 1}, 1), (IntPoly{7, 1, 1}));
  EXPECT_EQ(root_scale_transform(IntPoly{3, 4}, BigRational(4)), (IntPoly{3, 1}));
  EXPECT_EQ(root_scale_transform(IntPoly{-1, 1}, BigRational(1)), (IntPoly{-1, 1}));
  EXPECT_EQ(root_scale_transform(IntPoly{135, 108, 144, 64}, BigRational(4)), (IntPoly{135, 27, 9, 1}));
}

TEST(RootTransforms, RoundTrips) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    IntPoly p = oracle::random_poly(rng, 6, 9);
    if (p.degree() < 1) continue;
    EXPECT_EQ(root_power_transform(p, 1), normalized(p));
    BigRational s(trial % 5 + 2, trial % 3 + 1);
    s.canonicalize();
    EXPECT_EQ(root_scale_transform(root_scale_transform(p, s), 1 / s), normalized(p));
  }
}

TEST(RootTransforms, PowerMatchesNumericRoots) {
  // Roots of x^2 - 2 are +-sqrt2; cubes are +-2sqrt2, a root of x^2 - 8.
  EXPECT_EQ(root_power_transform(IntPoly{-2, 0, 1}, 3), (IntPoly{-8, 0, 1}));
  // x^2 + x + 1: cube of either root is 1.
  EXPECT_EQ(root_power_transform(IntPoly{1, 1, 1}, 3), (IntPoly{1, -2, 1}));
}

TEST(Interpolation, RecoversPolynomial) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    IntPoly p = oracle::random_poly(rng, 12, 1000);
    std::vector<BigInt> xs, ys;
    for (int i = 0; i <= p.degree() + 2; ++i) {
      xs.push_back(interpolation_node(i));
      ys.push_back(p(xs.back()));
    }
    EXPECT_EQ(interpolate(xs, ys), p);
  }
}

TEST(Serialization, RoundTrip) {
  IntPoly p(std::vector<BigInt>{BigInt("-123456789012345678901234567890"), 0, 7}, "b");
  auto j = to_json(p);
  EXPECT_EQ(j["var"], "b");
  EXPECT_EQ(j["coeffs"][0], "-123456789012345678901234567890");
  IntPoly q = int_poly_from_json(j);
  EXPECT_EQ(q, p);
  EXPECT_EQ(q.var(), "b");
}
