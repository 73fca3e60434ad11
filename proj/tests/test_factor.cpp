#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/factor.hpp"
#include "unicrit/polycore.hpp"

using namespace unicrit;

namespace {

// Irreducibility for degree <= 3 by rational roots (and, for quadratics, the discriminant).
bool brute_irreducible(const IntPoly& p0) {
  if (p0.content() != 1) return false;
  IntPoly p = p0.primitive_part();
  const int d = p.degree();
  if (d == 1) return true;
  if (p.constant_term() == 0) return false;
  // Any rational root r/s has r | a0 and s | an.
  std::vector<BigInt> rs, ss;
  auto divs = [](BigInt v) {
    v = abs(v);
    std::vector<BigInt> out;
    for (BigInt k = 1; k * k <= v; ++k) {
      if (v % k == 0) {
        out.push_back(k);
        out.push_back(v / k);
      }
    }
    return out;
  };
  for (const auto& r : divs(p.constant_term()))
    for (const auto& s : divs(p.leading()))
      for (int sg : {1, -1}) {
        BigRational x(sg * r, s);
        x.canonicalize();
        if (p(x) == 0) return false;
      }
  if (d == 2) {
    BigInt disc = p[1] * p[1] - 4 * p[0] * p[2];
    if (disc < 0) return true;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
    return r * r != disc;
  }
  return true;  // cubic without rational roots
}

}  // namespace

TEST(Factor, SpecExamples) {
  Factorization f = factor(IntPoly{-1, 0, 1});
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].poly, (IntPoly{-1, 1}));
  EXPECT_EQ(f.factors[1].poly, (IntPoly{1, 1}));

  Factorization g = factor(IntPoly{2, 1, 2, 1});
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.factors[0].poly, (IntPoly{2, 1}));
  EXPECT_EQ(g.factors[1].poly, (IntPoly{1, 0, 1}));

  EXPECT_TRUE(is_irreducible(IntPoly{2, 2, 2, 1}));
  EXPECT_TRUE(is_irreducible(IntPoly{7, 1, 1}));
  EXPECT_TRUE(is_irreducible(IntPoly{135, 27, 9, 1}));
  EXPECT_FALSE(is_irreducible(IntPoly{-1, 0, 1}));
  EXPECT_FALSE(is_irreducible(IntPoly{2, 4}));
}

TEST(Factor, ContentSignAndMultiplicity) {
  IntPoly p = IntPoly{-6} * IntPoly{1, 1}.pow(3) * IntPoly{1, 0, 1};
  Factorization f = factor(p);
  EXPECT_EQ(f.content, -6);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].mult, 3);
  EXPECT_EQ(f.expand(), p);
}

TEST(Factor, SwinnertonDyerStyleHardCase) {
  // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime.
  IntPoly p{1, 0, -10, 0, 1};
  EXPECT_TRUE(is_irreducible(p));
  // (x^4-10x^2+1)(x^4+1) needs recombination of many modular factors.
  IntPoly q = p * IntPoly{1, 0, 0, 0, 1};
  Factorization f = factor(q);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.expand(), q);
}

TEST(Factor, CyclotomicProducts) {
  for (unsigned long m = 2; m <= 40; ++m) {
    IntPoly xm = IntPoly::monomial(1, m) - IntPoly::constant(1);
    Factorization f = factor(xm);
    EXPECT_EQ(f.factors.size(), divisors(m).size()) << m;
    for (const auto& fa : f.factors) EXPECT_EQ(fa.mult, 1);
    EXPECT_EQ(f.expand(), xm);
  }
}

TEST(Factor, ReassemblyRandom200) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly p = oracle::random_poly(rng, 20, 50);
    if (trial % 4 == 0) p = oracle::random_poly(rng, 6, 9) * oracle::random_poly(rng, 8, 9) * oracle::random_poly(rng, 6, 9);
    if (p.is_zero()) continue;
    Factorization f = factor(p);
    ASSERT_EQ(f.expand(), p) << p.to_string();
    for (const auto& fa : f.factors) {
      EXPECT_GT(fa.poly.leading(), 0);
      EXPECT_EQ(fa.poly.content(), 1);
    }
    for (std::size_t i = 0; i + 1 < f.factors.size(); ++i) {
      EXPECT_FALSE(f.factors[i].poly == f.factors[i + 1].poly);
    }
  }
}

TEST(Factor, IrreducibilityAgreesWithBruteForceLowDegree) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    IntPoly p = oracle::random_poly(rng, 3, 30);
    if (p.degree() < 1) continue;
    EXPECT_EQ(is_irreducible(p), brute_irreducible(p)) << p.to_string();
  }
}

TEST(Factor, ModularFactorCountsBoundRationalCount) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    IntPoly p = oracle::random_poly(rng, 5, 9) * oracle::random_poly(rng, 5, 9);
    if (p.degree() < 2) continue;
    IntPoly sf = squarefree_part(p);
    std::size_t rational = factor_squarefree(sf).size();
    for (unsigned long prime : {5ul, 7ul, 11ul, 13ul, 17ul, 19ul}) {
      try {
        EXPECT_LE(rational, factor_degrees_mod(sf, prime).size());
      } catch (const InvalidArgument&) {
        // bad reduction at this prime
      }
    }
  }
}

TEST(Factor, DeterministicOrdering) {
  IntPoly p = IntPoly{3, 1} * IntPoly{-2, 1} * IntPoly{1, 1, 1} * IntPoly{1, 0, 1};
  Factorization a = factor(p), b = factor(p);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(a.factors[0].poly, (IntPoly{-2, 1}));
  EXPECT_EQ(a.factors[1].poly, (IntPoly{3, 1}));
  EXPECT_EQ(a.factors[2].poly, (IntPoly{1, 0, 1}));
  EXPECT_EQ(a.factors[3].poly, (IntPoly{1, 1, 1}));
}

TEST(Norm, Examples) {
  EXPECT_EQ(norm_of_root(IntPoly{3, 1}).value, -3);
  EXPECT_EQ(norm_of_root(IntPoly{7, 1, 1}).value, 7);
  NormValue v = norm_of_root(IntPoly{135, 27, 9, 1});
  EXPECT_EQ(v.value, -135);
  EXPECT_EQ(v.abs_value(), 135);
  EXPECT_EQ(v.degree, 3);
  for (long a = -20; a <= 20; ++a) EXPECT_EQ(norm_of_root(IntPoly{-a, 1}).value, a);
  EXPECT_THROW(norm_of_root(IntPoly{3, 2}), InvalidArgument);
  EXPECT_THROW(norm_of_root(IntPoly{-1, 0, 1}), InvalidArgument);
}

TEST(Factor, LargeDegreeProduct) {
  // Product of two degree-30 polynomials with modest coefficients.
  std::mt19937_64 rng(77);
  IntPoly a = oracle::random_poly(rng, 30, 5), b = oracle::random_poly(rng, 30, 5);
  while (a.degree() < 25) a = oracle::random_poly(rng, 30, 5);
  while (b.degree() < 25) b = oracle::random_poly(rng, 30, 5);
  Factorization f = factor(a * b);
  EXPECT_EQ(f.expand(), a * b);
  EXPECT_GE(f.factors.size(), 2u);
}
