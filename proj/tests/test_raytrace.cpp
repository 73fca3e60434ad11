#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>
#include <thread>

#include "unicrit/dynmaps.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/polycore.hpp"
#include "unicrit/raytrace.hpp"

using namespace unicrit;
using cd = std::complex<double>;

namespace {

cd to_cd(const mp::Complex& z) { return {z.re.to_double(), z.im.to_double()}; }

LandingReport land(const char* angle, const std::vector<IntPoly>& cands) {
  return land_and_match(2, Angle::parse(angle), cands);
}

IntPoly in_c(const IntPoly& b_poly) {
  return coord_transform(ParamPolynomial{b_poly, Coordinate::b, 2, {}, ""}, Coordinate::c).poly;
}

}  // namespace

TEST(Angle, ParseAndReduce) {
  Angle a = Angle::parse("6/14");
  EXPECT_EQ(a.p, 3);
  EXPECT_EQ(a.q, 7);
  EXPECT_EQ(Angle::parse("9/7").str(), "2/7");
  EXPECT_EQ(Angle::parse("0").str(), "0");
  EXPECT_THROW(Angle::parse("1/0"), InvalidArgument);
  EXPECT_THROW(Angle::parse("x/3"), InvalidArgument);
}

TEST(Angle, OrbitExamples) {
  auto o = angle_orbit(Angle::parse("1/7"), 2);
  EXPECT_EQ(o.preperiod, 0);
  EXPECT_EQ(o.period, 3);
  o = angle_orbit(Angle::parse("1/5"), 2);
  EXPECT_EQ(o.preperiod, 0);
  EXPECT_EQ(o.period, 4);
  o = angle_orbit(Angle::parse("9/56"), 2);
  EXPECT_EQ(o.preperiod, 3);
  EXPECT_EQ(o.period, 3);
  o = angle_orbit(Angle::parse("1/4"), 2);
  EXPECT_EQ(o.preperiod, 2);
  EXPECT_EQ(o.period, 1);
  o = angle_orbit(Angle::parse("1/6"), 2);
  EXPECT_EQ(o.preperiod, 1);
  EXPECT_EQ(o.period, 2);
  o = angle_orbit(Angle::parse("1/8"), 3);
  EXPECT_EQ(o.preperiod, 0);
  EXPECT_EQ(o.period, 2);
}

TEST(Angle, PeriodicDenominatorsDivide) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 5; ++n) {
    for (int it = 0; it < 200; ++it) {
      const long q = std::uniform_int_distribution<long>(2, 5000)(rng);
      const long p = std::uniform_int_distribution<long>(0, q - 1)(rng);
      Angle a(p, q);
      AngleOrbit o = angle_orbit(a, n);
      ASSERT_GE(o.period, 1);
      BigInt nr;
      mpz_ui_pow_ui(nr.get_mpz_t(), n, o.period);
      if (o.preperiod == 0) {
        EXPECT_EQ((nr - 1) % a.q, 0) << a.str() << " n=" << n;
      }
      // n^a * (n^r - 1) * angle is an integer.
      BigInt na;
      mpz_ui_pow_ui(na.get_mpz_t(), n, o.preperiod);
      EXPECT_EQ((na * (nr - 1) * a.p) % a.q, 0);
    }
  }
}

TEST(Angle, PeriodicListing) {
  auto a = periodic_angles(2, 3);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0].str(), "1/7");
  EXPECT_EQ(a[1].str(), "2/7");
  EXPECT_EQ(a[2].str(), "3/7");
  EXPECT_EQ(periodic_angles(2, 4).size(), 6u);
  EXPECT_EQ(periodic_angles(2, 2, false).size(), 2u);
}

TEST(ComplexRoots, Examples) {
  auto r = complex_roots(IntPoly({1, 0, 1}), 128);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(std::abs(to_cd(r[0]) - cd(0, -1)), 0, 1e-30);
  EXPECT_NEAR(std::abs(to_cd(r[1]) - cd(0, 1)), 0, 1e-30);

  r = complex_roots(IntPoly({7, 1, 1}), 256);
  ASSERT_EQ(r.size(), 2u);
  const cd expect(-0.5, 1.5 * std::sqrt(3.0));
  EXPECT_NEAR(std::abs(to_cd(r[1]) - expect), 0, 1e-14);
  // -1 + 3i sqrt(3) = 2 root, checked to high precision: (2r + 1)^2 = -27.
  mp::Complex w = r[1] * 2L + mp::Real(1.0, 256);
  mp::Complex sq = w * w;
  EXPECT_LT(mp::abs(sq.re + mp::Real(27.0, 256)).to_double(), 1e-60);
  EXPECT_LT(mp::abs(sq.im).to_double(), 1e-60);

  r = complex_roots(IntPoly({2, 1}), 64);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(to_cd(r[0]), cd(-2, 0));
  EXPECT_THROW(complex_roots(IntPoly(), 64), InvalidArgument);
}

TEST(ComplexRoots, VietaProperty) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 30; ++it) {
    const int d = std::uniform_int_distribution<int>(1, 12)(rng);
    std::vector<BigInt> c(d + 1);
    for (auto& x : c) x = std::uniform_int_distribution<long>(-50, 50)(rng);
    c[d] = std::uniform_int_distribution<long>(1, 9)(rng);
    if (c[0] == 0) c[0] = 1;
    IntPoly p = squarefree_part(IntPoly(c));
    const int e = p.degree();
    if (e < 1) continue;
    auto roots = complex_roots(p, 192);
    ASSERT_EQ(static_cast<int>(roots.size()), e);
    mp::Complex sum(192), prod(1.0, 0.0, 192);
    for (const auto& z : roots) {
      sum += z;
      prod *= z;
    }
    const double lead = p.leading().get_d();
    const cd want_sum(-p[e - 1].get_d() / lead, 0);
    const cd want_prod((e % 2 ? -1.0 : 1.0) * p[0].get_d() / lead, 0);
    EXPECT_NEAR(std::abs(to_cd(sum) - want_sum), 0, 1e-12 * (1 + std::abs(want_sum)));
    EXPECT_NEAR(std::abs(to_cd(prod) - want_prod), 0, 1e-12 * (1 + std::abs(want_prod)));
  }
}

TEST(ComplexRoots, HighDegreeDynatomic) {
  // Period-5 centers: 15 distinct roots of a degree-15 factor chain.
  IntPoly g = gleason_poly(2, 5, Coordinate::c).poly;
  auto roots = complex_roots(g, 256);
  ASSERT_EQ(static_cast<int>(roots.size()), g.degree());
  for (const auto& c : roots) {
    mp::Complex z = c;
    for (int k = 1; k < 5; ++k) z = z * z + c;
    EXPECT_LT(z.abs().to_double(), 1e-50);
  }
}

TEST(Ray, ZeroRayIsRealAndMonotone) {
  RayOptions opt;
  opt.potential_end = 1e-4;
  RayPath p = trace_param_ray(2, Angle(0, 1), opt);
  ASSERT_GT(p.points.size(), 10u);
  double prev = INFINITY;
  for (const auto& pt : p.points) {
    EXPECT_LT(std::abs(pt.c.im.to_double()), 1e-40);
    const double re = pt.c.re.to_double();
    EXPECT_GT(re, 0.25);
    EXPECT_LT(re, prev);
    prev = re;
  }
}

TEST(Ray, PathShapeAndConjugateSymmetry) {
  RayOptions opt;
  opt.potential_end = 1e-3;
  RayPath a = trace_param_ray(2, Angle::parse("1/7"), opt);
  RayPath b = trace_param_ray(2, Angle::parse("6/7"), opt);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 1; i < a.points.size(); ++i) EXPECT_LT(a.points[i].potential, a.points[i - 1].potential);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_NEAR(std::abs(to_cd(a.points[i].c) - std::conj(to_cd(b.points[i].c))), 0,
                1e-20 * (1 + std::abs(to_cd(a.points[i].c))));
  }
  EXPECT_GT(a.points.back().c.im.to_double(), 0);
}

TEST(Ray, HalfRayApproachesMinusTwo) {
  RayPath p = trace_param_ray(2, Angle::parse("1/2"));
  EXPECT_LT(std::abs(to_cd(p.points.back().c) - cd(-2, 0)), 1e-12);
}

TEST(Ray, ThirdRayLandingEstimate) {
  LandingOptions opt;
  opt.ray.potential_end = 1e-6;
  RayPath p = trace_param_ray(2, Angle::parse("1/3"), opt.ray);
  LandingEstimate e = estimate_landing(p, opt);
  EXPECT_LT(std::abs(to_cd(e.extrapolated) - cd(-0.75, 0)), 1e-2);
  ASSERT_TRUE(e.polished.has_value());
  EXPECT_LT(std::abs(to_cd(*e.polished) - cd(-0.75, 0)), 1e-3);
}

TEST(Ray, InvalidOptions) {
  RayOptions opt;
  opt.potential_end = 40;
  EXPECT_THROW(trace_param_ray(2, Angle::parse("1/3"), opt), InvalidArgument);
  EXPECT_THROW(trace_param_ray(1, Angle::parse("1/3")), InvalidArgument);
}

TEST(Landing, SeventhRayAndConjugate) {
  std::vector<IntPoly> cands = {parabolic_param_poly(2, 1, 3, Coordinate::c).poly,
                                parabolic_param_poly(2, 3, 1, Coordinate::c).poly};
  LandingReport r = land("1/7", cands);
  EXPECT_EQ(r.status, "matched");
  ASSERT_TRUE(r.factor.has_value());
  EXPECT_EQ(*r.factor, in_c(IntPoly({7, 1, 1})));
  const cd b = 4.0 * to_cd(*r.root);
  EXPECT_NEAR(std::abs(b - cd(-0.5, 1.5 * std::sqrt(3.0))), 0, 1e-12);
  EXPECT_LT(r.distance->to_double(), 1e-6);
  EXPECT_GE(r.margin->to_double(), 10);

  // 1/7 and 2/7 bound the same component and co-land; 6/7 is the mirror image.
  LandingReport s = land("2/7", cands);
  EXPECT_EQ(s.status, "matched");
  EXPECT_EQ(s.root_index, r.root_index);
  LandingReport m = land("6/7", cands);
  EXPECT_EQ(m.status, "matched");
  EXPECT_EQ(*m.factor, *r.factor);
  EXPECT_NEAR(std::abs(to_cd(*m.root) - std::conj(to_cd(*r.root))), 0, 1e-12);
}

TEST(Landing, QuarterRayMisiurewicz) {
  LandingReport r = land("1/4", {misiurewicz_poly(2, 2, 1, 2, Coordinate::c).poly});
  EXPECT_EQ(r.status, "matched");
  EXPECT_EQ(*r.factor, IntPoly({2, 2, 2, 1}));
  EXPECT_GT(r.root->im.to_double(), 0);
  EXPECT_LT(r.raw_distance->to_double(), 1e-10);
}

TEST(Landing, HalfRayMatchesMinusTwo) {
  LandingReport r = land_and_match(2, Angle::parse("1/2"), default_candidates(2, Angle::parse("1/2")));
  EXPECT_EQ(r.status, "matched");
  EXPECT_EQ(*r.factor, IntPoly({2, 1}));
}

TEST(Landing, WrongCandidatesGiveNoCandidate) {
  LandingReport r = land("1/4", {IntPoly({1, 0, 1})});
  EXPECT_EQ(r.status, "no_candidate");
  EXPECT_EQ(land("1/4", {}).status, "no_candidate");
}

TEST(Landing, CubicFamily) {
  // 1/8 has period 2 under tripling.
  Angle a = Angle::parse("1/8");
  LandingReport r = land_and_match(3, a, default_candidates(3, a));
  EXPECT_EQ(r.status, "matched");
  ASSERT_TRUE(r.root.has_value());
  // The landing parameter carries a period-2 orbit with multiplier one, or a
  // fixed point with multiplier -1.
  EXPECT_LT(r.distance->to_double(), 1e-6);
}

TEST(Landing, ConcurrentTracesAgree) {
  const std::vector<std::string> angles = {"1/3", "1/4", "1/7", "1/6"};
  std::vector<std::string> serial, parallel(angles.size());
  for (const auto& a : angles) {
    Angle ang = Angle::parse(a);
    serial.push_back(to_json(land_and_match(2, ang, default_candidates(2, ang))).dump());
  }
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    pool.emplace_back([&, i] {
      Angle ang = Angle::parse(angles[i]);
      parallel[i] = to_json(land_and_match(2, ang, default_candidates(2, ang))).dump();
    });
  }
  for (auto& t : pool) t.join();
  EXPECT_EQ(serial, parallel);
}

TEST(Json, ComplexShape) {
  mp::Complex z(-0.75, 0.5, 128);
  auto j = to_json(z, 128);
  EXPECT_EQ(j["bits"], 128);
  EXPECT_TRUE(j["re"].is_string());
  EXPECT_EQ(mp::Real::parse(j["re"].get<std::string>(), 128).to_double(), -0.75);
  LandingReport r = land("1/2", {IntPoly({2, 1})});
  auto k = to_json(r);
  EXPECT_EQ(k["angle"], "1/2");
  EXPECT_EQ(k["status"], "matched");
  EXPECT_EQ(k["preperiod"], 1);
  EXPECT_EQ(k["period"], 1);
}
