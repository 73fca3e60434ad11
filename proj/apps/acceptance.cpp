// Runs the acceptance checks and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "unicrit/dynmaps.hpp"
#include "unicrit/factor.hpp"
#include "unicrit/numfield.hpp"
#include "unicrit/polycore.hpp"
#include "unicrit/raytrace.hpp"
#include "unicrit/verify.hpp"

using namespace unicrit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (!ok) detail << "; ";
    ok = false;
    detail << what;
  }
};

IntPoly P(std::initializer_list<long> c, const std::string& var = "x") { return IntPoly(c, var); }

bool has_factor(const IntPoly& p, const IntPoly& f) {
  for (const auto& fac : factor(p).factors)
    if (fac.poly.coeffs() == f.coeffs()) return true;
  return false;
}

struct Cell {
  int t, h;
  IntPoly expected;
  long norm;
};

std::vector<Cell> table_cells() {
  return {{1, 1, P({2, 1}), 2},
          {1, 2, P({1, 0, 1}), 1},
          {2, 1, P({2, 2, 2, 1}), 2},
          {3, 1, P({2, 2, 4, 6, 6, 6, 4, 1}), 2},
          {1, 4, P({1, 0, 0, 2, 6, 8, 11, 18, 23, 22, 15, 6, 1}), 1}};
}

void misiurewicz_table(Outcome& o) {
  auto t0 = Clock::now();
  for (const auto& cell : table_cells()) {
    IntPoly got = misiurewicz_poly(2, cell.t, cell.h, 2, Coordinate::c).poly;
    o.require(got.coeffs() == cell.expected.coeffs(),
              "(t,h)=(" + std::to_string(cell.t) + "," + std::to_string(cell.h) + ") got " + got.to_string());
  }
  double s = seconds_since(t0);
  o.require(s < 10.0, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail << "5 cells exact in " << s << " s";
}

void degrees_and_norms(Outcome& o) {
  for (const auto& cell : table_cells()) {
    IntPoly got = misiurewicz_poly(2, cell.t, cell.h, 2, Coordinate::c).poly;
    NormValue nv = norm_of_root(got);
    std::string tag = "(" + std::to_string(cell.t) + "," + std::to_string(cell.h) + ")";
    o.require(got.degree() == cell.expected.degree(), tag + " degree " + std::to_string(got.degree()));
    o.require(nv.abs_value() == cell.norm, tag + " |norm| " + nv.abs_value().get_str());
    if (o.ok) o.detail << tag << " d=" << got.degree() << " |N|=" << nv.abs_value().get_str() << " ";
  }
}

void parabolic_examples(Outcome& o) {
  auto t0 = Clock::now();
  IntPoly p12 = parabolic_param_poly(2, 1, 2, Coordinate::b).poly;
  IntPoly p22 = parabolic_param_poly(2, 2, 2, Coordinate::b).poly;
  IntPoly p31 = parabolic_param_poly(2, 3, 1, Coordinate::b).poly;
  IntPoly p41 = parabolic_param_poly(2, 4, 1, Coordinate::b).poly;
  const IntPoly b3 = P({3, 1}), b5 = P({5, 1}), b7 = P({7, 1}), q7 = P({7, 1, 1}), cub = P({135, 27, 9, 1});
  o.require(p12.coeffs() == b3.coeffs(), "(1,2) got " + p12.to_string());
  o.require(p22.coeffs() == b5.coeffs(), "(2,2) got " + p22.to_string());
  o.require(has_factor(p31, b7) && has_factor(p31, q7), "(3,1) lacks b+7 or b^2+b+7");
  o.require(has_factor(p41, cub), "(4,1) lacks the cubic");
  struct N {
    IntPoly f;
    long want;
  };
  for (const auto& [f, want] : {N{b3, -3}, N{b5, -5}, N{b7, -7}, N{q7, 7}, N{cub, -135}}) {
    BigRational v = norm_of_root(f).value;
    o.require(v == want, "norm of " + f.to_string() + " is " + v.get_str());
  }
  double s = seconds_since(t0);
  o.require(s < 30.0, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail << "norms -3 -5 -7 7 -135 in " << s << " s";
}

void ray_concordance(Outcome& o) {
  struct Expect {
    const char* angle;
    IntPoly poly;  // in c
  };
  const std::vector<Expect> expect = {
      {"1/3", P({3, 4})},           {"2/5", P({5, 4})},
      {"3/7", P({7, 4})},           {"1/7", P({7, 4, 16})},
      {"1/5", P({135, 108, 144, 64})}, {"1/2", P({2, 1})},
      {"1/4", P({2, 2, 2, 1})},     {"1/6", P({1, 0, 1})},
  };
  std::vector<IntPoly> all;
  for (const auto& e : expect)
    for (auto& p : default_candidates(2, Angle::parse(e.angle))) all.push_back(p);

  LandingOptions opt;
  opt.ray.precision_bits = 256;
  double worst = 0;
  for (const auto& e : expect) {
    auto t0 = Clock::now();
    LandingReport r = land_and_match(2, Angle::parse(e.angle), all, opt);
    double s = seconds_since(t0);
    worst = std::max(worst, s);
    std::string tag = e.angle;
    o.require(r.status == "matched", tag + " status " + r.status);
    o.require(s < 10.0, tag + " took " + std::to_string(s) + " s");
    if (r.status != "matched") continue;
    IntPoly want = e.poly.with_var(r.factor->var());
    o.require(r.factor->coeffs() == want.coeffs(), tag + " factor " + r.factor->to_string());
    o.require(r.distance->to_double() < 1e-6, tag + " distance");
    o.require(r.margin && r.margin->to_double() >= 10, tag + " margin");
    // the expected root is the one in the closed upper half plane with largest imaginary part
    auto roots = complex_roots(e.poly, 256);
    const mp::Complex* best = &roots.front();
    for (const auto& z : roots)
      if (z.im.to_double() > best->im.to_double()) best = &z;
    o.require(mp::distance(*best, *r.root).to_double() < 1e-40, tag + " selected another root");
    if (o.ok)
      o.detail << tag << " d=" << r.distance->to_double() << " m=" << r.margin->to_double() << " ";
  }
  if (o.ok) o.detail << "slowest " << worst << " s";
}

void norm_sweep(Outcome& o) {
  SweepConfig cfg;
  auto s = summarize(sweep_thm_1_4(cfg));
  o.require(s.failed == 0, std::to_string(s.failed) + " cells violate divisibility");
  o.detail << (o.ok ? "" : "; ") << s.cells << " cells, " << s.passed << " pass, " << s.incomplete
           << " over degree cap " << cfg.degree_cap;
}

void misiurewicz_sweep(Outcome& o) {
  SweepConfig cfg;
  auto s = summarize(sweep_thm_3_1(cfg));
  o.require(s.failed == 0, std::to_string(s.failed) + " cells fail");
  o.require(s.incomplete == 0, std::to_string(s.incomplete) + " cells incomplete");
  o.detail << (o.ok ? "" : "; ") << s.cells << " cells, " << s.passed << " pass";
}

void fixed_point_identities(Outcome& o) {
  for (int n = 2; n <= 6; ++n) {
    BigInt lo = pow(BigInt(n - 1), n - 1), hi = pow(BigInt(n + 1), n - 1);
    IntPoly m1 = fixed_point_parabolic(n, 1).poly, m2 = fixed_point_parabolic(n, 2).poly;
    o.require(m1.coeffs() == IntPoly(std::vector<BigInt>{-lo, 1}).coeffs(), "n=" + std::to_string(n) + " m=1");
    o.require(m2.coeffs() == IntPoly(std::vector<BigInt>{hi, 1}).coeffs(), "n=" + std::to_string(n) + " m=2");
    o.require(m1 == parabolic_param_poly(n, 1, 1, Coordinate::bhat).poly, "n=" + std::to_string(n) + " m=1 pipeline");
    o.require(m2 == parabolic_param_poly(n, 1, 2, Coordinate::bhat).poly, "n=" + std::to_string(n) + " m=2 pipeline");
    BigInt big = pow(BigInt(n * n - 1), n - 1);
    BigInt neg = -hi;
    o.require(big % neg == 0, "n=" + std::to_string(n) + " divisibility");
  }
  if (o.ok) o.detail << "n=2..6";
}

void units_and_congruences(Outcome& o) {
  int orbits = 0, certs = 0;
  for (long c0 : {-1L, -2L}) {
    BigRational c(c0);
    for (int h = 1; h <= 4; ++h) {
      std::string tag = "c=" + std::to_string(c0) + " h=" + std::to_string(h);
      if (h >= 2) {
        DynamicalUnitReport u = dynamical_unit_check(2, c, h);
        o.require(u.holds(), tag + " unit product");
        for (const auto& orb : u.orbits) {
          o.require(orb.product_is_one, tag + " product != 1");
          o.require(orb.certificates.size() == orb.phi_values.size(), tag + " missing certificates");
          for (const auto& cert : orb.certificates) {
            o.require(cert.is_unit, tag + " phi not a unit");
            ++certs;
          }
        }
      }
      CongruenceReport cr = congruence_certificates(2, c, h);
      o.require(cr.holds(), tag + " congruence failed");
      for (const auto& orb : cr.orbits) {
        ++orbits;
        bool integral = false, mu_pow = false;
        for (const auto& br : orb.branches) {
          if (br.name == "mu_over_n_pow_h") integral = br.status == BranchStatus::pass;
          if (br.name == "mu_pow_n") mu_pow = br.status == BranchStatus::pass;
        }
        o.require(integral, tag + " mu/n^h not certified");
        o.require(mu_pow, tag + " (mu^n - (-b)^((n-1)h))/n not certified");
      }
    }
  }
  o.require(orbits > 0, "no orbits");
  if (o.ok) o.detail << orbits << " orbits, " << certs << " unit certificates";
}

IntPoly random_poly(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<BigInt> c(degree + 1);
  for (auto& x : c) x = coef(rng);
  while (c.back() == 0) c.back() = coef(rng);
  return IntPoly(std::move(c));
}

void property_suites(Outcome& o) {
  std::mt19937_64 rng(20240601);

  for (int n : {2, 3})
    for (int h = 1; h <= 6; ++h) {
      BiPoly prod = BiPoly("z", "c", {IntPoly::constant(1, "c")});
      for (unsigned long d : divisors(h)) prod = prod * dynatomic(n, static_cast<int>(d));
      o.require(prod == iterate_minus_identity(n, h, NormalForm::f_c),
                "dynatomic product n=" + std::to_string(n) + " h=" + std::to_string(h));
    }

  std::uniform_int_distribution<int> small_deg(1, 6);
  for (int i = 0; i < 100; ++i) {
    IntPoly f = random_poly(rng, small_deg(rng), 20), g = random_poly(rng, small_deg(rng), 20),
            k = random_poly(rng, small_deg(rng), 20);
    if (resultant(f * g, k) != resultant(f, k) * resultant(g, k)) {
      o.require(false, "resultant multiplicativity at triple " + std::to_string(i));
      break;
    }
  }

  std::uniform_int_distribution<int> deg20(0, 20);
  for (int i = 0; i < 200; ++i) {
    IntPoly p;
    if (i % 2 == 0) {
      p = random_poly(rng, deg20(rng), 50);
    } else {
      // products of small pieces exercise the recombination step
      p = IntPoly::constant(1);
      while (p.degree() < 12) p = p * random_poly(rng, small_deg(rng), 5);
    }
    if (p.degree() > 20) p = random_poly(rng, 20, 50);
    if (factor(p).expand() != p) {
      o.require(false, "reassembly of " + p.to_string());
      break;
    }
  }

  std::uniform_int_distribution<int> fdeg(2, 8);
  std::uniform_int_distribution<long> q(-9, 9), den(1, 5);
  int fields = 0;
  while (fields < 20) {
    IntPoly def = random_poly(rng, fdeg(rng), 6);
    std::vector<BigInt> c = def.coeffs();
    c.back() = 1;
    def = IntPoly(std::move(c));
    if (!is_irreducible(def)) continue;
    ++fields;
    FieldPtr K = make_field(def);
    auto element = [&] {
      std::vector<BigRational> xs(def.degree());
      for (auto& x : xs) x = BigRational(q(rng), den(rng));
      return FieldElement(K, xs);
    };
    for (int j = 0; j < 5; ++j) {
      FieldElement a = element(), b = element();
      if (norm_and_trace(a * b).first != norm_and_trace(a).first * norm_and_trace(b).first) {
        o.require(false, "norm multiplicativity over " + def.to_string());
        break;
      }
    }
  }
  if (o.ok) o.detail << "12 product identities, 100 triples, 200 factorizations, 100 norm pairs";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"misiurewicz table n=2 tau=2", misiurewicz_table},
      {"degrees and norms", degrees_and_norms},
      {"parabolic examples", parabolic_examples},
      {"ray landing concordance", ray_concordance},
      {"norm divisibility sweep", norm_sweep},
      {"misiurewicz and gleason norm sweep", misiurewicz_sweep},
      {"fixed point identities", fixed_point_identities},
      {"units and congruences", units_and_congruences},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failed;
    std::printf("%s %zu %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, seconds_since(t0),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
