#include "unicrit/raytrace.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>

#include "unicrit/errors.hpp"
#include "unicrit/factor.hpp"
#include "unicrit/polycore.hpp"

namespace unicrit {

using mp::Complex;
using mp::Real;

namespace {

constexpr double kAnnulus = 32.0;

BigInt pow_int(long n, unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(n), k);
  return r;
}

Real eps_for(long bits, long slack) { return mp::ldexp(Real(1.0, bits), -(bits - slack)); }

Complex cone(long bits) { return Complex(1.0, 0.0, bits); }

Complex power(const Complex& z, int k) { return z.pow(static_cast<unsigned long>(k)); }

// Horner evaluation of p and p'.
std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& a, const Complex& z) {
  const long bits = z.prec();
  Complex p(bits), dp(bits);
  for (std::size_t i = a.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
  }
  return {p, dp};
}

// sum |a_i| |z|^i
Real abs_eval(const std::vector<Complex>& a, const Real& r) {
  Real s(r.prec());
  for (std::size_t i = a.size(); i-- > 0;) s = s * r + a[i].abs();
  return s;
}

int root_order(const Complex& a, const Complex& b) {
  const double ar = a.re.to_double(), br = b.re.to_double();
  if (std::abs(ar - br) > 1e-12 * std::max(1.0, std::abs(ar))) return ar < br ? -1 : 1;
  const double ai = a.im.to_double(), bi = b.im.to_double();
  return ai < bi ? -1 : (ai > bi ? 1 : 0);
}

void sort_roots(std::vector<Complex>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) { return root_order(a, b) < 0; });
}

// Depth K with n^K t in [kAnnulus, n * kAnnulus), or 0 when t is already large.
int depth_for(int n, const Real& t) {
  int k = 0;
  Real s = t;
  const Real lim(kAnnulus, t.prec());
  while (s < lim) {
    s = s * n;
    ++k;
    if (k > 100000) throw PrecisionExhausted("potential too small for the annulus search");
  }
  return k;
}

struct Target {
  int depth;
  Complex value;
};

Target target_for(int n, const Angle& a, const Real& t) {
  const long bits = t.prec();
  const int K = depth_for(n, t);
  const BigInt nk = pow_int(n, K);
  const Real mod = mp::exp(t * Real(nk, bits));
  Complex w = mp::unit_root(a.p * nk, a.q, bits);
  return {K, w * mod};
}

// Newton for z_K(c) = T; nullopt when it fails to settle.
std::optional<Complex> newton_ray(int n, const Target& tg, Complex c, int max_iter = 80) {
  const long bits = c.prec();
  const Real eps = eps_for(bits, 24);
  for (int it = 0; it < max_iter; ++it) {
    Complex z = c, dz = cone(bits);
    for (int k = 0; k < tg.depth; ++k) {
      Complex zn1 = power(z, n - 1);
      dz = zn1 * dz * static_cast<long>(n) + cone(bits);
      z = zn1 * z + c;
    }
    if (!z.is_finite() || !dz.is_finite()) return std::nullopt;
    Complex step = (z - tg.value) / dz;
    if (!step.is_finite()) return std::nullopt;
    c -= step;
    Real scale = c.abs();
    if (scale < Real(1.0, bits)) scale = Real(1.0, bits);
    if (step.abs() <= eps * scale) return c;
  }
  return std::nullopt;
}

// The n-th roots of the target differ only in the argument of z_{K-1}; insist
// that it follows the angle one level down as well.
bool on_branch(int n, const Angle& a, const Real& t, const Target& tg, const Complex& c) {
  if (tg.depth == 0) return true;
  const long bits = c.prec();
  Complex z = c;
  for (int k = 0; k + 1 < tg.depth; ++k) z = power(z, n) + c;
  const BigInt nk = pow_int(n, tg.depth - 1);
  Complex expect = mp::unit_root(a.p * nk, a.q, bits) * mp::exp(t * Real(nk, bits));
  return (z / expect - cone(bits)).abs().to_double() < 0.5;
}

Real geometric_mean(const Real& a, const Real& b) { return mp::sqrt(a * b); }

// Quadratic in s through (s_i, v_i), i = k..k+2, evaluated at s = 0.
Complex log_quadratic(const std::vector<Complex>& v, const std::vector<Real>& s, int k) {
  const Real &a = s[k], &b = s[k + 1], &c = s[k + 2];
  return v[k] * ((b * c) / ((a - b) * (a - c))) + v[k + 1] * ((a * c) / ((b - a) * (b - c))) +
         v[k + 2] * ((a * b) / ((c - a) * (c - b)));
}

Complex aitken(const Complex& x0, const Complex& x1, const Complex& x2) {
  Complex d1 = x1 - x0, d2 = x2 - x1;
  Complex den = d2 - d1;
  if (den.abs().is_zero()) return x2;
  return x2 - (d2 * d2) / den;
}

std::vector<Complex> to_complex(const IntPoly& p, long bits) {
  std::vector<Complex> a;
  a.reserve(p.size());
  for (const auto& c : p.coeffs()) a.emplace_back(Real(c, bits), Real(bits));
  return a;
}

// Coefficients of f_c^h(z) - z.
std::vector<Complex> iterate_minus_z(int n, int h, const Complex& c) {
  const long bits = c.prec();
  std::vector<Complex> p{Complex(bits), cone(bits)};
  for (int k = 0; k < h; ++k) {
    std::vector<Complex> q{cone(bits)};
    for (int j = 0; j < n; ++j) {
      std::vector<Complex> r(q.size() + p.size() - 1, Complex(bits));
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t l = 0; l < p.size(); ++l) r[i + l] += q[i] * p[l];
      q = std::move(r);
    }
    q[0] += c;
    p = std::move(q);
  }
  p[1] -= cone(bits);
  return p;
}

struct OrbitJet {
  Complex w, wz, wc, wzz, wzc;
};

// w = f^h(z) with derivatives in z and c.
OrbitJet orbit_jet(int n, int h, const Complex& z, const Complex& c) {
  const long bits = c.prec();
  OrbitJet j{z, cone(bits), Complex(bits), Complex(bits), Complex(bits)};
  for (int k = 0; k < h; ++k) {
    Complex wn2 = n >= 2 ? power(j.w, n - 2) : cone(bits);
    Complex wn1 = wn2 * j.w;
    Complex d1 = wn1 * static_cast<long>(n);
    Complex d2 = wn2 * static_cast<long>(n * (n - 1));
    OrbitJet nx{wn1 * j.w + c, d1 * j.wz, d1 * j.wc + cone(bits), d2 * j.wz * j.wz + d1 * j.wzz,
                d2 * j.wc * j.wz + d1 * j.wzc};
    j = std::move(nx);
  }
  return j;
}

// Newton on (f^h(z) - z, (f^h)'(z) - zeta) in (z, c).
std::optional<Complex> polish_parabolic(int n, int h, const Complex& zeta, Complex z, Complex c) {
  const long bits = c.prec();
  const Real eps = eps_for(bits, 24);
  for (int it = 0; it < 100; ++it) {
    OrbitJet j = orbit_jet(n, h, z, c);
    Complex F = j.w - z, G = j.wz - zeta;
    Complex a = j.wz - cone(bits), b = j.wc, cc = j.wzz, d = j.wzc;
    Complex det = a * d - b * cc;
    if (det.abs().is_zero() || !det.is_finite()) return std::nullopt;
    Complex dz = (F * d - b * G) / det;
    Complex dc = (a * G - cc * F) / det;
    z -= dz;
    c -= dc;
    if (!c.is_finite()) return std::nullopt;
    Real scale = c.abs() + Real(1.0, bits);
    if (dc.abs() <= eps * scale && dz.abs() <= eps * (z.abs() + Real(1.0, bits))) return c;
  }
  return std::nullopt;
}

// Newton on f^{a+r}(c) - f^a(c) with orbit started at the critical value.
std::optional<Complex> polish_misiurewicz(int n, int a, int r, Complex c) {
  const long bits = c.prec();
  const Real eps = eps_for(bits, 24);
  for (int it = 0; it < 100; ++it) {
    Complex z = c, dz = cone(bits), za(bits), dza(bits);
    for (int k = 0; k < a + r; ++k) {
      if (k == a) {
        za = z;
        dza = dz;
      }
      Complex zn1 = power(z, n - 1);
      dz = zn1 * dz * static_cast<long>(n) + cone(bits);
      z = zn1 * z + c;
    }
    Complex F = z - za, dF = dz - dza;
    if (dF.abs().is_zero() || !dF.is_finite()) return std::nullopt;
    Complex step = F / dF;
    c -= step;
    if (step.abs() <= eps * (c.abs() + Real(1.0, bits))) return c;
  }
  return std::nullopt;
}

std::optional<Complex> polish(int n, const AngleOrbit& orb, const Complex& guess, long bits, std::string& eq) {
  if (orb.preperiod > 0) {
    eq = "f^" + std::to_string(orb.preperiod + orb.period) + "(c) = f^" + std::to_string(orb.preperiod) + "(c)";
    return polish_misiurewicz(n, orb.preperiod, orb.period, guess);
  }
  std::optional<Complex> best;
  Real best_d(bits);
  const long lo = 128;
  for (unsigned long h : divisors(orb.period)) {
    const int m = orb.period / static_cast<int>(h);
    if (std::pow(static_cast<double>(n), static_cast<double>(h)) > 512) continue;
    Complex c_lo = guess.rounded(lo);
    std::vector<Complex> pts;
    try {
      pts = complex_roots(iterate_minus_z(n, static_cast<int>(h), c_lo), lo);
    } catch (const NonConvergence&) {
      continue;
    }
    for (int k = 1; k <= m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      Complex zeta = mp::unit_root(k, m, bits);
      // Start from the periodic point whose multiplier is closest to zeta.
      const Complex* z0 = nullptr;
      double zd = 0;
      for (const auto& z : pts) {
        OrbitJet j = orbit_jet(n, static_cast<int>(h), z, c_lo);
        double d = mp::distance(j.wz, zeta.rounded(lo)).to_double();
        if (!z0 || d < zd) {
          z0 = &z;
          zd = d;
        }
      }
      if (!z0) continue;
      auto c = polish_parabolic(n, static_cast<int>(h), zeta, z0->rounded(bits), guess);
      if (!c) continue;
      Real d = mp::distance(*c, guess);
      if (!best || d < best_d) {
        best = c;
        best_d = d;
        eq = "period " + std::to_string(h) + " orbit with multiplier exp(2 pi i " + std::to_string(k) + "/" +
             std::to_string(m) + ")";
      }
    }
  }
  return best;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int decimal_digits(long bits) { return static_cast<int>(std::ceil(bits * 0.30103)) + 2; }

}  // namespace

Angle::Angle(BigInt p_, BigInt q_) : p(std::move(p_)), q(std::move(q_)) {
  if (q <= 0) throw InvalidArgument("angle denominator must be positive");
  p %= q;
  if (p < 0) p += q;
  BigInt g = gcd(p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  if (p == 0) q = 1;
}

Angle Angle::parse(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Angle(parse_bigint(s), 1);
    return Angle(parse_bigint(s.substr(0, slash)), parse_bigint(s.substr(slash + 1)));
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidArgument("angle must look like p/q: " + s);
  }
}

std::string Angle::str() const { return q == 1 ? p.get_str() : p.get_str() + "/" + q.get_str(); }

AngleOrbit angle_orbit(const Angle& a, int n) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  std::map<BigInt, int> seen;
  BigInt x = a.p;
  for (int i = 0;; ++i) {
    auto [it, fresh] = seen.emplace(x, i);
    if (!fresh) return {it->second, i - it->second};
    x = (x * n) % a.q;
  }
}

Complex ray_point(int n, const Angle& angle, const Real& potential, const Complex& guess) {
  auto c = newton_ray(n, target_for(n, angle, potential), guess, 200);
  if (!c) throw NewtonDivergence("no convergence at potential " + potential.to_string(8));
  return *c;
}

RayPath trace_param_ray(int n, const Angle& angle, const RayOptions& opt) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  if (!(opt.potential_start > opt.potential_end) || !(opt.potential_end > 0))
    throw InvalidArgument("need potential_start > potential_end > 0");
  if (opt.steps_per_halving < 1) throw InvalidArgument("steps_per_halving must be positive");
  if (opt.precision_bits < 64) throw InvalidArgument("precision below 64 bits");
  const long bits = opt.precision_bits;

  RayPath path{n, angle, bits, {}};
  const Real t0(opt.potential_start, bits), t_end(opt.potential_end, bits);
  const Real ln2 = mp::log(Real(2.0, bits));

  // Scheduled levels t0 * 2^{-k/S}, ending exactly at t_end.
  std::vector<Real> schedule;
  for (long k = 1;; ++k) {
    Real t = t0 * mp::exp(-(ln2 * k) / Real(static_cast<double>(opt.steps_per_halving), bits));
    if (t <= t_end) break;
    schedule.push_back(t);
  }
  schedule.push_back(t_end);

  Target first = target_for(n, angle, t0);
  auto c0 = newton_ray(n, first, first.value, 200);
  if (!c0) throw NewtonDivergence("no convergence at the starting potential");
  path.points.push_back({t0, *c0, first.depth});

  std::optional<Complex> delta;  // previous accepted step
  Real prev_log(bits);
  Real cur_log = mp::log(t0);

  for (std::size_t s = 0; s < schedule.size();) {
    const Real& goal = schedule[s];
    Real t_next = goal;
    int retries = 0;
    for (;;) {
      const RayPoint& cur = path.points.back();
      const Real next_log = mp::log(t_next);
      Complex guess = cur.c;
      Real ratio(1.0, bits), local(bits);
      if (cur.c.abs().to_double() > 4) {
        // Far out, c ~ exp(t + 2 pi i angle).
        guess = cur.c * mp::exp(t_next - cur.potential);
        local = mp::distance(guess, cur.c);
      } else if (delta) {
        ratio = (next_log - cur_log) / (cur_log - prev_log);
        guess = cur.c + *delta * ratio;
        local = delta->abs() * mp::abs(ratio);
      }
      Target tg = target_for(n, angle, t_next);
      auto c = newton_ray(n, tg, guess);
      bool ok = c.has_value() && on_branch(n, angle, t_next, tg, *c);
      if (ok && !local.is_zero()) ok = mp::distance(*c, cur.c) <= local * 10;
      if (ok) {
        delta = *c - cur.c;
        prev_log = cur_log;
        cur_log = next_log;
        path.points.push_back({t_next, *c, tg.depth});
        break;
      }
      if (++retries > opt.max_retries)
        throw NewtonDivergence("ray " + angle.str() + " lost continuity near potential " + t_next.to_string(8));
      t_next = geometric_mean(cur.potential, t_next);
    }
    if (path.points.back().potential <= goal) ++s;
  }
  return path;
}

std::vector<Complex> complex_roots(const std::vector<Complex>& coeffs_in, long bits) {
  std::vector<Complex> a = coeffs_in;
  while (!a.empty() && a.back().abs().is_zero()) a.pop_back();
  if (a.empty()) throw InvalidArgument("zero polynomial has no roots");
  const int d = static_cast<int>(a.size()) - 1;
  if (d == 0) return {};
  const long wp = bits + 64;
  for (auto& x : a) x = x.rounded(wp);
  // Normalize to monic.
  const Complex lead = a.back();
  for (auto& x : a) x = x / lead;
  std::vector<Complex> z;
  if (d == 1) {
    z.push_back(-a[0]);
  } else {
    // Cauchy bound for the initial circle.
    Real R(wp);
    for (int i = 0; i < d; ++i) {
      Real m = a[i].abs();
      if (R < m) R = m;
    }
    R = R + Real(1.0, wp);
    const Real twopi = Real::pi(wp) * 2;
    for (int i = 0; i < d; ++i) {
      Real phi = twopi * Real(static_cast<double>(i), wp) / Real(static_cast<double>(d), wp) + Real(0.4, wp);
      z.push_back(mp::polar(R * Real(0.5, wp), phi));
    }
    const Real eps = eps_for(wp, 16);
    bool done = false;
    for (int it = 0; it < 2000 && !done; ++it) {
      done = true;
      for (int i = 0; i < d; ++i) {
        auto [p, dp] = eval_with_derivative(a, z[i]);
        if (p.abs().is_zero()) continue;
        Complex ratio = p / dp;
        Complex s(wp);
        for (int j = 0; j < d; ++j)
          if (j != i) s += cone(wp) / (z[i] - z[j]);
        Complex w = ratio / (cone(wp) - ratio * s);
        if (!w.is_finite()) w = ratio;
        z[i] -= w;
        if (w.abs() > eps * (z[i].abs() + Real(1.0, wp))) done = false;
      }
    }
    if (!done) {
      // Accept when every residual is at rounding level regardless.
      for (const auto& r : z) {
        auto [p, dp] = eval_with_derivative(a, r);
        Real bound = abs_eval(a, r.abs()) * eps_for(wp, 40) * Real(static_cast<double>(4 * d), wp);
        if (bound < p.abs())
          throw NonConvergence("simultaneous iteration did not converge (degree " + std::to_string(d) + ")");
      }
    }
  }
  std::vector<Complex> out;
  for (const auto& r : z) out.push_back(r.rounded(bits));
  sort_roots(out);
  return out;
}

std::vector<Complex> complex_roots(const IntPoly& p, long bits) {
  if (p.is_zero()) throw InvalidArgument("zero polynomial has no roots");
  return complex_roots(to_complex(p, bits + 64), bits);
}

LandingEstimate estimate_landing(const RayPath& path, const LandingOptions& opt) {
  if (path.points.empty()) throw InvalidArgument("empty ray path");
  const long bits = path.precision_bits;
  const Real t_end = path.points.back().potential;
  const Real s10 = mp::sqrt(Real(10.0, bits));
  // Potentials t_end * 10^{k/2}, k = 0..3, seeded from the nearest traced point.
  std::vector<Complex> v;
  for (int k = 0; k < 4; ++k) {
    Real t = t_end;
    for (int j = 0; j < k; ++j) t = t * s10;
    const RayPoint* near = &path.points.back();
    for (const auto& p : path.points)
      if (mp::abs(mp::log(p.potential / t)) < mp::abs(mp::log(near->potential / t))) near = &p;
    v.push_back(k == 0 ? path.points.back().c : ray_point(path.n, path.angle, t, near->c));
  }
  LandingEstimate est;
  // c* + a t^beta suits repelling landings; parabolic ones approach like 1/log(1/t).
  Complex pw = aitken(v[2], v[1], v[0]);
  const double pw_err = mp::distance(pw, aitken(v[3], v[2], v[1])).to_double();
  std::vector<Real> s;
  for (int k = 0; k < 4; ++k) {
    Real t = t_end;
    for (int j = 0; j < k; ++j) t = t * s10;
    s.push_back(Real(1.0, bits) / -mp::log(t));
  }
  Complex lg = log_quadratic(v, s, 0);
  const double lg_err = mp::distance(lg, log_quadratic(v, s, 1)).to_double();
  if (pw_err <= lg_err) {
    est.extrapolated = pw;
    est.error_estimate = pw_err;
    est.model = "power";
  } else {
    est.extrapolated = lg;
    est.error_estimate = lg_err;
    est.model = "inverse_log";
  }

  const AngleOrbit orb = angle_orbit(path.angle, path.n);
  std::string eq;
  auto c = polish(path.n, orb, est.extrapolated, bits, eq);
  if (c && mp::distance(*c, est.extrapolated).to_double() <= std::max(opt.polish_radius, 10 * est.error_estimate)) {
    est.polished = *c;
    est.polish_equation = eq;
  }
  return est;
}

LandingReport land_and_match(int n, const Angle& angle, const std::vector<IntPoly>& candidates,
                             const LandingOptions& opt) {
  const long bits = opt.ray.precision_bits;
  LandingReport rep;
  rep.n = n;
  rep.angle = angle;
  rep.orbit = angle_orbit(angle, n);
  rep.precision_bits = bits;

  for (const auto& cand : candidates) {
    if (cand.degree() < 1) continue;
    for (const auto& f : factor(cand).factors) {
      IntPoly g = f.poly.with_var("c");
      if (std::find(rep.candidates.begin(), rep.candidates.end(), g) == rep.candidates.end())
        rep.candidates.push_back(g);
    }
  }
  std::sort(rep.candidates.begin(), rep.candidates.end(), factor_order_less);

  RayPath path = trace_param_ray(n, angle, opt.ray);
  rep.landing = estimate_landing(path, opt);
  const Complex& c = rep.landing.value();

  struct Hit {
    Real d;
    std::size_t factor;
    int index;
    Complex root;
  };
  std::vector<Hit> hits;
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
    auto roots = complex_roots(rep.candidates[i], bits);
    for (std::size_t k = 0; k < roots.size(); ++k)
      hits.push_back({mp::distance(roots[k], c), i, static_cast<int>(k), roots[k]});
  }
  if (hits.empty()) {
    rep.status = "no_candidate";
    return rep;
  }
  const Real floor = eps_for(bits, 0);
  auto ranked = [&](const Complex& at, std::vector<Hit> hs) {
    for (auto& h : hs) h.d = mp::distance(h.root, at);
    std::sort(hs.begin(), hs.end(), [](const Hit& x, const Hit& y) { return x.d < y.d; });
    return hs;
  };
  auto margin_of = [&](const std::vector<Hit>& hs) -> std::optional<Real> {
    if (hs.size() < 2) return std::nullopt;
    return hs[1].d / (hs[0].d < floor ? floor : hs[0].d);
  };
  const auto fin = ranked(c, hits);
  const auto raw = ranked(rep.landing.extrapolated, hits);
  const Hit& best = fin[0];
  rep.factor = rep.candidates[best.factor];
  rep.root = best.root;
  rep.root_index = best.index;
  rep.distance = best.d;
  rep.raw_distance = mp::distance(best.root, rep.landing.extrapolated);
  rep.margin = margin_of(fin);
  rep.raw_margin = margin_of(raw);
  // The unrefined estimate must point at the same root.
  const bool same = raw[0].factor == best.factor && raw[0].index == best.index;
  if (best.d.to_double() >= opt.tolerance) {
    rep.status = "no_candidate";
  } else if (!same || (rep.margin && rep.margin->to_double() < opt.margin)) {
    rep.status = "ambiguous";
  } else {
    rep.status = "matched";
  }
  return rep;
}

std::vector<IntPoly> default_candidates(int n, const Angle& angle, const DynOptions& opt) {
  const AngleOrbit orb = angle_orbit(angle, n);
  std::vector<IntPoly> out;
  for (unsigned long h : divisors(orb.period)) {
    if (orb.preperiod == 0) {
      const int m = orb.period / static_cast<int>(h);
      out.push_back(parabolic_param_poly(n, static_cast<int>(h), m, Coordinate::c, opt).poly);
    } else {
      for (unsigned long tau : divisors(n)) {
        if (tau < 2) continue;
        out.push_back(misiurewicz_poly(n, orb.preperiod, static_cast<int>(h), static_cast<int>(tau), Coordinate::c, opt).poly);
      }
    }
  }
  return out;
}

std::vector<Angle> periodic_angles(int n, int r, bool upper_only) {
  if (n < 2 || r < 1) throw InvalidArgument("need n >= 2 and r >= 1");
  const BigInt q = pow_int(n, r) - 1;
  if (q > 1000000) throw ResourceCapExceeded("n^r - 1 too large to enumerate");
  std::vector<Angle> out;
  const long qq = q.get_si();
  for (long p = 0; p < qq; ++p) {
    if (upper_only && (2 * p > qq || p == 0)) continue;
    Angle a(p, q);
    AngleOrbit o = angle_orbit(a, n);
    if (o.preperiod == 0 && o.period == r && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](const Angle& a, const Angle& b) { return a.p * b.q < b.p * a.q; });
  return out;
}

std::vector<Angle> default_angles() {
  std::vector<Angle> out;
  for (const char* s : {"1/3", "2/5", "3/7", "1/7", "1/5", "1/2", "1/4", "1/6"}) out.push_back(Angle::parse(s));
  return out;
}

nlohmann::json to_json(const Complex& z, long bits) {
  const int digits = decimal_digits(bits);
  return {{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}, {"bits", bits}};
}

nlohmann::json to_json(const RayPath& p) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& pt : p.points)
    pts.push_back({{"potential", pt.potential.to_string(17)}, {"depth", pt.depth}, {"c", to_json(pt.c, p.precision_bits)}});
  return {{"n", p.n}, {"angle", p.angle.str()}, {"precision_bits", p.precision_bits}, {"points", pts}};
}

nlohmann::json to_json(const LandingReport& r) {
  const long bits = r.precision_bits;
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : r.candidates) cands.push_back(to_json(c));
  nlohmann::json land = {{"extrapolated", to_json(r.landing.extrapolated, bits)},
                         {"error_estimate", fmt_double(r.landing.error_estimate)},
                         {"model", r.landing.model},
                         {"polished", r.landing.polished ? to_json(*r.landing.polished, bits) : nlohmann::json()},
                         {"polish_equation", r.landing.polish_equation}};
  auto real_str = [](const std::optional<Real>& x) { return x ? nlohmann::json(x->to_string(6)) : nlohmann::json(); };
  return {{"n", r.n},
          {"angle", r.angle.str()},
          {"preperiod", r.orbit.preperiod},
          {"period", r.orbit.period},
          {"landing", land},
          {"status", r.status},
          {"factor", r.factor ? to_json(*r.factor) : nlohmann::json()},
          {"root_index", r.root_index},
          {"root", r.root ? to_json(*r.root, bits) : nlohmann::json()},
          {"distance", real_str(r.distance)},
          {"raw_distance", real_str(r.raw_distance)},
          {"margin", real_str(r.margin)},
          {"raw_margin", real_str(r.raw_margin)},
          {"candidates", cands}};
}

}  // namespace unicrit
