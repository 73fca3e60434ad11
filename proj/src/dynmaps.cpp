#include "unicrit/dynmaps.hpp"

#include <tuple>

#include "unicrit/detail/memo.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/polycore.hpp"

namespace unicrit {

namespace {

void check_n(int n) {
  if (n < 2) throw InvalidArgument("degree n must be at least 2, got " + std::to_string(n));
}

void check_positive(const char* name, long v) {
  if (v < 1) throw InvalidArgument(std::string(name) + " must be at least 1, got " + std::to_string(v));
}

// n^e, or cap+1 if it would exceed cap.
long capped_pow(long n, long e, long cap) {
  long r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > cap / n) return cap + 1;
    r *= n;
  }
  return r;
}

void enforce_cap(long degree, long cap, const std::string& what) {
  if (degree > cap) {
    const std::string shown = degree == cap + 1 ? "above " + std::to_string(cap) : std::to_string(degree);
    throw ResourceCapExceeded(what + " has degree " + shown + ", above the cap " + std::to_string(cap));
  }
}

using Key3 = std::tuple<int, int, int>;

IntPoly named(IntPoly p, Coordinate c) { return p.with_var(coordinate_name(c)); }

ParamPolynomial make_param(IntPoly p, Coordinate c, int n, Provenance prov) {
  ParamPolynomial out;
  out.poly = named(normalized(p), c);
  out.coordinate = c;
  out.n = n;
  out.provenance = std::move(prov);
  return out;
}

// Removes from p every factor it shares with q.
IntPoly remove_common(IntPoly p, const IntPoly& q) {
  if (q.is_zero()) return p;
  while (true) {
    IntPoly g = gcd(p, q);
    if (g.degree() < 1) return p;
    p = divide_exact(p, g);
  }
}

// Route to the target; c <-> b for n >= 3 goes through bhat.
ParamPolynomial route(const ParamPolynomial& p, Coordinate target) {
  if (p.n >= 3 && ((p.coordinate == Coordinate::c && target == Coordinate::b) ||
                   (p.coordinate == Coordinate::b && target == Coordinate::c))) {
    const Coordinate mid = p.coordinate == Coordinate::c ? Coordinate::bhat : Coordinate::chat;
    return coord_transform(coord_transform(p, mid), target);
  }
  return coord_transform(p, target);
}

}  // namespace

std::string coordinate_name(Coordinate c) {
  switch (c) {
    case Coordinate::c: return "c";
    case Coordinate::chat: return "chat";
    case Coordinate::b: return "b";
    case Coordinate::bhat: return "bhat";
  }
  return "c";
}

Coordinate parse_coordinate(const std::string& s) {
  if (s == "c") return Coordinate::c;
  if (s == "chat") return Coordinate::chat;
  if (s == "b") return Coordinate::b;
  if (s == "bhat") return Coordinate::bhat;
  throw InvalidArgument("unknown coordinate '" + s + "' (expected c, chat, b or bhat)");
}

IteratePair iterate_poly_gb(int n, int k, const DynOptions& opt) {
  check_n(n);
  check_positive("k", k);
  enforce_cap(capped_pow(n, k, opt.degree_cap), opt.degree_cap, "P_k(b, w)");
  static detail::Memo<std::pair<int, int>, IteratePair> memo;
  return memo.get({n, k}, [&] {
    IteratePair it;
    it.k = 1;
    it.N = n;
    std::vector<IntPoly> rows(n + 1, IntPoly({}, "b"));
    rows[0] = IntPoly({0, 1}, "b");
    rows[n] = IntPoly::constant(1, "b");
    it.P = BiPoly("w", "b", std::move(rows));
    for (int j = 1; j < k; ++j) {
      const BiPoly bterm = BiPoly::from_inner(IntPoly({0, 1}, "b"), "w") * pow(it.N, n);
      it.P = it.P.pow(n) + bterm;
      it.N = n * pow(it.N, n);
      it.k = j + 1;
    }
    return it;
  });
}

BiPoly periodicity_poly(int n, int h, const DynOptions& opt) {
  IteratePair it = iterate_poly_gb(n, h, opt);
  BiPoly w = BiPoly("w", "b", {IntPoly({}, "b"), IntPoly::constant(it.N, "b")});
  return it.P - w;
}

IntPoly critical_orbit_poly(int n, int k, const DynOptions& opt) {
  check_n(n);
  check_positive("k", k);
  // deg P_k = 1 + n + ... + n^(k-2)
  long deg = 0;
  for (int j = 0; j + 1 < k; ++j) deg = deg * n + 1;
  enforce_cap(deg, opt.degree_cap, "P_k(chat)");
  static detail::Memo<std::pair<int, int>, IntPoly> memo;
  return memo.get({n, k}, [&] {
    if (k == 1) return IntPoly::constant(1, "chat");
    const IntPoly prev = critical_orbit_poly(n, k - 1, opt);
    return IntPoly::variable("chat") * prev.pow(n) + IntPoly::constant(1, "chat");
  });
}

IntPoly critical_value_iterate(int n, int k, const DynOptions& opt) {
  check_n(n);
  check_positive("k", k);
  enforce_cap(capped_pow(n, k - 1, opt.degree_cap), opt.degree_cap, "f_c^k(0)");
  static detail::Memo<std::pair<int, int>, IntPoly> memo;
  return memo.get({n, k}, [&] {
    const IntPoly c = IntPoly::variable("c");
    if (k == 1) return c;
    return critical_value_iterate(n, k - 1, opt).pow(n) + c;
  });
}

BiPoly iterate_minus_identity(int n, int h, NormalForm form, const DynOptions& opt) {
  check_n(n);
  check_positive("h", h);
  if (form == NormalForm::g_b) return periodicity_poly(n, h, opt);
  if (form != NormalForm::f_c) throw InvalidArgument("dynatomic polynomials are built for the f_c and g_b forms");
  enforce_cap(capped_pow(n, h, opt.degree_cap), opt.degree_cap, "f_c^h(z)");
  std::vector<IntPoly> rows(n + 1, IntPoly({}, "c"));
  rows[0] = IntPoly({0, 1}, "c");
  rows[n] = IntPoly::constant(1, "c");
  const BiPoly f1("z", "c", rows);
  const BiPoly cterm("z", "c", {IntPoly({0, 1}, "c")});
  BiPoly F = f1;
  for (int j = 1; j < h; ++j) F = F.pow(n) + cterm;
  return F - BiPoly("z", "c", {IntPoly({}, "c"), IntPoly::constant(1, "c")});
}

long dynatomic_degree(int n, int h) {
  long total = 0;
  for (unsigned long d : divisors(h)) {
    long p = 1;
    for (unsigned long i = 0; i < d; ++i) p *= n;
    total += moebius(h / d) * p;
  }
  return total;
}

BiPoly dynatomic(int n, int h, NormalForm form, const DynOptions& opt) {
  check_n(n);
  check_positive("h", h);
  enforce_cap(capped_pow(n, h, opt.degree_cap), opt.degree_cap, "dynatomic polynomial");
  static detail::Memo<Key3, BiPoly> memo;
  return memo.get({n, h, static_cast<int>(form)}, [&] {
    BiPoly phi = iterate_minus_identity(n, h, form, opt);
    for (unsigned long d : divisors(h)) {
      if (static_cast<int>(d) == h) continue;
      phi = divide_exact_monic(phi, dynatomic(n, static_cast<int>(d), form, opt));
    }
    return phi;
  });
}

IntPoly dynatomic_at(int n, int h, const BigInt& c0, const DynOptions& opt) {
  check_n(n);
  check_positive("h", h);
  enforce_cap(capped_pow(n, h, opt.degree_cap), opt.degree_cap, "dynatomic polynomial");
  const IntPoly z = IntPoly::variable("z");
  const IntPoly c = IntPoly::constant(c0, "z");
  IntPoly F = z.pow(n) + c;
  for (int j = 1; j < h; ++j) F = F.pow(n) + c;
  IntPoly phi = F - z;
  for (unsigned long d : divisors(h)) {
    if (static_cast<int>(d) == h) continue;
    phi = divide_exact(phi, dynatomic_at(n, static_cast<int>(d), c0, opt));
  }
  return phi;
}

namespace {

// (f^h)'(z) reduced modulo the monic phi, for f = z^n + c0.
IntPoly multiplier_mod(int n, int h, const BigInt& c0, const IntPoly& phi) {
  auto red = [&](const IntPoly& a) { return divmod_unit(a, phi).second; };
  IntPoly Fj = red(IntPoly::variable("z"));
  IntPoly D = IntPoly::constant(pow(BigInt(n), h), "z");
  for (int j = 0; j < h; ++j) {
    D = red(D * Fj.pow(n - 1));
    if (j + 1 < h) Fj = red(Fj.pow(n) + IntPoly::constant(c0, "z"));
  }
  return D;
}

long multiplier_c_degree(int n, int h, long nu, long mult) {
  // Multipliers grow like |c|^(h(n-1)/n).
  const long num = mult * nu * h * (n - 1);
  return (num + n - 1) / n;
}

}  // namespace

BiPoly multiplier_resultant(int n, int h, const DynOptions& opt) {
  check_n(n);
  check_positive("h", h);
  const long nu = dynatomic_degree(n, h);
  enforce_cap(nu, opt.degree_cap, "multiplier resultant");
  static detail::Memo<std::pair<int, int>, BiPoly> memo;
  return memo.get({n, h}, [&] {
    const long cdeg = multiplier_c_degree(n, h, nu, 1);
    std::vector<BigInt> cs;
    std::vector<std::vector<BigInt>> by_mu(nu + 1);  // coefficient of mu^j at each c0
    for (long i = 0; i <= cdeg; ++i) {
      const BigInt c0 = interpolation_node(i);
      const IntPoly phi = dynatomic_at(n, h, c0, opt);
      const IntPoly D = multiplier_mod(n, h, c0, phi);
      std::vector<BigInt> mus, vals;
      for (long j = 0; j <= nu; ++j) {
        const BigInt mu0 = interpolation_node(j);
        mus.push_back(mu0);
        vals.push_back(resultant(phi, IntPoly::constant(mu0, "z") - D));
      }
      const IntPoly q = interpolate(mus, vals, "mu");
      cs.push_back(c0);
      for (long j = 0; j <= nu; ++j) by_mu[j].push_back(q.coeff(j));
    }
    std::vector<IntPoly> rows;
    for (long j = 0; j <= nu; ++j) rows.push_back(interpolate(cs, by_mu[j], "c"));
    return BiPoly("mu", "c", std::move(rows));
  });
}

IntPoly parabolic_resultant(int n, int h, int m, const DynOptions& opt) {
  check_n(n);
  check_positive("h", h);
  check_positive("m", m);
  enforce_cap(capped_pow(n, h, opt.degree_cap), opt.degree_cap, "parabolic elimination");
  const long nu = dynatomic_degree(n, h);
  const long cdeg = multiplier_c_degree(n, h, nu, static_cast<long>(euler_phi(m)));
  enforce_cap(cdeg, opt.degree_cap, "parabolic resultant");
  static detail::Memo<Key3, IntPoly> memo;
  return memo.get({n, h, m}, [&] {
    const IntPoly psi = cyclotomic(m, "z");
    std::vector<BigInt> xs, ys;
    const long extra = 2;  // nodes beyond the degree bound, used as a consistency check
    for (long i = 0; i <= cdeg + extra; ++i) {
      const BigInt c0 = interpolation_node(i);
      const IntPoly phi = dynatomic_at(n, h, c0, opt);
      const IntPoly D = multiplier_mod(n, h, c0, phi);
      IntPoly acc({}, "z");
      for (int j = psi.degree(); j >= 0; --j) {
        acc = divmod_unit(acc * D + IntPoly::constant(psi[j], "z"), phi).second;
      }
      xs.push_back(c0);
      ys.push_back(acc.is_zero() ? BigInt(0) : resultant(phi, acc));
    }
    std::vector<BigInt> fx(xs.begin(), xs.end() - extra), fy(ys.begin(), ys.end() - extra);
    IntPoly T = interpolate(fx, fy, "c");
    for (long i = cdeg + 1; i <= cdeg + extra; ++i) {
      if (T(xs[i]) != ys[i]) throw InconsistencyError("parabolic resultant exceeded its degree bound");
    }
    return T;
  });
}

ParamPolynomial parabolic_param_poly(int n, int h, int m, Coordinate coord, const DynOptions& opt) {
  IntPoly T = parabolic_resultant(n, h, m, opt);
  if (T.is_zero()) throw InconsistencyError("parabolic resultant vanished identically");
  Provenance prov{"parabolic", {{"h", h}, {"m", m}, {"r", static_cast<long>(h) * m}}};
  ParamPolynomial base = make_param(squarefree_part(T), Coordinate::c, n, prov);
  return route(base, coord);
}

ParamPolynomial gleason_poly(int n, int h, Coordinate coord, const DynOptions& opt) {
  check_n(n);
  check_positive("h", h);
  Provenance prov{"gleason", {{"h", h}}};
  if (coord == Coordinate::c || (coord == Coordinate::b && n == 2)) {
    IntPoly g = critical_value_iterate(n, h, opt);
    for (unsigned long d : divisors(h)) {
      if (static_cast<int>(d) < h) g = remove_common(g, critical_value_iterate(n, static_cast<int>(d), opt));
    }
    return route(make_param(squarefree_part(g), Coordinate::c, n, prov), coord);
  }
  if (h == 1) {
    // The critical point is fixed only at c = 0, which the chat normal form excludes.
    ParamPolynomial p = make_param(IntPoly({0, 1}), Coordinate::chat, n, prov);
    p.note = "h = 1 is the single parameter c = 0, outside the chat normal form";
    if (coord != Coordinate::chat) {
      std::string note = p.note;
      p = route(p, coord);
      p.note = note;
    }
    return p;
  }
  IntPoly g = critical_orbit_poly(n, h, opt);
  for (unsigned long d : divisors(h)) {
    if (static_cast<int>(d) < h) g = remove_common(g, critical_orbit_poly(n, static_cast<int>(d), opt));
  }
  return route(make_param(squarefree_part(g), Coordinate::chat, n, prov), coord);
}

IntPoly misiurewicz_raw(int n, int t, int h, int tau, const DynOptions& opt) {
  check_n(n);
  check_positive("t", t);
  check_positive("h", h);
  if (tau <= 1 || n % tau != 0) {
    throw InvalidArgument("tau must divide n and exceed 1 (n = " + std::to_string(n) + ", tau = " + std::to_string(tau) + ")");
  }
  static detail::Memo<std::tuple<int, int, int, int>, IntPoly> memo;
  const IntPoly Pt = critical_orbit_poly(n, t, opt);
  const IntPoly Pth = critical_orbit_poly(n, t + h, opt);
  const IntPoly psi = cyclotomic(tau, "chat");
  enforce_cap(static_cast<long>(Pth.degree()) * psi.degree(), opt.degree_cap, "Misiurewicz polynomial");
  return memo.get({n, t, h, tau}, [&] {
    const int e = psi.degree();
    std::vector<IntPoly> a(e + 1), b(e + 1);
    a[0] = b[0] = IntPoly::constant(1, "chat");
    for (int i = 1; i <= e; ++i) {
      a[i] = a[i - 1] * Pth;
      b[i] = b[i - 1] * Pt;
    }
    IntPoly S({}, "chat");
    for (int i = 0; i <= e; ++i) {
      if (psi[i] != 0) S += psi[i] * (a[i] * b[e - i]);
    }
    return S;
  });
}

ParamPolynomial misiurewicz_poly(int n, int t, int h, int tau, Coordinate coord, const DynOptions& opt) {
  IntPoly S = misiurewicz_raw(n, t, h, tau, opt);
  for (int tp = 1; tp <= t; ++tp) {
    for (unsigned long hp : divisors(h)) {
      if (tp == t && static_cast<int>(hp) == h) continue;
      S = remove_common(S, misiurewicz_raw(n, tp, static_cast<int>(hp), tau, opt));
    }
  }
  // Parameters with P_t = P_{t+h} = 0 are critically periodic, not Misiurewicz.
  S = remove_common(S, critical_orbit_poly(n, t, opt));
  Provenance prov{"misiurewicz", {{"t", t}, {"h", h}, {"tau", tau}}};
  return route(make_param(squarefree_part(S), Coordinate::chat, n, prov), coord);
}

ParamPolynomial coord_transform(const ParamPolynomial& p, Coordinate target) {
  const int n = p.n;
  check_n(n);
  const Coordinate src = p.coordinate;
  auto step = [&](IntPoly q, Coordinate from, Coordinate to) -> IntPoly {
    if (from == to) return q;
    const BigRational nn(pow(BigInt(n), n));
    if ((from == Coordinate::c && to == Coordinate::chat) || (from == Coordinate::b && to == Coordinate::bhat)) {
      return squarefree_part(root_power_transform(q, n - 1));
    }
    if ((from == Coordinate::chat && to == Coordinate::c) || (from == Coordinate::bhat && to == Coordinate::b)) {
      return squarefree_part(q.inflate(n - 1));
    }
    if (from == Coordinate::chat && to == Coordinate::bhat) return root_scale_transform(q, nn);
    if (from == Coordinate::bhat && to == Coordinate::chat) return root_scale_transform(q, 1 / nn);
    if (n == 2 && from == Coordinate::c && to == Coordinate::b) return root_scale_transform(q, BigRational(4));
    if (n == 2 && from == Coordinate::b && to == Coordinate::c) return root_scale_transform(q, BigRational(1, 4));
    throw InvalidArgument("no rational transform from " + coordinate_name(from) + " to " + coordinate_name(to) +
                          " for n = " + std::to_string(n) + "; route through chat/bhat");
  };
  IntPoly q = p.poly;
  if (src == target) {
    q = squarefree_part(q);
  } else if ((src == Coordinate::c && target == Coordinate::b) || (src == Coordinate::b && target == Coordinate::c)) {
    q = step(q, src, target);
  } else {
    // Path through the hatted invariants: src -> hat(src) -> hat(target) -> target.
    auto hat = [](Coordinate x) {
      return (x == Coordinate::c || x == Coordinate::chat) ? Coordinate::chat : Coordinate::bhat;
    };
    Coordinate cur = src;
    for (Coordinate next : {hat(src), hat(target), target}) {
      q = step(q, cur, next);
      cur = next;
    }
  }
  ParamPolynomial out = p;
  out.poly = named(normalized(q), target);
  out.coordinate = target;
  return out;
}

ParamPolynomial fixed_point_parabolic(int n, int m) {
  check_n(n);
  check_positive("m", m);
  // Res_mu(Psi_m(mu), B - mu (n - mu)^(n-1)).
  const IntPoly psi = cyclotomic(m, "mu");
  std::vector<IntPoly> arows;
  for (const auto& v : psi.coeffs()) arows.push_back(IntPoly::constant(v, "B"));
  const BiPoly A("mu", "B", arows);
  const IntPoly g = IntPoly({0, 1}, "mu") * IntPoly({n, -1}, "mu").pow(n - 1);
  std::vector<IntPoly> brows;
  for (const auto& v : g.coeffs()) brows.push_back(IntPoly::constant(-v, "B"));
  if (brows.empty()) brows.push_back(IntPoly({}, "B"));
  brows[0] += IntPoly({0, 1}, "B");
  const BiPoly Bp("mu", "B", brows);
  IntPoly r = resultant(A, Bp, "mu");
  Provenance prov{"fixed_point", {{"m", m}}};
  return make_param(squarefree_part(r), Coordinate::bhat, n, prov);
}

nlohmann::json to_json(const Provenance& p) {
  nlohmann::json j = {{"kind", p.kind}};
  for (const auto& [k, v] : p.params) j[k] = v;
  return j;
}

nlohmann::json to_json(const ParamPolynomial& p) {
  nlohmann::json j = to_json(p.poly);
  j["coordinate"] = coordinate_name(p.coordinate);
  j["n"] = p.n;
  j["provenance"] = to_json(p.provenance);
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

}  // namespace unicrit
