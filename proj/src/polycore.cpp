#include "unicrit/polycore.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "unicrit/detail/modp.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/subresultant.hpp"

namespace unicrit {

BigInt resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return prs::resultant<BigInt>(a.coeffs(), b.coeffs());
}

namespace {

std::pair<BiPoly, BiPoly> arrange_for_elimination(const BiPoly& a, const BiPoly& b, const std::string& eliminate) {
  BiPoly A = a.with_outer(eliminate);
  BiPoly B = b.with_outer(eliminate);
  if (A.inner() != B.inner()) {
    throw InvalidArgument("resultant: operands live in different variables (" + A.inner() + " vs " + B.inner() + ")");
  }
  if (A.degree_outer() < 1 || B.degree_outer() < 1) {
    throw InvalidArgument("resultant: operand is constant in the eliminated variable " + eliminate);
  }
  return {std::move(A), std::move(B)};
}

}  // namespace

BigInt interpolation_node(std::size_t i) {
  if (i == 0) return 0;
  const long k = static_cast<long>((i + 1) / 2);
  return (i & 1) ? BigInt(k) : BigInt(-k);
}

IntPoly resultant(const BiPoly& a, const BiPoly& b, const std::string& eliminate) {
  auto [A, B] = arrange_for_elimination(a, b, eliminate);
  const std::string& other = A.inner();
  const int da = A.degree_outer(), db = B.degree_outer();
  const int bound = da * std::max(B.degree_inner(), 0) + db * std::max(A.degree_inner(), 0);
  const IntPoly lca = A.leading_outer(), lcb = B.leading_outer();
  std::vector<BigInt> xs, ys;
  for (std::size_t i = 0; static_cast<int>(xs.size()) <= bound; ++i) {
    BigInt y0 = interpolation_node(i);
    if (lca(y0) == 0 || lcb(y0) == 0) continue;
    xs.push_back(y0);
    ys.push_back(resultant(A.eval_inner(y0), B.eval_inner(y0)));
  }
  return interpolate(xs, ys, other);
}

IntPoly resultant_prs(const BiPoly& a, const BiPoly& b, const std::string& eliminate) {
  auto [A, B] = arrange_for_elimination(a, b, eliminate);
  IntPoly r = prs::resultant<IntPoly>(A.rows(), B.rows());
  return r.with_var(A.inner());
}

IntPoly interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys, std::string var) {
  if (xs.size() != ys.size()) throw InvalidArgument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  if (n == 0) return IntPoly({}, std::move(var));
  // Newton divided differences.
  std::vector<BigRational> d(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      BigInt den = xs[i] - xs[i - j];
      if (den == 0) throw InvalidArgument("interpolate: repeated node");
      d[i] = (d[i] - d[i - 1]) / BigRational(den);
    }
  }
  std::vector<BigRational> p{d[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // p <- p*(x - xs[i]) + d[i]
    p.push_back(0);
    for (std::size_t k = p.size() - 1; k > 0; --k) p[k] = p[k - 1] - p[k] * xs[i];
    p[0] = d[i] - p[0] * xs[i];
  }
  std::vector<BigInt> out;
  out.reserve(p.size());
  for (const auto& v : p) {
    if (v.get_den() != 1) throw InconsistencyError("interpolate: result has non-integer coefficients");
    out.push_back(v.get_num());
  }
  return IntPoly(std::move(out), std::move(var));
}

IntPoly normalized(const IntPoly& p) { return p.is_zero() ? p : p.primitive_part(); }

IntPoly gcd_subresultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  const IntPoly pa = a.primitive_part(), pb = b.primitive_part();
  auto g = prs::gcd_prs<BigInt>(pa.coeffs(), pb.coeffs());
  return IntPoly(std::move(g), a.var()).primitive_part();
}

IntPoly gcd_modular(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  const IntPoly pa = a.primitive_part(), pb = b.primitive_part();
  if (pa.degree() == 0 || pb.degree() == 0) return IntPoly::constant(1, a.var());
  const BigInt gamma = gcd(pa.leading(), pb.leading());
  modp::LargePrimeStream primes;
  int best = std::min(pa.degree(), pb.degree()) + 1;
  std::vector<BigInt> acc;
  BigInt modulus = 1;
  IntPoly last;
  for (int attempts = 0; attempts < 10000; ++attempts) {
    const modp::Field F{primes.next()};
    if (F.reduce(pa.leading()) == 0 || F.reduce(pb.leading()) == 0) continue;
    modp::Poly g = modp::gcd(modp::reduce(pa, F), modp::reduce(pb, F), F);
    const int dg = modp::degree(g);
    if (dg == 0) return IntPoly::constant(1, a.var());
    if (dg > best) continue;  // unlucky prime
    g = modp::scale(g, F.reduce(gamma), F);
    g.resize(dg + 1, 0);
    if (dg < best) {
      best = dg;
      acc.assign(dg + 1, 0);
      for (int i = 0; i <= dg; ++i) acc[i] = static_cast<unsigned long>(g[i]);
      modulus = static_cast<unsigned long>(F.p);
      last = IntPoly();
      continue;
    }
    // CRT: acc mod modulus, g mod p.
    const BigInt p = static_cast<unsigned long>(F.p);
    const modp::u64 minv = F.inv(F.reduce(modulus));
    for (int i = 0; i <= dg; ++i) {
      modp::u64 cur = F.reduce(acc[i]);
      modp::u64 t = F.mul(F.sub(g[i], cur), minv);
      acc[i] += modulus * static_cast<unsigned long>(t);
    }
    modulus *= p;
    std::vector<BigInt> sym(dg + 1);
    for (int i = 0; i <= dg; ++i) sym[i] = symmetric_mod(acc[i], modulus);
    IntPoly cand = IntPoly(std::move(sym), a.var()).primitive_part();
    if (cand == last && exact_quotient(pa, cand) && exact_quotient(pb, cand)) return cand;
    last = std::move(cand);
  }
  throw NonConvergence("gcd_modular: prime budget exhausted");
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (std::max(a.degree(), b.degree()) <= 24 && std::max(a.max_coeff_bits(), b.max_coeff_bits()) <= 256) {
    return gcd_subresultant(a, b);
  }
  return gcd_modular(a, b);
}

IntPoly squarefree_part(const IntPoly& a) {
  if (a.is_zero()) throw InvalidArgument("squarefree_part of the zero polynomial");
  const IntPoly p = a.primitive_part();
  if (p.degree() <= 1) return p;
  const IntPoly g = gcd(p, p.derivative());
  return normalized(divide_exact(p, g));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a) {
  if (a.is_zero()) throw InvalidArgument("squarefree_decomposition of the zero polynomial");
  std::vector<std::pair<IntPoly, int>> out;
  const IntPoly f = a.primitive_part();
  if (f.degree() <= 0) return out;
  const IntPoly df = f.derivative();
  const IntPoly a0 = gcd(f, df);
  IntPoly b = divide_exact(f, a0);
  IntPoly c = divide_exact(df, a0);
  IntPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    IntPoly ai = d.is_zero() ? normalized(b) : gcd(b, d);
    b = divide_exact(b, ai);
    if (!d.is_zero()) c = divide_exact(d, ai);
    else c = IntPoly({}, f.var());
    d = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(std::move(ai), i);
  }
  return out;
}

std::vector<unsigned long> divisors(unsigned long m) {
  if (m == 0) throw InvalidArgument("divisors of 0");
  std::vector<unsigned long> lo, hi;
  for (unsigned long d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    lo.push_back(d);
    if (d != m / d) hi.push_back(m / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

int moebius(unsigned long k) {
  if (k == 0) throw InvalidArgument("moebius(0)");
  int mu = 1;
  for (unsigned long p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 0;
    mu = -mu;
  }
  if (k > 1) mu = -mu;
  return mu;
}

unsigned long euler_phi(unsigned long m) {
  if (m == 0) throw InvalidArgument("euler_phi(0)");
  unsigned long r = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

IntPoly cyclotomic(unsigned long m, std::string var) {
  if (m == 0) throw InvalidArgument("cyclotomic(0)");
  static std::mutex mu;
  static std::map<unsigned long, IntPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(m);
    if (it != memo.end()) return it->second.with_var(std::move(var));
  }
  IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
  for (unsigned long d : divisors(m)) {
    const int s = moebius(m / d);
    if (s == 0) continue;
    IntPoly f = IntPoly::monomial(1, d) - IntPoly::constant(1);
    (s > 0 ? num : den) *= f;
  }
  IntPoly r = divide_exact(num, den);
  {
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(m, r);
  }
  return r.with_var(std::move(var));
}

IntPoly root_power_transform(const IntPoly& p, unsigned k) {
  if (p.is_zero()) throw InvalidArgument("root_power_transform of the zero polynomial");
  if (k == 0) throw InvalidArgument("root_power_transform needs k >= 1");
  if (k == 1 || p.degree() <= 0) return normalized(p);
  // Res_y(p(y), x - y^k), sampled at integer x and interpolated (degree deg p in x).
  const int d = p.degree();
  std::vector<BigInt> xs, ys;
  for (int i = 0; i <= d; ++i) {
    BigInt x0 = interpolation_node(i);
    IntPoly g = IntPoly::constant(x0) - IntPoly::monomial(1, k);
    xs.push_back(x0);
    ys.push_back(resultant(p, g));
  }
  return normalized(interpolate(xs, ys, p.var()));
}

IntPoly root_scale_transform(const IntPoly& p, const BigRational& s) {
  if (s == 0) throw InvalidArgument("root_scale_transform: scale factor must be nonzero");
  if (p.is_zero()) throw InvalidArgument("root_scale_transform of the zero polynomial");
  // p(x/s) * u^d with s = u/v: coefficient a_i v^i u^(d-i).
  const BigInt u = s.get_num(), v = s.get_den();
  const int d = p.degree();
  std::vector<BigInt> out(d + 1);
  for (int i = 0; i <= d; ++i) out[i] = p[i] * pow(v, i) * pow(u, d - i);
  return normalized(IntPoly(std::move(out), p.var()));
}

nlohmann::json to_json(const IntPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_decimal(c));
  return {{"var", p.var()}, {"coeffs", coeffs}};
}

IntPoly int_poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw InvalidArgument("polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<BigInt> c;
  for (const auto& v : j["coeffs"]) {
    if (!v.is_string()) throw InvalidArgument("polynomial coefficients must be decimal strings");
    c.push_back(parse_bigint(v.get<std::string>()));
  }
  return IntPoly(std::move(c), j.value("var", std::string("x")));
}

}  // namespace unicrit
