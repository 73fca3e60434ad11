#include "unicrit/factor.hpp"

#include <algorithm>
#include <bitset>
#include <random>

#include "unicrit/detail/modp.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/polycore.hpp"

namespace unicrit {

namespace {

using modp::Field;
using modp::Poly;
using modp::u64;

// ---- factorization mod p -------------------------------------------------

// Rows x^(i*p) mod f, i < deg f.
std::vector<Poly> frobenius_matrix(const Poly& f, const Field& F) {
  const int d = modp::degree(f);
  std::vector<Poly> rows(d);
  const Poly xp = modp::powmod(Poly{0, 1}, BigInt(static_cast<unsigned long>(F.p)), f, F);
  rows[0] = Poly{1};
  for (int i = 1; i < d; ++i) rows[i] = modp::mulmod(rows[i - 1], xp, f, F);
  return rows;
}

Poly apply_frobenius(const std::vector<Poly>& Q, const Poly& h, const Field& F) {
  const std::size_t d = Q.size();
  std::vector<u64> acc(d, 0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    for (std::size_t j = 0; j < Q[i].size(); ++j) acc[j] = (acc[j] + h[i] * Q[i][j]) % F.p;
  }
  modp::trim(acc);
  return acc;
}

// Distinct-degree factorization of a monic squarefree f: (product of all degree-k factors, k).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, const Field& F) {
  std::vector<std::pair<Poly, int>> out;
  const auto Q = frobenius_matrix(f, F);
  Poly rest = f;
  Poly h{0, 1};
  for (int k = 1; 2 * k <= modp::degree(rest); ++k) {
    h = apply_frobenius(Q, h, F);
    Poly g = modp::gcd(rest, modp::sub(h, Poly{0, 1}, F), F);
    if (modp::degree(g) > 0) {
      out.emplace_back(g, k);
      rest = modp::quo(rest, g, F);
    }
  }
  if (modp::degree(rest) > 0) out.emplace_back(rest, modp::degree(rest));
  return out;
}

// Cantor-Zassenhaus splitting of g, a product of distinct monic irreducibles of degree k.
void equal_degree(const Poly& g, int k, const Field& F, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int d = modp::degree(g);
  if (d == k) {
    out.push_back(g);
    return;
  }
  BigInt e = pow(BigInt(static_cast<unsigned long>(F.p)), k);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, F.p - 1);
  while (true) {
    Poly a(d);
    for (auto& v : a) v = coef(rng);
    modp::trim(a);
    if (modp::degree(a) < 1) continue;
    Poly b = modp::powmod(a, e, g, F);
    Poly s = modp::gcd(g, modp::sub(b, Poly{1}, F), F);
    const int ds = modp::degree(s);
    if (ds > 0 && ds < d) {
      equal_degree(s, k, F, rng, out);
      equal_degree(modp::quo(g, s, F), k, F, rng, out);
      return;
    }
  }
}

std::vector<Poly> factor_mod(const Poly& f, const Field& F, const std::vector<std::pair<Poly, int>>& ddf) {
  std::mt19937_64 rng(0x5eed);
  std::vector<Poly> out;
  for (const auto& [g, k] : ddf) equal_degree(g, k, F, rng, out);
  (void)f;
  return out;
}

// ---- arithmetic mod M = p^k on integer polynomials ------------------------

IntPoly reduce_mod(const IntPoly& a, const BigInt& m) {
  std::vector<BigInt> c(a.coeffs());
  for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c), a.var());
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const BigInt& m) { return reduce_mod(a * b, m); }

// a = q*b + r mod m for b monic mod m.
std::pair<IntPoly, IntPoly> divmod_monic_mod(const IntPoly& a, const IntPoly& b, const BigInt& m) {
  IntPoly bm = reduce_mod(b, m);
  if (bm.leading() != 1) throw InconsistencyError("divmod_monic_mod: divisor not monic");
  const int db = bm.degree();
  std::vector<BigInt> r = reduce_mod(a, m).coeffs();
  if (static_cast<int>(r.size()) - 1 < db) return {IntPoly({}, a.var()), IntPoly(std::move(r), a.var())};
  std::vector<BigInt> q(r.size() - db);
  const auto& bc = bm.coeffs();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    const BigInt c = r[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j < db; ++j) r[i - db + j] -= c * bc[j];
    r[i] = 0;
  }
  r.resize(db);
  return {IntPoly(std::move(q), a.var()), reduce_mod(IntPoly(std::move(r), a.var()), m)};
}

IntPoly to_int(const Poly& a) {
  std::vector<BigInt> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = static_cast<unsigned long>(a[i]);
  return IntPoly(std::move(c));
}

Poly product_mod(const std::vector<Poly>& fs, std::size_t lo, std::size_t hi, const Field& F) {
  Poly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = modp::mul(r, fs[i], F);
  return r;
}

// Quadratic Hensel step for monic f = g*h: lifts g, h, s, t from modulus m to m2 (m2 | m^2).
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const BigInt& m2) {
  IntPoly e = reduce_mod(f - g * h, m2);
  auto [q, r] = divmod_monic_mod(mul_mod(s, e, m2), h, m2);
  IntPoly g2 = reduce_mod(g + t * e + q * g, m2);
  IntPoly h2 = reduce_mod(h + r, m2);
  IntPoly b = reduce_mod(s * g2 + t * h2 - IntPoly::constant(1), m2);
  auto [c, d] = divmod_monic_mod(mul_mod(s, b, m2), h2, m2);
  s = reduce_mod(s - d, m2);
  t = reduce_mod(t - t * b - c * g2, m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts the monic mod-p factorization of F (monic modulo p^k) to modulo p^k.
void lift_tree(const IntPoly& Fm, const std::vector<Poly>& facs, const Field& Fp, unsigned k,
               std::vector<IntPoly>& out) {
  const BigInt p = static_cast<unsigned long>(Fp.p);
  const BigInt M = pow(p, k);
  if (facs.size() == 1) {
    out.push_back(reduce_mod(Fm, M));
    return;
  }
  const std::size_t half = facs.size() / 2;
  const Poly G0 = product_mod(facs, 0, half, Fp);
  const Poly H0 = product_mod(facs, half, facs.size(), Fp);
  auto [one, s0, t0] = modp::ext_gcd(G0, H0, Fp);
  if (one != Poly{1}) throw InconsistencyError("hensel: factors not coprime mod p");
  IntPoly g = to_int(G0), h = to_int(H0), s = to_int(s0), t = to_int(t0);
  unsigned e = 1;
  while (e < k) {
    const unsigned e2 = std::min(2 * e, k);
    const BigInt m2 = pow(p, e2);
    hensel_step(reduce_mod(Fm, m2), g, h, s, t, m2);
    e = e2;
  }
  std::vector<Poly> left(facs.begin(), facs.begin() + half), right(facs.begin() + half, facs.end());
  lift_tree(g, left, Fp, k, out);
  lift_tree(h, right, Fp, k, out);
}

BigInt isqrt_ceil(const BigInt& v) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) r += 1;
  return r;
}

// Subset sums of a degree multiset, as a bitset over 0..deg.
std::vector<bool> subset_sums(const std::vector<int>& degs, int total) {
  std::vector<bool> ok(total + 1, false);
  ok[0] = true;
  for (int d : degs)
    for (int s = total; s >= d; --s)
      if (ok[s - d]) ok[s] = true;
  return ok;
}

struct PrimeChoice {
  Field F{0};
  std::vector<std::pair<Poly, int>> ddf;
  std::size_t nfactors = 0;
};

std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int d = f.degree();
  // Pick primes, tracking the degrees a rational factor could have.
  std::vector<bool> allowed(d + 1, true);
  PrimeChoice best;
  int good = 0;
  BigInt pr = 3;
  for (int tried = 0; good < 7 && tried < 400; ++tried) {
    mpz_nextprime(pr.get_mpz_t(), pr.get_mpz_t());
    const Field F{pr.get_ui()};
    if (F.reduce(f.leading()) == 0) continue;
    Poly fp = modp::reduce(f, F);
    if (modp::degree(modp::gcd(fp, modp::derivative(fp, F), F)) > 0) continue;
    fp = modp::monic(fp, F);
    auto ddf = distinct_degree(fp, F);
    std::vector<int> degs;
    std::size_t count = 0;
    for (const auto& [g, k] : ddf) {
      const int cnt = modp::degree(g) / k;
      count += cnt;
      for (int i = 0; i < cnt; ++i) degs.push_back(k);
    }
    auto sums = subset_sums(degs, d);
    for (int i = 0; i <= d; ++i) allowed[i] = allowed[i] && sums[i];
    ++good;
    if (best.F.p == 0 || count < best.nfactors) best = PrimeChoice{F, std::move(ddf), count};
    bool irreducible = true;
    for (int i = 1; i < d; ++i) irreducible = irreducible && !allowed[i];
    if (irreducible || best.nfactors == 1) return {f};
  }
  if (best.F.p == 0) throw NonConvergence("factor: no suitable prime found");

  const Field& F = best.F;
  const Poly fp = modp::monic(modp::reduce(f, F), F);
  std::vector<Poly> facs = factor_mod(fp, F, best.ddf);
  std::sort(facs.begin(), facs.end(), [](const Poly& a, const Poly& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  // Coefficient bound on lc(f) * (any factor), then lift past twice that.
  BigInt norm2sq = 0;
  for (const auto& c : f.coeffs()) norm2sq += c * c;
  const BigInt lc = f.leading();
  const BigInt bound = 2 * abs(lc) * (BigInt(1) << d) * isqrt_ceil(norm2sq) + 1;
  const BigInt p = static_cast<unsigned long>(F.p);
  unsigned k = 1;
  BigInt M = p;
  while (M <= bound) {
    M *= p;
    ++k;
  }
  BigInt lcinv;
  mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
  const IntPoly Fm = reduce_mod(f * lcinv, M);
  std::vector<IntPoly> lifted;
  lift_tree(Fm, facs, F, k, lifted);

  // Subset recombination.
  std::vector<IntPoly> result;
  IntPoly cur = f;
  std::vector<IntPoly> rem = lifted;
  for (std::size_t sz = 1; 2 * sz <= rem.size();) {
    bool found = false;
    std::vector<std::size_t> idx(sz);
    for (std::size_t i = 0; i < sz; ++i) idx[i] = i;
    const int dcur = cur.degree();
    while (true) {
      int deg = 0;
      for (auto i : idx) deg += rem[i].degree();
      const BigInt lcc = cur.leading();
      if (deg < static_cast<int>(allowed.size()) && allowed[deg] && allowed[dcur - deg >= 0 ? dcur - deg : 0]) {
        // Constant-term pre-test.
        BigInt c0 = lcc;
        for (auto i : idx) c0 = c0 * rem[i].constant_term() % M;
        c0 = symmetric_mod(c0, M);
        const BigInt cur0 = lcc * cur.constant_term();
        if (c0 == 0 ? cur0 == 0 : divides(c0, cur0)) {
          IntPoly g = IntPoly::constant(lcc);
          for (auto i : idx) g = mul_mod(g, rem[i], M);
          std::vector<BigInt> sym(g.coeffs());
          for (auto& v : sym) v = symmetric_mod(v, M);
          IntPoly cand = IntPoly(std::move(sym), f.var()).primitive_part();
          if (auto q = exact_quotient(cur, cand)) {
            result.push_back(cand);
            cur = *q;
            std::vector<IntPoly> keep;
            for (std::size_t i = 0, j = 0; i < rem.size(); ++i) {
              if (j < idx.size() && idx[j] == i) {
                ++j;
                continue;
              }
              keep.push_back(rem[i]);
            }
            rem = std::move(keep);
            found = true;
            break;
          }
        }
      }
      // Next combination.
      std::size_t i = sz;
      while (i > 0 && idx[i - 1] == rem.size() - sz + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < sz; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++sz;
  }
  if (cur.degree() > 0) result.push_back(cur.primitive_part());
  return result;
}

}  // namespace

bool factor_order_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<int> factor_degrees_mod(const IntPoly& p, unsigned long prime) {
  const Field F{prime};
  Poly fp = modp::reduce(p, F);
  if (modp::degree(fp) != p.degree()) throw InvalidArgument("prime divides the leading coefficient");
  if (modp::degree(modp::gcd(fp, modp::derivative(fp, F), F)) > 0) {
    throw InvalidArgument("polynomial is not squarefree modulo the prime");
  }
  std::vector<int> degs;
  for (const auto& [g, k] : distinct_degree(modp::monic(fp, F), F)) {
    for (int i = 0; i < modp::degree(g) / k; ++i) degs.push_back(k);
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::vector<IntPoly> factor_squarefree(const IntPoly& f0) {
  IntPoly f = f0.primitive_part();
  std::vector<IntPoly> out;
  if (f.degree() <= 0) return out;
  if (f.constant_term() == 0) {
    out.push_back(IntPoly::variable(f.var()));
    f = divide_exact(f, IntPoly::variable(f.var()));
    if (f.degree() <= 0) return out;
  }
  if (f.degree() == 1) {
    out.push_back(f);
  } else {
    for (auto& g : zassenhaus(f)) out.push_back(g.with_var(f0.var()));
  }
  std::sort(out.begin(), out.end(), factor_order_less);
  return out;
}

Factorization factor(const IntPoly& p) {
  if (p.is_zero()) throw InvalidArgument("factor of the zero polynomial");
  Factorization r;
  r.content = p.content();
  if (p.leading() < 0) r.content = -r.content;
  if (p.degree() == 0) return r;
  for (auto& [sq, mult] : squarefree_decomposition(p)) {
    for (auto& g : factor_squarefree(sq)) r.factors.push_back({g.with_var(p.var()), mult});
  }
  std::sort(r.factors.begin(), r.factors.end(), [](const Factor& a, const Factor& b) {
    if (factor_order_less(a.poly, b.poly)) return true;
    if (factor_order_less(b.poly, a.poly)) return false;
    return a.mult < b.mult;
  });
  return r;
}

IntPoly Factorization::expand(const std::string& var) const {
  IntPoly r = IntPoly::constant(content, var);
  for (const auto& f : factors) r *= f.poly.pow(f.mult);
  return r.with_var(var);
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) throw InvalidArgument("is_irreducible needs degree >= 1");
  Factorization f = factor(p);
  return f.factors.size() == 1 && f.factors[0].mult == 1 && abs(f.content) == 1;
}

NormValue norm_of_root(const IntPoly& p) {
  if (!p.is_monic()) throw InvalidArgument("norm_of_root needs a monic polynomial, got " + p.to_string());
  if (!is_irreducible(p)) throw InvalidArgument("norm_of_root needs an irreducible polynomial, got " + p.to_string());
  NormValue v;
  v.degree = p.degree();
  v.value = (v.degree % 2 == 0) ? p.constant_term() : BigInt(-p.constant_term());
  return v;
}

nlohmann::json to_json(const Factorization& f) {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& x : f.factors) fs.push_back({{"poly", to_json(x.poly)}, {"mult", x.mult}});
  return {{"content", to_decimal(f.content)}, {"factors", fs}};
}

nlohmann::json to_json(const NormValue& v) {
  return {{"value", to_decimal(v.value)}, {"abs", to_decimal(v.abs_value())}, {"degree", v.degree}};
}

}  // namespace unicrit
