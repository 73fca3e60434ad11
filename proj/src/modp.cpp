#include "unicrit/detail/modp.hpp"

#include <algorithm>

#include "unicrit/errors.hpp"

namespace unicrit::modp {

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::inv(u64 a) const {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_tuple(nt, t - q * nt);
    std::tie(r, nr) = std::make_tuple(nr, r - q * nr);
  }
  if (r != 1) throw InvalidArgument("element not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

u64 Field::reduce(const BigInt& v) const {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const IntPoly& f, const Field& F) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.reduce(f[i]);
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  // p < 2^31 so each product is < 2^62; accumulate 3 products before reducing.
  std::vector<u64> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const u64 ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      u64 v = acc[i + j] + ai * b[j];
      acc[i + j] = v >= (u64(1) << 63) ? v % F.p : v;
    }
  }
  for (auto& v : acc) v %= F.p;
  trim(acc);
  return acc;
}

Poly scale(const Poly& a, u64 k, const Field& F) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], k);
  trim(r);
  return r;
}

Poly monic(const Poly& a, const Field& F) {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, F.inv(a.back()), F);
}

Poly derivative(const Poly& a, const Field& F) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, const Field& F) {
  if (b.empty()) throw InvalidArgument("division by zero polynomial mod p");
  r = a;
  trim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  const std::size_t db = b.size() - 1;
  const u64 inv = F.inv(b.back());
  q.assign(r.size() - db, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    u64 c = F.mul(r[i + db], inv);
    q[i] = c;
    if (c == 0) continue;
    const u64 nc = F.p - c;
    for (std::size_t j = 0; j <= db; ++j) r[i + j] = (r[i + j] + nc * b[j]) % F.p;
  }
  r.resize(db);
  trim(r);
  trim(q);
}

Poly rem(const Poly& a, const Poly& b, const Field& F) {
  Poly q, r;
  divmod(a, b, q, r, F);
  return r;
}

Poly quo(const Poly& a, const Poly& b, const Field& F) {
  Poly q, r;
  divmod(a, b, q, r, F);
  return q;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, const Field& F) { return rem(mul(a, b, F), m, F); }

Poly powmod(Poly base, const BigInt& e, const Poly& m, const Field& F) {
  Poly result{1};
  base = rem(base, m, F);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return rem(result, m, F);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, m, F);
  }
  return result;
}

Poly gcd(Poly a, Poly b, const Field& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b, const Field& F) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r, F);
    Poly s2 = sub(s0, mul(q, s1, F), F);
    Poly t2 = sub(t0, mul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const u64 inv = F.inv(r0.back());
  return {scale(r0, inv, F), scale(s0, inv, F), scale(t0, inv, F)};
}

u64 LargePrimeStream::next() {
  mpz_t tmp;
  mpz_init(tmp);
  // Walk downwards through primes below 2^31.
  do {
    cur_ -= 1;
  } while (mpz_probab_prime_p(cur_.get_mpz_t(), 30) == 0);
  mpz_clear(tmp);
  return cur_.get_ui();
}

bool is_prime(u64 n) { return mpz_probab_prime_p(BigInt(static_cast<unsigned long>(n)).get_mpz_t(), 30) != 0; }

}  // namespace unicrit::modp
