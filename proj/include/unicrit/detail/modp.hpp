#pragma once

// Polynomial arithmetic over Z/pZ for word-sized primes p < 2^31.

#include <cstdint>
#include <tuple>
#include <vector>

#include "unicrit/bigint.hpp"
#include "unicrit/int_poly.hpp"

namespace unicrit::modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const { return a + b >= p ? a + b - p : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;
  u64 reduce(const BigInt& v) const;
};

void trim(Poly& a);
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const IntPoly& f, const Field& F);
Poly add(const Poly& a, const Poly& b, const Field& F);
Poly sub(const Poly& a, const Poly& b, const Field& F);
Poly mul(const Poly& a, const Poly& b, const Field& F);
Poly scale(const Poly& a, u64 k, const Field& F);
Poly monic(const Poly& a, const Field& F);
Poly derivative(const Poly& a, const Field& F);
/// a = q*b + r
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, const Field& F);
Poly rem(const Poly& a, const Poly& b, const Field& F);
Poly quo(const Poly& a, const Poly& b, const Field& F);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, const Field& F);
Poly powmod(Poly base, const BigInt& e, const Poly& m, const Field& F);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b, const Field& F);
/// Returns (g, s, t) with s*a + t*b = g monic.
std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b, const Field& F);

/// Primes p < 2^31, descending from the largest, as a deterministic stream.
class LargePrimeStream {
 public:
  u64 next();

 private:
  BigInt cur_ = BigInt(1) << 31;
};

bool is_prime(u64 n);

}  // namespace unicrit::modp
