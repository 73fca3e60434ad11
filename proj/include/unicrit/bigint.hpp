#pragma once

#include <gmpxx.h>

#include <string>

namespace unicrit {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline std::string to_decimal(const BigRational& v) { return v.get_str(10); }

BigInt parse_bigint(const std::string& text);

// Accepts "p/q" or an integer; the result is canonical.
BigRational parse_rational(const std::string& text);

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigRational pow(const BigRational& base, unsigned long exp) {
  BigRational r(pow(BigInt(base.get_num()), exp), pow(BigInt(base.get_den()), exp));
  r.canonicalize();
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const BigInt& d, const BigInt& v) {
  if (d == 0) return v == 0;
  return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline BigInt divexact(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Symmetric residue in (-m/2, m/2].
inline BigInt symmetric_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

}  // namespace unicrit
