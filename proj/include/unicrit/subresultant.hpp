#pragma once

// Subresultant polynomial remainder sequence over an integral domain R.
// Polynomials are coefficient vectors in ascending degree order; R needs
// +, -, *, equality with zero, and exact division supplied by RingOps<R>.

#include <utility>
#include <vector>

#include "unicrit/bigint.hpp"
#include "unicrit/int_poly.hpp"

namespace unicrit::prs {

template <class R>
struct RingOps;

template <>
struct RingOps<BigInt> {
  static BigInt one() { return 1; }
  static bool is_zero(const BigInt& a) { return a == 0; }
  static BigInt exact_div(const BigInt& a, const BigInt& b) { return divexact(a, b); }
};

template <>
struct RingOps<IntPoly> {
  static IntPoly one() { return IntPoly::constant(1); }
  static bool is_zero(const IntPoly& a) { return a.is_zero(); }
  static IntPoly exact_div(const IntPoly& a, const IntPoly& b) { return divide_exact(a, b); }
};

template <class R>
using Coeffs = std::vector<R>;

template <class R>
int degree(const Coeffs<R>& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && RingOps<R>::is_zero(p[d])) --d;
  return d;
}

template <class R>
void trim(Coeffs<R>& p) {
  while (!p.empty() && RingOps<R>::is_zero(p.back())) p.pop_back();
}

template <class R>
R ring_pow(R base, unsigned e) {
  R result = RingOps<R>::one();
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// lc(b)^(deg a - deg b + 1) a mod b
template <class R>
Coeffs<R> pseudo_remainder(Coeffs<R> a, const Coeffs<R>& b) {
  const int db = degree(b);
  const R& lc = b[db];
  int da = degree(a);
  const int steps = da - db + 1;
  int done = 0;
  while (da >= db) {
    R top = a[da];
    for (int i = 0; i <= da; ++i) a[i] = a[i] * lc;
    for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - top * b[j];
    ++done;
    da = degree(a);
    // a[da_old] is now exactly zero; trailing zero coefficients may make da drop further.
  }
  a.resize(std::max(db, 0));
  trim(a);
  if (done < steps) {
    R scale = ring_pow(lc, static_cast<unsigned>(steps - done));
    for (auto& v : a) v = v * scale;
  }
  return a;
}

/// Resultant Res(a, b) by the subresultant PRS. Zero if either input is zero.
template <class R>
R resultant(Coeffs<R> a, Coeffs<R> b) {
  using Ops = RingOps<R>;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return R{};
  int da = degree(a), db = degree(b);
  int sign = 1;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if ((da & 1) && (db & 1)) sign = -sign;
  }
  if (db == 0) {
    R r = ring_pow(b[0], static_cast<unsigned>(da));
    return sign < 0 ? R{} - r : r;
  }
  R g = Ops::one(), h = Ops::one();
  while (true) {
    const int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    Coeffs<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    da = db;
    if (r.empty()) return R{};
    R divisor = g * ring_pow(h, static_cast<unsigned>(delta));
    for (auto& v : r) v = Ops::exact_div(v, divisor);
    b = std::move(r);
    db = degree(b);
    g = a[da];
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = Ops::exact_div(ring_pow(g, static_cast<unsigned>(delta)), ring_pow(h, static_cast<unsigned>(delta - 1)));
    }
    if (db <= 0) break;
  }
  R out;
  if (da == 1) {
    out = b[0];
  } else {
    out = Ops::exact_div(ring_pow(b[0], static_cast<unsigned>(da)), ring_pow(h, static_cast<unsigned>(da - 1)));
  }
  return sign < 0 ? R{} - out : out;
}

/// Last nonzero subresultant-PRS remainder; a gcd up to a constant factor of R.
template <class R>
Coeffs<R> gcd_prs(Coeffs<R> a, Coeffs<R> b) {
  using Ops = RingOps<R>;
  trim(a);
  trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  int da = degree(a), db = degree(b);
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
  }
  R g = Ops::one(), h = Ops::one();
  while (db > 0) {
    const int delta = da - db;
    Coeffs<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    da = db;
    if (r.empty()) return a;
    R divisor = g * ring_pow(h, static_cast<unsigned>(delta));
    for (auto& v : r) v = Ops::exact_div(v, divisor);
    b = std::move(r);
    db = degree(b);
    g = a[da];
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = Ops::exact_div(ring_pow(g, static_cast<unsigned>(delta)), ring_pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  return b;  // nonzero constant: gcd is trivial
}

}  // namespace unicrit::prs
