#include "unicrit/detail/mp.hpp"

#include <algorithm>
#include <climits>
#include <vector>

#include "unicrit/errors.hpp"

namespace unicrit::mp {

namespace {

mpfr_prec_t maxp(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const BigInt& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const BigRational& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.prec());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const {
  if (is_zero()) return "0";
  std::vector<char> buf(digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return buf.data();
}

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw InvalidArgument("not a decimal number: " + s);
  return r;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(maxp(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(maxp(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(maxp(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(maxp(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long k) {
  Real r(a.prec());
  mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::rounded(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

#define UNICRIT_MP_UNARY(name, fn)        \
  Real name(const Real& a) {              \
    Real r(a.prec());                     \
    fn(r.get(), a.get(), MPFR_RNDN);      \
    return r;                             \
  }

UNICRIT_MP_UNARY(sqrt, mpfr_sqrt)
UNICRIT_MP_UNARY(exp, mpfr_exp)
UNICRIT_MP_UNARY(log, mpfr_log)
UNICRIT_MP_UNARY(cos, mpfr_cos)
UNICRIT_MP_UNARY(sin, mpfr_sin)
UNICRIT_MP_UNARY(abs, mpfr_abs)

#undef UNICRIT_MP_UNARY

Real hypot(const Real& a, const Real& b) {
  Real r(maxp(a, b));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(maxp(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real ldexp(const Real& a, long e) {
  Real r(a.prec());
  mpfr_mul_2si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}

Complex operator/(const Complex& a, const Complex& b) {
  // Scale by the larger component of b to avoid overflow in |b|^2.
  if (abs(b.re) < abs(b.im)) {
    Real t = b.re / b.im;
    Real d = b.re * t + b.im;
    return {(a.re * t + a.im) / d, (a.im * t - a.re) / d};
  }
  Real t = b.im / b.re;
  Real d = b.im * t + b.re;
  return {(a.im * t + a.re) / d, (a.im - a.re * t) / d};
}

Complex Complex::pow(unsigned long e) const {
  Complex result(Real(1.0, prec()), Real(prec())), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Complex polar(const Real& r, const Real& phi) { return {r * cos(phi), r * sin(phi)}; }

Complex unit_root(const BigInt& num, const BigInt& den, mpfr_prec_t prec) {
  BigInt k = num % den;
  if (k < 0) k += den;
  BigRational frac(k, den);
  frac.canonicalize();
  Real phi = Real(frac, prec) * Real::pi(prec) * 2;
  return polar(Real(1.0, prec), phi);
}

Real distance(const Complex& a, const Complex& b) { return (a - b).abs(); }

}  // namespace unicrit::mp
