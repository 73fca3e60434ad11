#pragma once

#include <mpfr.h>

#include <climits>
#include <string>

#include "unicrit/bigint.hpp"

namespace unicrit::mp {

/// MPFR real with an explicit precision carried by each value. Binary
/// operations round to the larger of the two operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 53);
  Real(double v, mpfr_prec_t prec);
  Real(const BigInt& v, mpfr_prec_t prec);
  Real(const BigRational& v, mpfr_prec_t prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  static Real parse(const std::string& s, mpfr_prec_t prec);

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent() const { return is_zero() ? LONG_MIN / 2 : mpfr_get_exp(v_); }

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long k);
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }

  static Real pi(mpfr_prec_t prec);
  /// Copy rounded to another precision.
  Real rounded(mpfr_prec_t prec) const;

 private:
  mpfr_t v_;
};

Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real cos(const Real& a);
Real sin(const Real& a);
Real abs(const Real& a);
Real hypot(const Real& a, const Real& b);
Real atan2(const Real& y, const Real& x);
/// a * 2^e
Real ldexp(const Real& a, long e);

struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 53) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

  mpfr_prec_t prec() const { return re.prec(); }
  Real abs() const { return hypot(re, im); }
  Complex conj() const { return {re, -im}; }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Complex operator-() const { return {-re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& k) { return {a.re * k, a.im * k}; }
  friend Complex operator*(const Complex& a, long k) { return {a.re * k, a.im * k}; }
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator+(const Complex& a, const Real& k) { return {a.re + k, a.im}; }
  Complex& operator+=(const Complex& b) { return *this = *this + b; }
  Complex& operator-=(const Complex& b) { return *this = *this - b; }
  Complex& operator*=(const Complex& b) { return *this = *this * b; }

  Complex pow(unsigned long e) const;
  Complex rounded(mpfr_prec_t p) const { return {re.rounded(p), im.rounded(p)}; }
};

/// r e^(i phi)
Complex polar(const Real& r, const Real& phi);
/// e^(2 pi i num/den), with the angle reduced exactly before rounding.
Complex unit_root(const BigInt& num, const BigInt& den, mpfr_prec_t prec);
Real distance(const Complex& a, const Complex& b);

}  // namespace unicrit::mp
