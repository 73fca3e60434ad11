#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unicrit/bigint.hpp"

namespace unicrit {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order. The highest stored coefficient is nonzero
/// unless the polynomial is zero, in which case no coefficients are stored.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs, std::string var = "x");
  IntPoly(std::initializer_list<long> coeffs, std::string var = "x");

  static IntPoly constant(const BigInt& c, std::string var = "x");
  static IntPoly monomial(const BigInt& c, std::size_t degree, std::string var = "x");
  static IntPoly variable(std::string var = "x");

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const BigInt& coeff(std::size_t i) const;
  const BigInt& operator[](std::size_t i) const { return coeff(i); }
  const BigInt& leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }
  const BigInt& constant_term() const { return coeff(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const std::string& var() const { return var_; }
  IntPoly with_var(std::string var) const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& k);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& k) { return a *= k; }
  friend IntPoly operator*(const BigInt& k, IntPoly a) { return a *= k; }
  // Coefficients only; the variable name is presentation.
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  BigInt content() const;
  /// Primitive part with positive leading coefficient.
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  IntPoly shifted(std::size_t k) const;  // multiplied by x^k
  IntPoly pow(unsigned e) const;
  IntPoly compose(const IntPoly& inner) const;
  IntPoly reversed() const;
  // p(x) -> p(x^k)
  IntPoly inflate(unsigned k) const;
  IntPoly divexact_scalar(const BigInt& k) const;
  IntPoly mod_scalar(const BigInt& m) const;  // symmetric residues

  BigInt operator()(const BigInt& x) const;
  BigRational operator()(const BigRational& x) const;

  std::size_t max_coeff_bits() const;
  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> c_;
  std::string var_ = "x";
};

/// Quotient a/b when it exists in Z[x], nullopt otherwise.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// Like exact_quotient but throws InconsistencyError on a remainder.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// Division by a polynomial with unit leading coefficient: a = q*b + r.
std::pair<IntPoly, IntPoly> divmod_unit(const IntPoly& a, const IntPoly& b);

/// lc(b)^(deg a - deg b + 1) * a = q*b + r.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b);

/// Kronecker-substitution product; exposed so tests can compare it with the schoolbook route.
IntPoly multiply_kronecker(const IntPoly& a, const IntPoly& b);
IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b);

}  // namespace unicrit
