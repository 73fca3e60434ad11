#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unicrit/bigint.hpp"
#include "unicrit/int_poly.hpp"

namespace unicrit {

/// Dense univariate polynomial over Q. Used for minimal polynomials and for
/// field arithmetic; anything that can live over Z should stay an IntPoly.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRational> coeffs, std::string var = "x");
  explicit RatPoly(const IntPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigRational& coeff(std::size_t i) const;
  const BigRational& leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }
  const std::vector<BigRational>& coeffs() const { return c_; }
  const std::string& var() const { return var_; }
  RatPoly with_var(std::string var) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const BigRational& k);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  RatPoly monic() const;
  bool has_integer_coeffs() const;
  /// Common denominator times this polynomial, as an integer polynomial (not made primitive).
  IntPoly clear_denominators(BigInt* scale = nullptr) const;
  BigRational operator()(const BigRational& x) const;
  std::string to_string() const;

 private:
  void trim();

  std::vector<BigRational> c_;
  std::string var_ = "x";
};

/// Euclidean division over Q.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

}  // namespace unicrit
