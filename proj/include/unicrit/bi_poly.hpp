#pragma once

#include <string>
#include <vector>

#include "unicrit/int_poly.hpp"

namespace unicrit {

/// Dense bivariate integer polynomial. Row i holds the coefficient of
/// outer^i, itself a polynomial in the inner variable.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(std::string outer, std::string inner, std::vector<IntPoly> rows);

  /// p, a polynomial in `inner`, viewed as constant in `outer`.
  static BiPoly from_inner(const IntPoly& p, std::string outer);
  /// p, a polynomial in `outer`, viewed as constant in `inner`.
  static BiPoly from_outer(const IntPoly& p, std::string inner);

  const std::string& outer() const { return outer_; }
  const std::string& inner() const { return inner_; }
  int degree_outer() const { return static_cast<int>(rows_.size()) - 1; }
  int degree_inner() const;
  int degree_in(const std::string& var) const;
  bool is_zero() const { return rows_.empty(); }
  const std::vector<IntPoly>& rows() const { return rows_; }
  const IntPoly& row(std::size_t i) const;
  BigInt coeff(std::size_t outer_deg, std::size_t inner_deg) const;

  /// Same polynomial with the roles of the variables exchanged.
  BiPoly transposed() const;
  /// Transposed if needed so that `var` is the outer variable.
  BiPoly with_outer(const std::string& var) const;

  IntPoly eval_outer(const BigInt& v) const;  // polynomial in inner
  IntPoly eval_inner(const BigInt& v) const;  // polynomial in outer
  IntPoly leading_outer() const;               // top row, in inner
  BigInt operator()(const BigInt& outer_value, const BigInt& inner_value) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const BigInt& k);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }

  BiPoly pow(unsigned e) const;
  BiPoly derivative_outer() const;
  BiPoly derivative_inner() const;
  BigInt content() const;

  std::string to_string() const;

 private:
  void trim();

  std::string outer_ = "y";
  std::string inner_ = "x";
  std::vector<IntPoly> rows_;
};

/// a / b where b is monic (leading coefficient +-1) in its outer variable.
/// Throws InconsistencyError if the division leaves a remainder.
BiPoly divide_exact_monic(const BiPoly& a, const BiPoly& b);

}  // namespace unicrit
