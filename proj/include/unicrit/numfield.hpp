#pragma once

#include <json.hpp>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "unicrit/bigint.hpp"
#include "unicrit/int_poly.hpp"
#include "unicrit/rat_poly.hpp"

namespace unicrit {

/// Q[x]/(m) for a monic irreducible m.
class NumberField {
 public:
  /// Accepts any nonconstant integer polynomial whose primitive part is irreducible.
  explicit NumberField(const IntPoly& defining);

  int degree() const { return modulus_.degree(); }
  const RatPoly& modulus() const { return modulus_; }
  /// Primitive integer form of the modulus, positive leading coefficient.
  const IntPoly& defining_poly() const { return defining_; }

 private:
  IntPoly defining_;
  RatPoly modulus_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const IntPoly& defining);

class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<BigRational> coords);

  static FieldElement from_rational(FieldPtr field, const BigRational& v);
  static FieldElement generator(FieldPtr field);
  /// Reduces p modulo the field's modulus.
  static FieldElement from_poly(FieldPtr field, const RatPoly& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<BigRational>& coords() const { return coords_; }
  RatPoly to_poly() const;
  bool is_zero() const;
  bool is_rational() const;
  std::string to_string() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const BigRational& k);
  friend FieldElement operator+(const FieldElement& a, const BigRational& k);
  /// Throws InvalidArgument when dividing by zero.
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const BigRational& k);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement pow(unsigned long e) const;
  FieldElement inverse() const;

 private:
  FieldPtr field_;
  std::vector<BigRational> coords_;
};

/// Characteristic polynomial of multiplication by e, monic of degree d.
RatPoly characteristic_polynomial(const FieldElement& e, const std::string& var = "y");
RatPoly minimal_polynomial(const FieldElement& e, const std::string& var = "y");

/// Norm and trace from K down to Q.
std::pair<BigRational, BigRational> norm_and_trace(const FieldElement& e);

struct IntegralityCertificate {
  RatPoly minpoly;
  bool is_integer = false;
  BigRational norm;  // norm of e over Q(e), i.e. from its minimal polynomial
  bool is_unit = false;
  std::string context;
};

IntegralityCertificate is_algebraic_integer(const FieldElement& e, std::string context = "");
bool is_unit(const FieldElement& e);

/// gcd(|Norm(e)|, n) = 1 for e a root of the monic integer polynomial minpoly.
bool prime_to_n_test(const IntPoly& minpoly, int n);
bool prime_to_n_test(const FieldElement& e, int n);

struct PeriodicOrbit {
  IntPoly factor;                   // irreducible factor of Phi_h(c, z)
  FieldPtr field;                   // Q(z) = Q[z]/(factor)
  std::vector<FieldElement> points; // z_1 = z, z_{j+1} = z_j^n + c
  FieldElement multiplier;          // prod n z_j^(n-1)
};

/// Phi_h(c, z) at rational c, primitive with positive leading coefficient.
IntPoly dynatomic_at_rational(int n, int h, const BigRational& c);

/// One orbit per irreducible factor of Phi_h(c, .). Throws ParabolicCollision
/// when Phi_h(c, .) has a repeated root.
std::vector<PeriodicOrbit> periodic_orbit_in_field(int n, const BigRational& c, int h);

struct OrbitUnitData {
  IntPoly factor;
  std::vector<FieldElement> phi_values;  // phi(z_j, z_{j+1})
  bool product_is_one = false;
  std::vector<IntegralityCertificate> certificates;  // only when c is an integer
};

struct DynamicalUnitReport {
  int n = 2;
  BigRational c;
  int h = 2;
  std::vector<OrbitUnitData> orbits;

  bool holds() const;
};

/// phi(x, y) = (x^n - y^n)/(x - y) around each orbit; the product is exactly 1.
DynamicalUnitReport dynamical_unit_check(int n, const BigRational& c, int h);

enum class BranchStatus { pass, fail, not_applicable };
std::string branch_status_name(BranchStatus s);

struct CongruenceBranch {
  std::string name;
  BranchStatus status = BranchStatus::not_applicable;
  std::string detail;
  std::vector<IntegralityCertificate> certificates;
};

struct OrbitCongruences {
  IntPoly factor;
  IntegralityCertificate multiplier;
  std::vector<CongruenceBranch> branches;
};

struct CongruenceReport {
  int n = 2;
  BigRational c;
  int h = 1;
  std::vector<OrbitCongruences> orbits;

  bool holds() const;  // no branch failed
};

/// Branch names:
///   mu_pow_n        (mu^n - (-b)^((n-1)h)) / n is integral, when b is integral
///   mu_over_n_pow_h mu / n^h is integral, when c is an integer
///   n_pow_h_minus_mu (n^h - mu) / b is integral, when b is integral, nonzero and mu a unit
CongruenceReport congruence_certificates(int n, const BigRational& c, int h);

/// b^(n-1) = n^n c^(n-1), the rational stand-in for b.
BigRational bhat_of_c(int n, const BigRational& c);

nlohmann::json to_json(const RatPoly& p);
nlohmann::json to_json(const IntegralityCertificate& cert);
nlohmann::json to_json(const DynamicalUnitReport& r);
nlohmann::json to_json(const CongruenceReport& r);

}  // namespace unicrit
