#include "unicrit/numfield.hpp"

#include "unicrit/dynmaps.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/factor.hpp"
#include "unicrit/polycore.hpp"

namespace unicrit {

NumberField::NumberField(const IntPoly& defining) {
  if (defining.degree() < 1) throw InvalidArgument("number field modulus must be nonconstant");
  IntPoly p = defining.primitive_part();
  if (p.leading() < 0) p = -p;
  if (!is_irreducible(p)) throw InvalidArgument("number field modulus is reducible: " + p.to_string());
  defining_ = p.with_var("x");
  modulus_ = RatPoly(defining_).monic();
}

FieldPtr make_field(const IntPoly& defining) { return std::make_shared<const NumberField>(defining); }

namespace {

const FieldPtr& same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !(a.field()->defining_poly() == b.field()->defining_poly()))
    throw InvalidArgument("field elements live in different fields");
  return a.field();
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, std::vector<BigRational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw InvalidArgument("field element without a field");
  if (static_cast<int>(coords_.size()) != field_->degree())
    throw InvalidArgument("field element has the wrong number of coordinates");
}

FieldElement FieldElement::from_rational(FieldPtr field, const BigRational& v) {
  std::vector<BigRational> c(field->degree());
  c[0] = v;
  return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::generator(FieldPtr field) {
  return from_poly(field, RatPoly({BigRational(0), BigRational(1)}));
}

FieldElement FieldElement::from_poly(FieldPtr field, const RatPoly& p) {
  RatPoly r = divmod(p.with_var("x"), field->modulus()).second;
  std::vector<BigRational> c(field->degree());
  for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeff(i);
  return FieldElement(std::move(field), std::move(c));
}

RatPoly FieldElement::to_poly() const { return RatPoly(coords_, "x"); }

bool FieldElement::is_zero() const {
  for (const auto& v : coords_)
    if (v != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

std::string FieldElement::to_string() const { return to_poly().to_string(); }

FieldElement FieldElement::operator-() const {
  std::vector<BigRational> c = coords_;
  for (auto& v : c) v = -v;
  return FieldElement(field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  std::vector<BigRational> c = a.coords_;
  same_field(a, b);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return FieldElement::from_poly(same_field(a, b), a.to_poly() * b.to_poly());
}

FieldElement operator*(const FieldElement& a, const BigRational& k) {
  std::vector<BigRational> c = a.coords_;
  for (auto& v : c) v *= k;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const BigRational& k) {
  return a + FieldElement::from_rational(a.field_, k);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement operator/(const FieldElement& a, const BigRational& k) {
  if (k == 0) throw InvalidArgument("division by zero in number field");
  return a * BigRational(1 / k);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_->defining_poly() == b.field_->defining_poly() && a.coords_ == b.coords_;
}

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement result = from_rational(field_, 1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero in number field");
  // Extended Euclid over Q on (modulus, self).
  RatPoly r0 = field_->modulus(), r1 = to_poly();
  RatPoly s0(std::vector<BigRational>{}, "x"), s1({BigRational(1)}, "x");
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  return from_poly(field_, s0 * BigRational(1 / r0.coeff(0)));
}

RatPoly characteristic_polynomial(const FieldElement& e, const std::string& var) {
  const int d = e.field()->degree();
  BigInt D;
  IntPoly E = e.to_poly().clear_denominators(&D);
  if (E.degree() < 1) {
    // e is rational: (y - e)^d
    BigRational v = e.coords()[0];
    RatPoly lin({-v, BigRational(1)}, var), out({BigRational(1)}, var);
    for (int i = 0; i < d; ++i) out = out * lin;
    return out;
  }
  // Res_x(M, D y - E(x)) = L^deg(E) D^d prod (y - e(alpha)).
  const IntPoly& M = e.field()->defining_poly();
  std::vector<BigInt> xs, ys;
  for (int i = 0; i <= d; ++i) {
    BigInt y0 = interpolation_node(i);
    xs.push_back(y0);
    ys.push_back(resultant(M, IntPoly::constant(D * y0, "x") - E));
  }
  IntPoly R = interpolate(xs, ys, var);
  BigInt scale = pow(M.leading(), E.degree()) * pow(D, d);
  std::vector<BigRational> c;
  for (const auto& v : R.coeffs()) {
    BigRational q(v, scale);
    q.canonicalize();
    c.push_back(q);
  }
  return RatPoly(std::move(c), var);
}

RatPoly minimal_polynomial(const FieldElement& e, const std::string& var) {
  IntPoly chi = characteristic_polynomial(e, var).clear_denominators();
  return RatPoly(squarefree_part(chi)).monic().with_var(var);
}

std::pair<BigRational, BigRational> norm_and_trace(const FieldElement& e) {
  RatPoly chi = characteristic_polynomial(e);
  const int d = chi.degree();
  BigRational norm = chi.coeff(0);
  if (d % 2) norm = -norm;
  return {norm, -chi.coeff(d - 1)};
}

IntegralityCertificate is_algebraic_integer(const FieldElement& e, std::string context) {
  IntegralityCertificate cert;
  cert.minpoly = minimal_polynomial(e);
  cert.is_integer = cert.minpoly.has_integer_coeffs();
  cert.norm = cert.minpoly.coeff(0);
  if (cert.minpoly.degree() % 2) cert.norm = -cert.norm;
  cert.is_unit = cert.is_integer && abs(cert.norm) == 1;
  cert.context = std::move(context);
  return cert;
}

bool is_unit(const FieldElement& e) { return is_algebraic_integer(e).is_unit; }

bool prime_to_n_test(const IntPoly& minpoly, int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (!minpoly.is_monic()) throw InvalidArgument("prime_to_n_test expects a monic integer minimal polynomial");
  BigInt norm = abs(minpoly.constant_term());
  return gcd(norm, BigInt(n)) == 1;
}

bool prime_to_n_test(const FieldElement& e, int n) {
  IntegralityCertificate cert = is_algebraic_integer(e);
  if (!cert.is_integer) throw InvalidArgument("prime_to_n_test expects an algebraic integer");
  return prime_to_n_test(cert.minpoly.clear_denominators(), n);
}

IntPoly dynatomic_at_rational(int n, int h, const BigRational& c) {
  IntPoly out;
  if (is_integer(c)) {
    out = dynatomic_at(n, h, c.get_num());
  } else {
    BiPoly dyn = dynatomic(n, h);
    std::vector<BigRational> coeffs;
    for (const auto& row : dyn.rows()) coeffs.push_back(row(c));
    out = RatPoly(std::move(coeffs), "z").clear_denominators().primitive_part();
  }
  if (out.leading() < 0) out = -out;
  return out.with_var("z");
}

std::vector<PeriodicOrbit> periodic_orbit_in_field(int n, const BigRational& c, int h) {
  if (h < 1) throw InvalidArgument("h must be at least 1");
  IntPoly phi = dynatomic_at_rational(n, h, c);
  if (phi.is_zero()) throw InvalidArgument("dynatomic polynomial vanishes identically");
  if (gcd(phi, phi.derivative()).degree() > 0)
    throw ParabolicCollision("Phi_" + std::to_string(h) + " has repeated roots at c = " + to_decimal(c));

  std::vector<PeriodicOrbit> out;
  for (const auto& f : factor(phi).factors) {
    FieldPtr K = make_field(f.poly);
    FieldElement z = FieldElement::generator(K);
    std::vector<FieldElement> pts{z};
    FieldElement mu = FieldElement::from_rational(K, 1);
    for (int j = 0; j < h; ++j) {
      mu = mu * pts.back().pow(n - 1) * BigRational(n);
      if (j + 1 < h) pts.push_back(pts.back().pow(n) + c);
    }
    out.push_back({f.poly, K, std::move(pts), mu});
  }
  return out;
}

bool DynamicalUnitReport::holds() const {
  for (const auto& o : orbits) {
    if (!o.product_is_one) return false;
    for (const auto& cert : o.certificates)
      if (!cert.is_unit) return false;
  }
  return true;
}

DynamicalUnitReport dynamical_unit_check(int n, const BigRational& c, int h) {
  if (h < 2) throw InvalidArgument("dynamical unit check needs h >= 2");
  DynamicalUnitReport rep{n, c, h, {}};
  for (const auto& orb : periodic_orbit_in_field(n, c, h)) {
    OrbitUnitData data;
    data.factor = orb.factor;
    FieldElement prod = FieldElement::from_rational(orb.field, 1);
    for (int j = 0; j < h; ++j) {
      const FieldElement& x = orb.points[j];
      const FieldElement& y = orb.points[(j + 1) % h];
      FieldElement phi = FieldElement::from_rational(orb.field, 0);
      for (int i = 0; i < n; ++i) phi = phi + x.pow(i) * y.pow(n - 1 - i);
      prod = prod * phi;
      if (is_integer(c)) data.certificates.push_back(is_algebraic_integer(phi, "phi(z_" + std::to_string(j + 1) + ", z_" + std::to_string((j + 1) % h + 1) + ")"));
      data.phi_values.push_back(std::move(phi));
    }
    data.product_is_one = prod == FieldElement::from_rational(orb.field, 1);
    rep.orbits.push_back(std::move(data));
  }
  return rep;
}

std::string branch_status_name(BranchStatus s) {
  switch (s) {
    case BranchStatus::pass: return "pass";
    case BranchStatus::fail: return "fail";
    case BranchStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

BigRational bhat_of_c(int n, const BigRational& c) {
  return BigRational(pow(BigInt(n), n)) * pow(c, n - 1);
}

bool CongruenceReport::holds() const {
  for (const auto& o : orbits)
    for (const auto& b : o.branches)
      if (b.status == BranchStatus::fail) return false;
  return true;
}

namespace {

CongruenceBranch certify(std::string name, const FieldElement& x, std::string context) {
  CongruenceBranch br;
  br.name = std::move(name);
  IntegralityCertificate cert = is_algebraic_integer(x, std::move(context));
  br.status = cert.is_integer ? BranchStatus::pass : BranchStatus::fail;
  br.certificates.push_back(std::move(cert));
  return br;
}

CongruenceBranch skipped(std::string name, std::string why) {
  CongruenceBranch br;
  br.name = std::move(name);
  br.detail = std::move(why);
  return br;
}

}  // namespace

CongruenceReport congruence_certificates(int n, const BigRational& c, int h) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  CongruenceReport rep{n, c, h, {}};
  const BigRational bhat = bhat_of_c(n, c);
  const bool b_integral = is_integer(bhat);
  const BigInt nh = pow(BigInt(n), h);
  for (const auto& orb : periodic_orbit_in_field(n, c, h)) {
    OrbitCongruences oc;
    oc.factor = orb.factor;
    const FieldElement& mu = orb.multiplier;
    oc.multiplier = is_algebraic_integer(mu, "multiplier");

    if (b_integral) {
      // (-b)^((n-1)h) = ((-1)^(n-1) bhat)^h
      BigRational sb = (n % 2 == 0) ? BigRational(-bhat) : bhat;
      FieldElement x = (mu.pow(n) - FieldElement::from_rational(orb.field, pow(sb, h))) / BigRational(n);
      oc.branches.push_back(certify("mu_pow_n", x, "(mu^n - (-b)^((n-1)h))/n"));
    } else {
      oc.branches.push_back(skipped("mu_pow_n", "b is not an algebraic integer"));
    }

    if (is_integer(c)) {
      oc.branches.push_back(certify("mu_over_n_pow_h", mu / BigRational(nh), "mu/n^h"));
    } else {
      oc.branches.push_back(skipped("mu_over_n_pow_h", "c is not an algebraic integer"));
    }

    if (!b_integral) {
      oc.branches.push_back(skipped("n_pow_h_minus_mu", "b is not an algebraic integer"));
    } else if (bhat == 0) {
      oc.branches.push_back(skipped("n_pow_h_minus_mu", "b = 0"));
    } else if (!oc.multiplier.is_unit) {
      oc.branches.push_back(skipped("n_pow_h_minus_mu", "mu is not a unit"));
    } else {
      // (n^h - mu)/b is integral iff its (n-1)-th power (n^h - mu)^(n-1)/bhat is.
      FieldElement x = (FieldElement::from_rational(orb.field, BigRational(nh)) - mu).pow(n - 1) / bhat;
      oc.branches.push_back(certify("n_pow_h_minus_mu", x, "((n^h - mu)/b)^(n-1)"));
    }
    rep.orbits.push_back(std::move(oc));
  }
  return rep;
}

nlohmann::json to_json(const RatPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& v : p.coeffs()) coeffs.push_back(to_decimal(v));
  return {{"var", p.var()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const IntegralityCertificate& cert) {
  return {{"element_minpoly", to_json(cert.minpoly)},
          {"is_integer", cert.is_integer},
          {"norm", to_decimal(cert.norm)},
          {"is_unit", cert.is_unit},
          {"context", cert.context}};
}

nlohmann::json to_json(const DynamicalUnitReport& r) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& o : r.orbits) {
    nlohmann::json phis = nlohmann::json::array(), certs = nlohmann::json::array();
    for (const auto& v : o.phi_values) phis.push_back(to_json(v.to_poly()));
    for (const auto& cert : o.certificates) certs.push_back(to_json(cert));
    orbits.push_back({{"field", to_json(o.factor)},
                      {"phi_values", phis},
                      {"product_is_one", o.product_is_one},
                      {"certificates", certs}});
  }
  return {{"n", r.n}, {"c", to_decimal(r.c)}, {"h", r.h}, {"orbits", orbits}, {"holds", r.holds()}};
}

nlohmann::json to_json(const CongruenceReport& r) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& o : r.orbits) {
    nlohmann::json branches = nlohmann::json::array();
    for (const auto& b : o.branches) {
      nlohmann::json certs = nlohmann::json::array();
      for (const auto& cert : b.certificates) certs.push_back(to_json(cert));
      nlohmann::json jb{{"name", b.name}, {"status", branch_status_name(b.status)}, {"certificates", certs}};
      if (!b.detail.empty()) jb["detail"] = b.detail;
      branches.push_back(jb);
    }
    orbits.push_back({{"field", to_json(o.factor)}, {"multiplier", to_json(o.multiplier)}, {"branches", branches}});
  }
  return {{"n", r.n}, {"c", to_decimal(r.c)}, {"h", r.h}, {"orbits", orbits}, {"holds", r.holds()}};
}

}  // namespace unicrit
