#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "unicrit/bi_poly.hpp"
#include "unicrit/bigint.hpp"
#include "unicrit/int_poly.hpp"

namespace unicrit {

/// Res(a, b) of two univariate integer polynomials (subresultant PRS).
BigInt resultant(const IntPoly& a, const IntPoly& b);

/// Res_var(A, B) by evaluation at integer points and interpolation.
/// The result is a polynomial in the remaining variable.
IntPoly resultant(const BiPoly& a, const BiPoly& b, const std::string& eliminate);

/// Same resultant, via the subresultant PRS over Z[y]. Slower; used as a cross-check.
IntPoly resultant_prs(const BiPoly& a, const BiPoly& b, const std::string& eliminate);

/// Unique polynomial of degree < xs.size() through the points; must have integer coefficients.
IntPoly interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys, std::string var = "x");

/// Integer evaluation points 0, 1, -1, 2, -2, ...
BigInt interpolation_node(std::size_t i);

/// Primitive gcd with positive leading coefficient; contents are ignored. gcd(0, 0) = 0.
IntPoly gcd_subresultant(const IntPoly& a, const IntPoly& b);
IntPoly gcd_modular(const IntPoly& a, const IntPoly& b);
IntPoly gcd(const IntPoly& a, const IntPoly& b);

IntPoly squarefree_part(const IntPoly& a);

/// Yun decomposition of the primitive part: a ~ prod f_i^i, returned as (f_i, i) with deg f_i > 0.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a);

IntPoly cyclotomic(unsigned long m, std::string var = "x");
int moebius(unsigned long k);
unsigned long euler_phi(unsigned long m);
std::vector<unsigned long> divisors(unsigned long m);

/// Polynomial whose roots are the k-th powers of the roots of p (with multiplicity), primitive.
IntPoly root_power_transform(const IntPoly& p, unsigned k);

/// Primitive polynomial whose roots are s times the roots of p.
IntPoly root_scale_transform(const IntPoly& p, const BigRational& s);

/// Primitive part with positive leading coefficient; zero stays zero.
IntPoly normalized(const IntPoly& p);

nlohmann::json to_json(const IntPoly& p);
IntPoly int_poly_from_json(const nlohmann::json& j);

}  // namespace unicrit
