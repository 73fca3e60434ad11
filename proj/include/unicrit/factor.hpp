#pragma once

#include <json.hpp>
#include <vector>

#include "unicrit/bigint.hpp"
#include "unicrit/int_poly.hpp"

namespace unicrit {

struct Factor {
  IntPoly poly;  // irreducible, primitive, positive leading coefficient
  int mult = 1;
};

/// content * prod factor^mult reproduces the input exactly. Factors are
/// ordered by degree, then by coefficients from the leading one down.
struct Factorization {
  BigInt content = 1;
  std::vector<Factor> factors;

  IntPoly expand(const std::string& var = "x") const;
};

Factorization factor(const IntPoly& p);

/// Irreducible factors of a squarefree primitive polynomial with positive leading coefficient.
std::vector<IntPoly> factor_squarefree(const IntPoly& f);

bool is_irreducible(const IntPoly& p);

struct NormValue {
  BigRational value;
  int degree = 0;

  BigInt abs_value() const { return abs(value.get_num()); }
};

/// Norm of a root of the monic irreducible p: (-1)^deg(p) p(0).
NormValue norm_of_root(const IntPoly& p);

/// Sorted degrees of the irreducible factors of p mod prime (p squarefree mod prime, prime not dividing lc).
std::vector<int> factor_degrees_mod(const IntPoly& p, unsigned long prime);

nlohmann::json to_json(const Factorization& f);
nlohmann::json to_json(const NormValue& v);

bool factor_order_less(const IntPoly& a, const IntPoly& b);

}  // namespace unicrit
