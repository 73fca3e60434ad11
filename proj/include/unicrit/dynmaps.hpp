#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "unicrit/bi_poly.hpp"
#include "unicrit/bigint.hpp"
#include "unicrit/int_poly.hpp"

namespace unicrit {

enum class Coordinate { c, chat, b, bhat };

std::string coordinate_name(Coordinate c);
Coordinate parse_coordinate(const std::string& s);

enum class NormalForm { f_c, g_b, F_chat };

struct MapFamily {
  int n = 2;
  NormalForm form = NormalForm::f_c;
};

struct Provenance {
  std::string kind = "other";  // gleason | misiurewicz | parabolic | iterate | fixed_point | other
  std::map<std::string, long> params;
};

struct ParamPolynomial {
  IntPoly poly;
  Coordinate coordinate = Coordinate::c;
  int n = 2;
  Provenance provenance;
  std::string note;  // set for special cases, e.g. the h = 1 Gleason point in chat
};

struct IteratePair {
  BiPoly P;  // outer w, inner b
  BigInt N;
  int k = 1;
};

struct DynOptions {
  long degree_cap = 4096;
};

/// P_k(b, w) and N_k with g_b^k(w) = P_k / N_k.
IteratePair iterate_poly_gb(int n, int k, const DynOptions& opt = {});

/// P_h(b, w) - N_h w.
BiPoly periodicity_poly(int n, int h, const DynOptions& opt = {});

/// P_k(chat): P_1 = 1, P_{k+1} = chat P_k^n + 1.
IntPoly critical_orbit_poly(int n, int k, const DynOptions& opt = {});

/// f_c^k(0) as a polynomial in c.
IntPoly critical_value_iterate(int n, int k, const DynOptions& opt = {});

/// Iterate of f_c as a polynomial in (z outer, c inner), or of g_b as P_k in (w, b).
BiPoly iterate_minus_identity(int n, int h, NormalForm form, const DynOptions& opt = {});

/// Dynatomic polynomial Phi_h: outer z (or w), inner c (or b).
BiPoly dynatomic(int n, int h, NormalForm form = NormalForm::f_c, const DynOptions& opt = {});

/// Phi_h(c0, z) for f_c, computed directly in Z[z].
IntPoly dynatomic_at(int n, int h, const BigInt& c0, const DynOptions& opt = {});

/// deg_z Phi_h = sum_{d | h} mu(h/d) n^d.
long dynatomic_degree(int n, int h);

/// q(c, mu) = Res_z(Phi_h(c, z), mu - (f^h)'(z)); outer mu, inner c.
BiPoly multiplier_resultant(int n, int h, const DynOptions& opt = {});

/// Res_z(Phi_h(c, z), Psi_m((f^h)'(z))) as a polynomial in c, before taking the radical.
IntPoly parabolic_resultant(int n, int h, int m, const DynOptions& opt = {});

ParamPolynomial parabolic_param_poly(int n, int h, int m, Coordinate coord, const DynOptions& opt = {});
ParamPolynomial gleason_poly(int n, int h, Coordinate coord, const DynOptions& opt = {});

/// S_{t,h,tau}(chat) = P_t^phi(tau) Psi_tau(P_{t+h}/P_t), before any removal.
IntPoly misiurewicz_raw(int n, int t, int h, int tau, const DynOptions& opt = {});
ParamPolynomial misiurewicz_poly(int n, int t, int h, int tau, Coordinate coord, const DynOptions& opt = {});

ParamPolynomial coord_transform(const ParamPolynomial& p, Coordinate target);

/// Polynomial in bhat satisfied by mu (n - mu)^(n-1) for mu a primitive m-th root of unity.
ParamPolynomial fixed_point_parabolic(int n, int m);

nlohmann::json to_json(const ParamPolynomial& p);
nlohmann::json to_json(const Provenance& p);

}  // namespace unicrit
