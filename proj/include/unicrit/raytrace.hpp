#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "unicrit/bigint.hpp"
#include "unicrit/detail/mp.hpp"
#include "unicrit/dynmaps.hpp"
#include "unicrit/int_poly.hpp"

namespace unicrit {

/// p/q in [0, 1), reduced.
struct Angle {
  BigInt p = 0, q = 1;

  Angle() = default;
  Angle(BigInt p_, BigInt q_);
  static Angle parse(const std::string& s);
  std::string str() const;
  friend bool operator==(const Angle& a, const Angle& b) { return a.p == b.p && a.q == b.q; }
};

struct AngleOrbit {
  int preperiod = 0;
  int period = 1;
};

AngleOrbit angle_orbit(const Angle& a, int n);

struct RayOptions {
  double potential_start = 32.0;
  double potential_end = 1e-8;
  int steps_per_halving = 12;
  long precision_bits = 256;
  int max_retries = 12;
};

struct RayPoint {
  mp::Real potential;
  mp::Complex c;
  int depth = 0;
};

struct RayPath {
  int n = 2;
  Angle angle;
  long precision_bits = 256;
  std::vector<RayPoint> points;
};

RayPath trace_param_ray(int n, const Angle& angle, const RayOptions& opt = {});

/// Solve for the ray point at one potential, starting Newton at `guess`.
mp::Complex ray_point(int n, const Angle& angle, const mp::Real& potential, const mp::Complex& guess);

/// All complex roots of a squarefree polynomial (simultaneous iteration).
std::vector<mp::Complex> complex_roots(const IntPoly& p, long precision_bits);
std::vector<mp::Complex> complex_roots(const std::vector<mp::Complex>& coeffs, long precision_bits);

struct LandingOptions {
  RayOptions ray;
  double tolerance = 1e-6;
  double margin = 10.0;
  /// Dynamical polishing is accepted only this close to the extrapolated value.
  double polish_radius = 1e-4;
};

struct LandingEstimate {
  mp::Complex extrapolated;
  double error_estimate = 0;
  std::string model;  // power | inverse_log
  std::optional<mp::Complex> polished;
  std::string polish_equation;

  const mp::Complex& value() const { return polished ? *polished : extrapolated; }
};

/// Extrapolate c(t) to t = 0 on the last decade of potentials and refine.
LandingEstimate estimate_landing(const RayPath& path, const LandingOptions& opt = {});

struct LandingReport {
  int n = 2;
  Angle angle;
  AngleOrbit orbit;
  LandingEstimate landing;
  std::string status;  // matched | ambiguous | no_candidate
  std::optional<IntPoly> factor;
  std::optional<mp::Complex> root;
  int root_index = -1;
  std::optional<mp::Real> distance;
  std::optional<mp::Real> raw_distance;  // from the extrapolated value alone
  std::optional<mp::Real> margin;
  std::optional<mp::Real> raw_margin;
  std::vector<IntPoly> candidates;
  long precision_bits = 256;
};

/// Candidates are polynomials in c; each is factored before matching.
LandingReport land_and_match(int n, const Angle& angle, const std::vector<IntPoly>& candidates,
                             const LandingOptions& opt = {});

/// Parabolic polynomials for periodic angles, Misiurewicz polynomials for
/// preperiodic ones, all in coordinate c.
std::vector<IntPoly> default_candidates(int n, const Angle& angle, const DynOptions& opt = {});

/// Angles p/q with exact period r under multiplication by n, 0 < p/q < 1/2
/// unless `upper_only` is false.
std::vector<Angle> periodic_angles(int n, int r, bool upper_only = true);

/// Angles used for the standard concordance check.
std::vector<Angle> default_angles();

nlohmann::json to_json(const mp::Complex& z, long bits);
nlohmann::json to_json(const RayPath& p);
nlohmann::json to_json(const LandingReport& r);

}  // namespace unicrit
