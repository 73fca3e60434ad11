#include "unicrit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "unicrit/cache.hpp"
#include "unicrit/dynmaps.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/factor.hpp"
#include "unicrit/polycore.hpp"
#include "unicrit/raytrace.hpp"
#include "unicrit/verify.hpp"

namespace unicrit {

namespace {

using nlohmann::json;

struct Opts {
  int n = 2, h = 1, m = 1, t = 1, tau = 0, r = 0;
  std::string coord = "c";
  std::string from = "c";
  std::string form = "f_c";
  std::string angle;
  std::string c = "0";
  std::string coeffs;
  std::string kind = "gleason";
  std::string which = "both";
  std::vector<std::string> candidates;
  long precision_bits = 256;
  long degree_cap = 0;  // 0: command default
  double potential_end = 1e-8;
  int steps = 12;
  int r_max = 6, th_max = 6, gleason_h_max = 5;
  unsigned threads = 0;
  bool factor = false;
  bool all = false;
  bool timing = false;
  std::string cache_dir;
  std::string format = "json";
  std::string max_bytes = "0";
};

json bipoly_json(const BiPoly& p) {
  json rows = json::array();
  for (const auto& r : p.rows()) rows.push_back(to_json(r)["coeffs"]);
  return {{"outer", p.outer()}, {"inner", p.inner()}, {"rows", rows}};
}

// Norm of a root of an irreducible factor: (-1)^d a_0 / a_d.
json factor_rows(const IntPoly& p) {
  json out = json::array();
  for (const auto& f : factor(p).factors) {
    const int d = f.poly.degree();
    BigRational norm(d % 2 ? BigInt(-f.poly.constant_term()) : f.poly.constant_term(), f.poly.leading());
    norm.canonicalize();
    out.push_back({{"poly", to_json(f.poly)},
                   {"degree", d},
                   {"mult", f.mult},
                   {"norm", to_decimal(norm)},
                   {"monic", f.poly.is_monic()}});
  }
  return out;
}

json param_doc(const ParamPolynomial& p, bool with_factors) {
  json j = to_json(p);
  j["degree"] = p.poly.degree();
  if (with_factors) j["factors"] = factor_rows(p.poly);
  return j;
}

NormalForm parse_form(const std::string& s) {
  if (s == "f_c") return NormalForm::f_c;
  if (s == "g_b") return NormalForm::g_b;
  if (s == "F_chat") return NormalForm::F_chat;
  throw InvalidArgument("form must be f_c, g_b or F_chat");
}

IntPoly parse_coeffs(const std::string& s, const std::string& var) {
  std::vector<BigInt> c;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_bigint(item));
  if (c.empty()) throw InvalidArgument("expected comma-separated coefficients, constant term first");
  return IntPoly(std::move(c), var);
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer list: " + s);
    }
  }
  return out;
}

// kind:args, e.g. parabolic:4,1 or misiurewicz:2,1,2 or gleason:3 or poly:2,1
IntPoly parse_candidate(const std::string& spec, int n, const DynOptions& dyn) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidArgument("candidate must look like kind:args, got " + spec);
  const std::string kind = spec.substr(0, colon), args = spec.substr(colon + 1);
  if (kind == "poly") return parse_coeffs(args, "c");
  const auto v = parse_ints(args);
  if (kind == "parabolic" && v.size() == 2) return parabolic_param_poly(n, v[0], v[1], Coordinate::c, dyn).poly;
  if (kind == "misiurewicz" && (v.size() == 2 || v.size() == 3))
    return misiurewicz_poly(n, v[0], v[1], v.size() == 3 ? v[2] : n, Coordinate::c, dyn).poly;
  if (kind == "gleason" && v.size() == 1) return gleason_poly(n, v[0], Coordinate::c, dyn).poly;
  throw InvalidArgument("unknown candidate " + spec + " (parabolic:h,m | misiurewicz:t,h[,tau] | gleason:h | poly:coeffs)");
}

int verdict_code(const std::string& verdict) {
  if (verdict == "fail") return kExitFailure;
  if (verdict == "incomplete") return kExitResourceCap;
  return kExitOk;
}

json error_doc(const std::string& kind, const std::string& detail) {
  return {{"error", {{"kind", kind}, {"detail", detail}}}};
}

struct Outcome {
  json doc;
  int code = kExitOk;
};

// ---- table rendering

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_object()) {
    if (v.contains("coeffs") && v.contains("var")) {
      try {
        return int_poly_from_json(v).to_string();
      } catch (const Error&) {
      }
    }
    if (v.contains("re") && v.contains("im") && v["re"].is_string()) {
      std::string im = v["im"].get<std::string>();
      const double re_d = std::strtod(v["re"].get<std::string>().c_str(), nullptr);
      const double im_d = std::strtod(im.c_str(), nullptr);
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.15g %c %.15gi", re_d, im_d < 0 ? '-' : '+', std::abs(im_d));
      return buf;
    }
  }
  if (v.is_array() && !v.empty() && !v[0].is_object() && !v[0].is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + cell_text(x);
    return s;
  }
  return v.dump();
}

bool is_leaf(const json& v) {
  if (!v.is_object() && !v.is_array()) return true;
  if (v.is_object()) return (v.contains("coeffs") && v.contains("var")) || (v.contains("re") && v.contains("bits"));
  return v.empty() || (!v[0].is_object() && !v[0].is_array());
}

void render_rows(const json& arr, const std::string& title, std::ostream& os) {
  std::vector<std::string> cols;
  for (const auto& row : arr)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (is_leaf(it.value()) && std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  for (const auto& row : arr) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      line.push_back(row.contains(cols[i]) ? cell_text(row[cols[i]]) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  os << "\n[" << title << "]\n";
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s;
    for (std::size_t i = 0; i < line.size(); ++i) {
      s += line[i];
      if (i + 1 < line.size()) s += std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << s << "\n";
  };
  emit(cols);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  emit(rule);
  for (const auto& line : cells) emit(line);
}

void render_object(const json& obj, const std::string& prefix, std::ostream& os) {
  std::size_t kw = 0;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (is_leaf(it.value())) kw = std::max(kw, prefix.size() + it.key().size());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!is_leaf(it.value())) continue;
    const std::string key = prefix + it.key();
    os << key << std::string(kw - key.size() + 2, ' ') << cell_text(it.value()) << "\n";
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const json& v = it.value();
    if (is_leaf(v)) continue;
    if (v.is_object()) {
      render_object(v, prefix + it.key() + ".", os);
    } else if (v[0].is_object()) {
      render_rows(v, prefix + it.key(), os);
    } else {
      os << prefix << it.key() << "  " << v.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_table(const json& doc) {
  std::ostringstream os;
  if (doc.is_array() && !doc.empty() && doc[0].is_object()) {
    render_rows(doc, "rows", os);
  } else if (doc.is_object()) {
    render_object(doc, "", os);
  } else {
    os << doc.dump() << "\n";
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Opts o;
  CLI::App app{"Exact polynomial families and arithmetic checks for z^n + c", "unicrit"};
  app.set_help_flag("--help", "Print help");
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cache-dir", o.cache_dir, "Cache directory (else $UNICRIT_CACHE; no caching if neither)");
  app.add_option("--degree-cap", o.degree_cap, "Degree cap for polynomial constructions");
  app.add_option("--precision-bits", o.precision_bits, "Binary precision for numerics");

  // Each leaf registers its handler; `key` lists the options that determine the result.
  struct Leaf {
    CLI::App* cmd;
    std::function<Outcome()> fn;
    bool cacheable;
  };
  std::vector<Leaf> leaves;

  auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "Degree of z^n + c")->check(CLI::Range(2, 64)); };
  auto add_coord = [&](CLI::App* c) {
    c->add_option("--coord", o.coord, "Parameter coordinate")->check(CLI::IsMember({"c", "chat", "b", "bhat"}));
  };
  auto dyn = [&](long def) {
    DynOptions d;
    d.degree_cap = o.degree_cap > 0 ? o.degree_cap : def;
    return d;
  };
  auto vopt = [&](long def) {
    VerifyOptions v;
    v.dyn = dyn(def);
    return v;
  };
  auto report = [](const VerificationReport& r) { return Outcome{to_json(r), verdict_code(r.verdict)}; };

  // poly
  CLI::App* poly = app.add_subcommand("poly", "Construct polynomial families");
  poly->require_subcommand(1);
  {
    auto* c = poly->add_subcommand("iterate", "P_k(b, w) and N_k for g_b(w) = (w^n + b)/n");
    add_n(c);
    c->add_option("--h", o.h, "Number of iterations k")->check(CLI::PositiveNumber);
    leaves.push_back({c, [&] {
                        IteratePair p = iterate_poly_gb(o.n, o.h, dyn(4096));
                        return Outcome{{{"n", o.n}, {"k", p.k}, {"P", bipoly_json(p.P)}, {"N", to_decimal(p.N)}}};
                      },
                      true});
  }
  {
    auto* c = poly->add_subcommand("dynatomic", "Dynatomic polynomial of exact period h");
    add_n(c);
    c->add_option("--h", o.h, "Period")->check(CLI::PositiveNumber);
    c->add_option("--form", o.form, "Normal form")->check(CLI::IsMember({"f_c", "g_b", "F_chat"}));
    leaves.push_back({c, [&] {
                        BiPoly p = dynatomic(o.n, o.h, parse_form(o.form), dyn(4096));
                        return Outcome{{{"n", o.n}, {"h", o.h}, {"form", o.form}, {"poly", bipoly_json(p)}}};
                      },
                      true});
  }
  {
    auto* c = poly->add_subcommand("gleason", "Centers of exact period h");
    add_n(c);
    add_coord(c);
    c->add_option("--h", o.h, "Period")->check(CLI::PositiveNumber);
    c->add_flag("--factor", o.factor, "Also factor and report norms");
    leaves.push_back({c, [&] {
                        return Outcome{param_doc(gleason_poly(o.n, o.h, parse_coordinate(o.coord), dyn(4096)), o.factor)};
                      },
                      true});
  }
  {
    auto* c = poly->add_subcommand("misiurewicz", "Critical value of preperiod t and period h");
    add_n(c);
    add_coord(c);
    c->add_option("--t", o.t, "Preperiod")->check(CLI::PositiveNumber);
    c->add_option("--h", o.h, "Period")->check(CLI::PositiveNumber);
    c->add_option("--tau", o.tau, "Divisor tau of n (default n)");
    c->add_flag("--factor", o.factor, "Also factor and report norms");
    leaves.push_back({c, [&] {
                        const int tau = o.tau > 0 ? o.tau : o.n;
                        return Outcome{param_doc(misiurewicz_poly(o.n, o.t, o.h, tau, parse_coordinate(o.coord), dyn(4096)),
                                                 o.factor)};
                      },
                      true});
  }
  {
    auto* c = poly->add_subcommand("parabolic", "Period-h orbit with multiplier a primitive m-th root of unity");
    add_n(c);
    add_coord(c);
    c->add_option("--h", o.h, "Orbit period")->check(CLI::PositiveNumber);
    c->add_option("--m", o.m, "Root of unity order")->check(CLI::PositiveNumber);
    c->add_flag("--factor", o.factor, "Also factor and report norms");
    leaves.push_back({c, [&] {
                        return Outcome{param_doc(parabolic_param_poly(o.n, o.h, o.m, parse_coordinate(o.coord), dyn(4096)),
                                                 o.factor)};
                      },
                      true});
  }
  {
    auto* c = poly->add_subcommand("transform", "Change parameter coordinate");
    add_n(c);
    add_coord(c);
    c->add_option("--coeffs", o.coeffs, "Coefficients, constant term first")->required();
    c->add_option("--from", o.from, "Source coordinate")->check(CLI::IsMember({"c", "chat", "b", "bhat"}));
    c->add_flag("--factor", o.factor, "Also factor and report norms");
    leaves.push_back({c, [&] {
                        ParamPolynomial p{parse_coeffs(o.coeffs, o.from), parse_coordinate(o.from), o.n, {}, ""};
                        return Outcome{param_doc(coord_transform(p, parse_coordinate(o.coord)), o.factor)};
                      },
                      true});
  }

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Check the arithmetic statements on one cell or a sweep");
  verify->require_subcommand(1);
  {
    auto* c = verify->add_subcommand("thm14", "Norm divisibility at parabolic parameters");
    add_n(c);
    c->add_option("--h", o.h, "Orbit period")->check(CLI::PositiveNumber);
    c->add_option("--m", o.m, "Root of unity order")->check(CLI::PositiveNumber);
    leaves.push_back({c, [&] { return report(verify_thm_1_4(o.n, o.h, o.m, vopt(4096))); }, true});
  }
  {
    auto* c = verify->add_subcommand("thm31", "Norms of Misiurewicz (t >= 1) and Gleason (t = 0) parameters");
    add_n(c);
    c->add_option("--t", o.t, "Preperiod, 0 for the Gleason case")->check(CLI::NonNegativeNumber);
    c->add_option("--h", o.h, "Period")->check(CLI::PositiveNumber);
    c->add_option("--tau", o.tau, "Divisor tau of n (default n)");
    leaves.push_back({c, [&] {
                        const int tau = o.t == 0 ? 0 : (o.tau > 0 ? o.tau : o.n);
                        return report(verify_thm_3_1(o.n, o.t, o.h, tau, vopt(4096)));
                      },
                      true});
  }
  {
    auto* c = verify->add_subcommand("monic", "Monicity and degrees of P_k - N_k w");
    add_n(c);
    c->add_option("--h", o.h, "Period")->check(CLI::PositiveNumber);
    leaves.push_back({c, [&] { return report(verify_monic_structure(o.n, o.h, vopt(4096))); }, true});
  }
  {
    auto* c = verify->add_subcommand("congruences", "Multiplier congruences on periodic orbits at a rational c");
    add_n(c);
    c->add_option("--c", o.c, "Parameter value, integer or p/q");
    c->add_option("--h", o.h, "Period")->check(CLI::PositiveNumber);
    leaves.push_back({c, [&] { return report(verify_congruences(o.n, parse_rational(o.c), o.h, vopt(4096))); }, true});
  }
  {
    auto* c = verify->add_subcommand("units", "Dynamical units on periodic orbits at a rational c");
    add_n(c);
    c->add_option("--c", o.c, "Parameter value, integer or p/q");
    c->add_option("--h", o.h, "Period")->check(CLI::Range(2, 64));
    leaves.push_back({c, [&] { return report(verify_dynamical_units(o.n, parse_rational(o.c), o.h, vopt(4096))); }, true});
  }
  {
    auto* c = verify->add_subcommand("sweep", "Run the norm sweeps over all small cells");
    c->add_option("--which", o.which, "Which sweep")->check(CLI::IsMember({"thm14", "thm31", "both"}));
    c->add_option("--r-max", o.r_max, "Largest h*m in the parabolic sweep");
    c->add_option("--th-max", o.th_max, "Largest t+h in the Misiurewicz sweep");
    c->add_option("--gleason-h-max", o.gleason_h_max, "Largest Gleason period");
    c->add_option("--threads", o.threads, "Worker threads, 0 for all cores");
    c->add_flag("--timing", o.timing, "Record elapsed time per cell");
    leaves.push_back({c, [&] {
                        SweepConfig cfg;
                        cfg.r_max = o.r_max;
                        cfg.th_max = o.th_max;
                        cfg.gleason_h_max = o.gleason_h_max;
                        cfg.threads = o.threads;
                        cfg.timing = o.timing;
                        if (o.degree_cap > 0) cfg.degree_cap = o.degree_cap;
                        Outcome res;
                        res.doc = json::object();
                        auto add = [&](const char* name, const std::vector<VerificationReport>& reps) {
                          json arr = json::array();
                          for (const auto& r : reps) arr.push_back(to_json(r));
                          SweepSummary s = summarize(reps);
                          res.doc[name] = {{"summary", to_json(s)}, {"reports", arr}};
                          if (!s.ok()) res.code = kExitFailure;
                        };
                        if (o.which != "thm31") add("thm14", sweep_thm_1_4(cfg));
                        if (o.which != "thm14") add("thm31", sweep_thm_3_1(cfg));
                        return res;
                      },
                      true});
  }

  // ray
  CLI::App* ray = app.add_subcommand("ray", "External rays in the parameter plane");
  ray->require_subcommand(1);
  auto add_ray_opts = [&](CLI::App* c) {
    add_n(c);
    c->add_option("--angle", o.angle, "Angle p/q")->required();
    c->add_option("--potential-end", o.potential_end, "Smallest potential")->check(CLI::PositiveNumber);
    c->add_option("--steps-per-halving", o.steps, "Potential levels per halving")->check(CLI::PositiveNumber);
  };
  auto ray_options = [&] {
    RayOptions r;
    r.potential_end = o.potential_end;
    r.steps_per_halving = o.steps;
    r.precision_bits = o.precision_bits;
    return r;
  };
  {
    auto* c = ray->add_subcommand("trace", "Trace one ray");
    add_ray_opts(c);
    leaves.push_back({c, [&] { return Outcome{to_json(trace_param_ray(o.n, Angle::parse(o.angle), ray_options()))}; }, true});
  }
  {
    auto* c = ray->add_subcommand("land", "Trace, extrapolate and match the landing point");
    add_ray_opts(c);
    c->add_option("--candidates", o.candidates, "kind:args, e.g. parabolic:4,1 misiurewicz:2,1 gleason:3 poly:2,1");
    leaves.push_back({c, [&] {
                        const Angle a = Angle::parse(o.angle);
                        std::vector<IntPoly> cands;
                        if (o.candidates.empty()) {
                          cands = default_candidates(o.n, a, dyn(4096));
                        } else {
                          for (const auto& s : o.candidates) cands.push_back(parse_candidate(s, o.n, dyn(4096)));
                        }
                        LandingOptions lo;
                        lo.ray = ray_options();
                        LandingReport r = land_and_match(o.n, a, cands, lo);
                        json doc = to_json(r);
                        if (r.factor && o.n == 2) {
                          // Also in b = 4c, the coordinate used for the worked examples.
                          ParamPolynomial p{*r.factor, Coordinate::c, 2, {}, ""};
                          doc["factor_b"] = to_json(coord_transform(p, Coordinate::b).poly);
                        }
                        return Outcome{doc, r.status == "matched" ? kExitOk : kExitFailure};
                      },
                      true});
  }
  {
    auto* c = ray->add_subcommand("angles", "List angles with their orbit type");
    add_n(c);
    c->add_option("--r", o.r, "Exact period (default: the standard angle list)");
    c->add_flag("--all", o.all, "Include the lower half (angles above 1/2)");
    leaves.push_back({c, [&] {
                        std::vector<Angle> as = o.r > 0 ? periodic_angles(o.n, o.r, !o.all) : default_angles();
                        json arr = json::array();
                        for (const auto& a : as) {
                          AngleOrbit orb = angle_orbit(a, o.n);
                          arr.push_back({{"angle", a.str()}, {"preperiod", orb.preperiod}, {"period", orb.period}});
                        }
                        return Outcome{{{"n", o.n}, {"angles", arr}}};
                      },
                      true});
  }

  // galois
  {
    auto* c = app.add_subcommand("galois", "Irreducibility of one family cell");
    add_n(c);
    c->add_option("--kind", o.kind, "Family")->check(CLI::IsMember({"gleason", "misiurewicz", "parabolic"}));
    c->add_option("--h", o.h, "Period")->check(CLI::PositiveNumber);
    c->add_option("--t", o.t, "Preperiod (misiurewicz)");
    c->add_option("--tau", o.tau, "Divisor tau of n (misiurewicz, default n)");
    c->add_option("--m", o.m, "Root of unity order (parabolic)")->check(CLI::PositiveNumber);
    leaves.push_back({c, [&] {
                        GaloisKind k{o.kind, o.h, o.kind == "misiurewicz" ? o.t : 0,
                                     o.kind == "misiurewicz" ? (o.tau > 0 ? o.tau : o.n) : 0, o.m};
                        return Outcome{to_json(galois_experiment(o.n, k, vopt(4096)))};
                      },
                      true});
  }

  // cache
  CLI::App* cache = app.add_subcommand("cache", "Inspect or trim the on-disk cache");
  cache->require_subcommand(1);
  std::optional<DiskCache> store;
  {
    auto* c = cache->add_subcommand("stat", "Entry count and size");
    leaves.push_back({c, [&]() -> Outcome {
                        if (!store) return {error_doc("usage", "no cache directory configured"), kExitUsage};
                        json j = to_json(store->stat());
                        j["dir"] = store->dir().string();
                        return {j};
                      },
                      false});
  }
  {
    auto* c = cache->add_subcommand("gc", "Evict least recently used entries down to a byte budget");
    c->add_option("--max-bytes", o.max_bytes, "Byte budget");
    leaves.push_back({c, [&]() -> Outcome {
                        if (!store) return {error_doc("usage", "no cache directory configured"), kExitUsage};
                        return {to_json(store->gc(std::stoull(o.max_bytes)))};
                      },
                      false});
  }

  auto emit = [&](const Outcome& res) {
    if (o.format == "table") {
      out << render_table(res.doc);
    } else {
      out << res.doc.dump(2) << "\n";
    }
    return res.code;
  };

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, err, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, err, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return emit({error_doc("usage", e.what()), kExitUsage});
  }

  const Leaf* leaf = nullptr;
  for (const auto& l : leaves)
    if (l.cmd->parsed()) leaf = &l;
  if (!leaf) return emit({error_doc("usage", "no command given"), kExitUsage});

  try {
    std::string dir = o.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("UNICRIT_CACHE")) dir = env;
    if (!dir.empty()) store.emplace(dir);

    // Key: version, command path and every option that shapes the result.
    std::string key = std::string("unicrit/") + kArtifactVersion;
    std::vector<const CLI::App*> chain;
    for (const CLI::App* a = leaf->cmd; a; a = a->get_parent()) chain.insert(chain.begin(), a);
    for (const CLI::App* a : chain) {
      if (a != chain.front()) key += "|" + a->get_name();
      for (const CLI::Option* op : a->get_options()) {
        const std::string name = op->get_name();
        if (name == "--help" || name == "--format" || name == "--cache-dir" || name.empty()) continue;
        std::string val = op->count() ? "" : op->get_default_str();
        for (const auto& r : op->results()) val += r + ";";
        key += "|" + name + "=" + val;
      }
    }

    const bool use_cache = store && leaf->cacheable && !o.timing;
    if (use_cache) {
      if (auto hit = store->get(key); hit && hit->contains("doc") && hit->contains("code")) {
        return emit({(*hit)["doc"], (*hit)["code"].get<int>()});
      }
    }
    Outcome res = leaf->fn();
    if (use_cache) store->put(key, {{"doc", res.doc}, {"code", res.code}});
    return emit(res);
  } catch (const InvalidArgument& e) {
    return emit({error_doc(e.kind(), e.what()), kExitUsage});
  } catch (const ResourceCapExceeded& e) {
    return emit({error_doc(e.kind(), e.what()), kExitResourceCap});
  } catch (const Error& e) {
    return emit({error_doc(e.kind(), e.what()), kExitFailure});
  } catch (const std::filesystem::filesystem_error& e) {
    return emit({error_doc("filesystem", e.what()), kExitFailure});
  } catch (const std::invalid_argument& e) {
    return emit({error_doc("invalid_argument", e.what()), kExitUsage});
  } catch (const std::out_of_range& e) {
    return emit({error_doc("invalid_argument", e.what()), kExitUsage});
  }
}

}  // namespace unicrit
