#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "unicrit/bigint.hpp"
#include "unicrit/dynmaps.hpp"

namespace unicrit {

/// Verdicts: pass | fail | incomplete | not_applicable | parabolic_collision,
/// and for the Galois experiment consistent | inconsistent.
struct VerificationReport {
  std::string claim;
  nlohmann::json cell = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::array();
  std::string verdict = "pass";
  std::vector<std::string> notes;
  std::optional<double> elapsed_ms;

  bool failed() const { return verdict == "fail"; }
};

nlohmann::json to_json(const VerificationReport& r);

struct VerifyOptions {
  DynOptions dyn;
  bool timing = false;  // elapsed_ms stays null otherwise, keeping reports byte-stable
};

/// |Norm(b)| divides (n^r - 1)^d and |Norm(bhat)| divides (n^r - 1)^((n-1) dhat), r = h m.
VerificationReport verify_thm_1_4(int n, int h, int m, const VerifyOptions& opt = {});

/// t >= 1: Misiurewicz factors have |Norm(chat)| dividing n.
/// t == 0: Gleason factors of period h have |Norm(chat)| = 1 (tau ignored).
VerificationReport verify_thm_3_1(int n, int t, int h, int tau, const VerifyOptions& opt = {});

/// P_h and P_h - N_h w are monic in w (degree n^h) and in b (degree n^(h-1)).
VerificationReport verify_monic_structure(int n, int h, const VerifyOptions& opt = {});

VerificationReport verify_congruences(int n, const BigRational& c, int h, const VerifyOptions& opt = {});
VerificationReport verify_dynamical_units(int n, const BigRational& c, int h, const VerifyOptions& opt = {});

struct GaloisKind {
  std::string kind = "gleason";  // gleason | misiurewicz | parabolic
  int h = 1;
  int t = 0;
  int tau = 0;
  int m = 1;
};

/// Irreducible factor count of the chat polynomial for one stratum.
VerificationReport galois_experiment(int n, const GaloisKind& kind, const VerifyOptions& opt = {});

struct SweepConfig {
  std::vector<int> ns{2, 3, 4};
  int r_max = 6;         // h m <= r_max for the norm-divisibility sweep
  int th_max = 6;        // t + h <= th_max for the Misiurewicz sweep
  int gleason_h_max = 5;
  long degree_cap = 700;  // per-cell cap; larger cells are reported incomplete
  unsigned threads = 0;   // 0: hardware concurrency
  bool timing = false;
};

/// Every cell of the sweep, ordered by cell key regardless of completion order.
std::vector<VerificationReport> sweep_thm_1_4(const SweepConfig& cfg);
std::vector<VerificationReport> sweep_thm_3_1(const SweepConfig& cfg);

struct SweepSummary {
  std::size_t cells = 0, passed = 0, failed = 0, incomplete = 0, other = 0;
  bool ok() const { return failed == 0; }
};

SweepSummary summarize(const std::vector<VerificationReport>& reports);
nlohmann::json to_json(const SweepSummary& s);

}  // namespace unicrit
