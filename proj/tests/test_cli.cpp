#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "unicrit/cache.hpp"
#include "unicrit/cli.hpp"
#include "unicrit/dynmaps.hpp"
#include "unicrit/polycore.hpp"

using namespace unicrit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  nlohmann::json doc() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "unicrit");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("unicrit-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string str() const { return path_.string(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, MisiurewiczDegreeSevenCell) {
  Result r = run({"poly", "misiurewicz", "--n", "2", "--t", "3", "--h", "1"});
  EXPECT_EQ(r.code, 0);
  auto j = r.doc();
  EXPECT_EQ(j["degree"], 7);
  EXPECT_EQ(j["coordinate"], "c");
  EXPECT_EQ(int_poly_from_json(j), IntPoly({2, 2, 4, 6, 6, 6, 4, 1}));
  EXPECT_EQ(j["provenance"]["kind"], "misiurewicz");
}

TEST(Cli, VerifyThm14Example) {
  Result r = run({"verify", "thm14", "--n", "2", "--h", "1", "--m", "3"});
  EXPECT_EQ(r.code, 0);
  auto j = r.doc();
  EXPECT_EQ(j["verdict"], "pass");
  bool seen = false;
  for (const auto& w : j["witnesses"])
    if (w["coordinate"] == "b" && w["norm"] == "7") {
      seen = true;
      EXPECT_EQ(w["bound"], "49");
    }
  EXPECT_TRUE(seen);
}

TEST(Cli, RayLandFifth) {
  Result r = run({"ray", "land", "--n", "2", "--angle", "1/5", "--candidates", "parabolic:4,1"});
  EXPECT_EQ(r.code, 0);
  auto j = r.doc();
  EXPECT_EQ(j["status"], "matched");
  EXPECT_EQ(int_poly_from_json(j["factor_b"]), IntPoly({135, 27, 9, 1}));
  EXPECT_EQ(j["root"]["bits"], 256);
}

TEST(Cli, PolyFamiliesRoundTrip) {
  const std::vector<std::vector<std::string>> cmds = {
      {"poly", "gleason", "--n", "2", "--h", "4"},
      {"poly", "gleason", "--n", "3", "--h", "3", "--coord", "chat"},
      {"poly", "parabolic", "--n", "2", "--h", "3", "--m", "1", "--coord", "b"},
      {"poly", "misiurewicz", "--n", "3", "--t", "1", "--h", "2", "--tau", "3", "--coord", "bhat"},
      {"poly", "transform", "--n", "2", "--coeffs", "3,4", "--from", "c", "--coord", "b"},
  };
  for (const auto& c : cmds) {
    Result r = run(c);
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = r.doc();
    IntPoly p = int_poly_from_json(j);
    EXPECT_EQ(to_json(p)["coeffs"], j["coeffs"]);
    EXPECT_EQ(p.degree(), j["degree"].get<int>());
  }
  EXPECT_EQ(int_poly_from_json(run(cmds.back()).doc()), IntPoly({3, 1}));
  EXPECT_EQ(int_poly_from_json(run(cmds[2]).doc()), parabolic_param_poly(2, 3, 1, Coordinate::b).poly);
}

TEST(Cli, IterateAndDynatomic) {
  auto j = run({"poly", "iterate", "--n", "2", "--h", "1"}).doc();
  EXPECT_EQ(j["N"], "2");
  EXPECT_EQ(j["P"]["outer"], "w");
  // P_1 = w^2 + b: row 0 is b, row 2 is 1.
  EXPECT_EQ(j["P"]["rows"][0], nlohmann::json::array({"0", "1"}));
  EXPECT_EQ(j["P"]["rows"][2], nlohmann::json::array({"1"}));
  auto d = run({"poly", "dynatomic", "--n", "2", "--h", "1"}).doc();
  EXPECT_EQ(d["form"], "f_c");
  EXPECT_EQ(d["poly"]["rows"].size(), 3u);
}

TEST(Cli, FactorFlagReportsNorms) {
  auto j = run({"poly", "misiurewicz", "--n", "2", "--t", "1", "--h", "4", "--coord", "chat", "--factor"}).doc();
  ASSERT_EQ(j["factors"].size(), 1u);
  EXPECT_EQ(j["factors"][0]["degree"], 12);
  EXPECT_EQ(j["factors"][0]["norm"], "1");
}

TEST(Cli, ExitCodes) {
  Result u = run({"poly", "gleason", "--n", "1"});
  EXPECT_EQ(u.code, 2);
  EXPECT_EQ(u.doc()["error"]["kind"], "usage");
  EXPECT_EQ(run({"poly"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  Result bad = run({"ray", "land", "--angle", "1/0"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.doc()["error"]["kind"], "invalid_argument");
  EXPECT_EQ(run({"poly", "misiurewicz", "--n", "4", "--t", "1", "--h", "1", "--tau", "3"}).code, 2);

  Result cap = run({"poly", "gleason", "--n", "2", "--h", "9", "--degree-cap", "20"});
  EXPECT_EQ(cap.code, 3);
  EXPECT_EQ(cap.doc()["error"]["kind"], "resource_cap");
  EXPECT_EQ(run({"verify", "thm14", "--n", "2", "--h", "6", "--m", "1", "--degree-cap", "20"}).code, 3);

  Result nomatch = run({"ray", "land", "--angle", "1/4", "--candidates", "poly:1,0,1"});
  EXPECT_EQ(nomatch.code, 1);
  EXPECT_EQ(nomatch.doc()["status"], "no_candidate");
}

TEST(Cli, VerifyBranches) {
  EXPECT_EQ(run({"verify", "thm31", "--n", "2", "--t", "0", "--h", "3"}).doc()["verdict"], "pass");
  EXPECT_EQ(run({"verify", "monic", "--n", "3", "--h", "2"}).code, 0);
  EXPECT_EQ(run({"verify", "congruences", "--n", "2", "--c", "-2", "--h", "2"}).doc()["verdict"], "pass");
  EXPECT_EQ(run({"verify", "units", "--n", "2", "--c", "-1", "--h", "3"}).doc()["verdict"], "pass");
  EXPECT_EQ(run({"verify", "congruences", "--n", "2", "--c", "1/4", "--h", "1"}).doc()["verdict"], "parabolic_collision");
  EXPECT_EQ(run({"galois", "--n", "2", "--kind", "misiurewicz", "--t", "3", "--h", "1"}).doc()["verdict"], "consistent");
  Result s = run({"verify", "sweep", "--which", "thm14", "--r-max", "3"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.doc()["thm14"]["summary"]["failed"], 0);
}

TEST(Cli, RayAnglesListing) {
  auto j = run({"ray", "angles", "--n", "2", "--r", "4"}).doc();
  EXPECT_EQ(j["angles"].size(), 6u);
  EXPECT_EQ(j["angles"][0]["angle"], "1/15");
  auto d = run({"ray", "angles"}).doc();
  EXPECT_EQ(d["angles"].size(), 8u);
  EXPECT_EQ(d["angles"][7]["angle"], "1/6");
  EXPECT_EQ(d["angles"][7]["preperiod"], 1);
}

TEST(Cli, TableFormat) {
  Result r = run({"poly", "misiurewicz", "--n", "2", "--t", "2", "--h", "1", "--factor", "--format", "table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("c^3 + 2*c^2 + 2*c + 2"), std::string::npos);
  EXPECT_NE(r.out.find("[factors]"), std::string::npos);
  Result e = run({"poly", "gleason", "--n", "0", "--format", "table"});
  EXPECT_EQ(e.code, 2);
  EXPECT_NE(e.out.find("error.kind"), std::string::npos);
}

TEST(Cache, HitAndMissAreByteIdentical) {
  TempDir dir;
  const std::vector<std::string> cmd = {"verify", "thm14", "--n", "2", "--h", "2", "--m", "2", "--cache-dir", dir.str()};
  Result miss = run(cmd);
  Result hit = run(cmd);
  EXPECT_EQ(miss.out, hit.out);
  EXPECT_EQ(miss.code, hit.code);
  Result nocache = run({"verify", "thm14", "--n", "2", "--h", "2", "--m", "2"});
  EXPECT_EQ(miss.out, nocache.out);
  DiskCache c(dir.path());
  EXPECT_EQ(c.stat().entries, 1u);
  // Cached exit codes survive too.
  const std::vector<std::string> capped = {"verify", "thm14", "--n", "2", "--h", "6", "--m", "1",
                                           "--degree-cap", "20", "--cache-dir", dir.str()};
  EXPECT_EQ(run(capped).code, 3);
  EXPECT_EQ(run(capped).code, 3);
}

TEST(Cache, CorruptEntriesAreRecomputed) {
  TempDir dir;
  const std::vector<std::string> cmd = {"poly", "gleason", "--n", "2", "--h", "3", "--cache-dir", dir.str()};
  Result first = run(cmd);
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir.path())) {
    ++files;
    std::ofstream(e.path(), std::ios::trunc) << R"({"key":"x","hash":"0","payload":{"doc":{"bogus":1},"code":0}})";
  }
  EXPECT_EQ(files, 1);
  EXPECT_EQ(DiskCache(dir.path()).stat().corrupt, 1u);
  Result again = run(cmd);
  EXPECT_EQ(first.out, again.out);
  EXPECT_EQ(DiskCache(dir.path()).stat().corrupt, 0u);
}

TEST(Cache, KeyIncludesEveryParameter) {
  TempDir dir;
  Result a = run({"poly", "gleason", "--n", "2", "--h", "3", "--cache-dir", dir.str()});
  Result b = run({"poly", "gleason", "--n", "2", "--h", "4", "--cache-dir", dir.str()});
  Result c = run({"poly", "gleason", "--n", "2", "--h", "3", "--coord", "chat", "--cache-dir", dir.str()});
  EXPECT_NE(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(DiskCache(dir.path()).stat().entries, 3u);
}

TEST(Cache, GcAndStat) {
  TempDir dir;
  Result empty = run({"cache", "gc", "--max-bytes", "0", "--cache-dir", dir.str()});
  EXPECT_EQ(empty.code, 0);
  EXPECT_TRUE(empty.doc()["evicted"].empty());

  const std::vector<std::string> cmd = {"poly", "parabolic", "--n", "2", "--h", "2", "--m", "1", "--cache-dir", dir.str()};
  Result first = run(cmd);
  run({"poly", "gleason", "--n", "2", "--h", "2", "--cache-dir", dir.str()});
  auto st = run({"cache", "stat", "--cache-dir", dir.str()}).doc();
  EXPECT_EQ(st["entries"], 2);

  Result gc = run({"cache", "gc", "--max-bytes", "0", "--cache-dir", dir.str()});
  EXPECT_EQ(gc.doc()["evicted"].size(), 2u);
  EXPECT_EQ(gc.doc()["bytes_after"], "0");
  EXPECT_EQ(run({"cache", "stat", "--cache-dir", dir.str()}).doc()["entries"], 0);
  EXPECT_EQ(run(cmd).out, first.out);

  EXPECT_EQ(run({"cache", "stat"}).code, 2);
}

TEST(Cache, LeastRecentlyUsedGoesFirst) {
  TempDir dir;
  DiskCache c(dir.path());
  c.put("a", {{"v", 1}});
  c.put("b", {{"v", 2}});
  const auto old = fs::file_time_type::clock::now() - std::chrono::hours(1);
  fs::last_write_time(c.path_for("a"), old);
  fs::last_write_time(c.path_for("b"), old - std::chrono::hours(1));
  ASSERT_TRUE(c.get("b").has_value());  // touching b makes a the oldest
  const auto one = fs::file_size(c.path_for("b"));
  auto s = c.gc(one);
  ASSERT_EQ(s.evicted.size(), 1u);
  EXPECT_EQ(s.evicted[0], "a");
  EXPECT_TRUE(c.get("b").has_value());
  EXPECT_FALSE(c.get("a").has_value());
}

TEST(Cache, EnvironmentSuppliesDirectory) {
  TempDir dir;
  ::setenv("UNICRIT_CACHE", dir.str().c_str(), 1);
  run({"poly", "gleason", "--n", "2", "--h", "2"});
  ::unsetenv("UNICRIT_CACHE");
  EXPECT_EQ(DiskCache(dir.path()).stat().entries, 1u);
}

TEST(Cache, HashIsFnv1a) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
}
