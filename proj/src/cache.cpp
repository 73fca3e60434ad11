#include "unicrit/cache.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace unicrit {

namespace fs = std::filesystem;

namespace {

constexpr const char* kSuffix = ".entry.json";

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::optional<nlohmann::json> read_entry(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(ss.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("payload") || !j.contains("hash"))
    return std::nullopt;
  if (!j["hash"].is_string() || j["hash"] != hex64(fnv1a64(j["payload"].dump()))) return std::nullopt;
  return j;
}

bool is_entry(const fs::directory_entry& e) {
  const std::string name = e.path().filename().string();
  return e.is_regular_file() && name.size() > std::string(kSuffix).size() &&
         name.compare(name.size() - std::string(kSuffix).size(), std::string::npos, kSuffix) == 0;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path DiskCache::path_for(const std::string& key) const { return dir_ / (hex64(fnv1a64(key)) + kSuffix); }

std::optional<nlohmann::json> DiskCache::get(const std::string& key) const {
  const fs::path p = path_for(key);
  auto j = read_entry(p);
  if (!j || (*j)["key"] != key) return std::nullopt;
  std::error_code ec;
  fs::last_write_time(p, fs::file_time_type::clock::now(), ec);  // recency for gc
  return (*j)["payload"];
}

void DiskCache::put(const std::string& key, const nlohmann::json& payload) const {
  static std::atomic<unsigned long> counter{0};
  nlohmann::json j = {{"key", key}, {"hash", hex64(fnv1a64(payload.dump()))}, {"payload", payload}};
  const fs::path final_path = path_for(key);
  const fs::path tmp = dir_ / (".tmp-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw fs::filesystem_error("cannot write cache entry", tmp, std::make_error_code(std::errc::io_error));
    out << j.dump();
    out.flush();
    if (!out) throw fs::filesystem_error("short write", tmp, std::make_error_code(std::errc::io_error));
  }
  fs::rename(tmp, final_path);
}

DiskCache::Stat DiskCache::stat() const {
  Stat s;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (!is_entry(e)) continue;
    ++s.entries;
    s.bytes += e.file_size();
    if (!read_entry(e.path())) ++s.corrupt;
  }
  return s;
}

DiskCache::GcSummary DiskCache::gc(std::uintmax_t max_bytes) const {
  struct Item {
    fs::path path;
    fs::file_time_type mtime;
    std::uintmax_t size;
  };
  std::vector<Item> items;
  GcSummary out;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (!is_entry(e)) continue;
    items.push_back({e.path(), e.last_write_time(), e.file_size()});
    out.bytes_before += items.back().size;
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.mtime != b.mtime ? a.mtime < b.mtime : a.path < b.path;
  });
  out.bytes_after = out.bytes_before;
  for (const auto& it : items) {
    if (out.bytes_after <= max_bytes) break;
    auto j = read_entry(it.path);
    fs::remove(it.path);
    out.bytes_after -= it.size;
    out.evicted.push_back(j ? (*j)["key"].get<std::string>() : it.path.filename().string());
  }
  return out;
}

nlohmann::json to_json(const DiskCache::Stat& s) {
  return {{"entries", s.entries}, {"bytes", std::to_string(s.bytes)}, {"corrupt", s.corrupt}};
}

nlohmann::json to_json(const DiskCache::GcSummary& s) {
  return {{"bytes_before", std::to_string(s.bytes_before)},
          {"bytes_after", std::to_string(s.bytes_after)},
          {"evicted", s.evicted}};
}

}  // namespace unicrit
