#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace unicrit {

inline constexpr const char* kArtifactVersion = "1.0.0";

std::uint64_t fnv1a64(const std::string& data);

/// On-disk store of computed documents. Entries are keyed by a canonical
/// string that includes the artifact version; payloads carry a content hash
/// and are recomputed when it does not verify.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& payload) const;

  struct Stat {
    std::size_t entries = 0;
    std::uintmax_t bytes = 0;
    std::size_t corrupt = 0;
  };
  Stat stat() const;

  struct GcSummary {
    std::uintmax_t bytes_before = 0, bytes_after = 0;
    std::vector<std::string> evicted;  // keys, oldest first
  };
  /// Least-recently-used eviction down to max_bytes.
  GcSummary gc(std::uintmax_t max_bytes) const;

  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

nlohmann::json to_json(const DiskCache::Stat& s);
nlohmann::json to_json(const DiskCache::GcSummary& s);

}  // namespace unicrit
