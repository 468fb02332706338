#pragma once

// Append-only results cache: one json object per line,
//   {"key": "Z/7", "record": {...}, "created_at": "...", "tool_version": "..."}.
// Lookups take the entry with the highest tool_version, and the last such
// line when versions tie. Unreadable lines are skipped.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zerosum/search.hpp"
#include "zerosum/version.hpp"

namespace zerosum {

nlohmann::json record_to_json(const ConstantRecord& r);
ConstantRecord record_from_json(const nlohmann::json& j);

/// Orders dotted numeric versions ("0.10.0" > "0.9.3"); -1, 0 or 1.
int compare_versions(const std::string& a, const std::string& b);

struct CacheEntry {
  std::string key;
  ConstantRecord record;
  std::string created_at;
  std::string tool_version;
};

class ResultsCache {
 public:
  explicit ResultsCache(std::filesystem::path path);

  /// $ZEROSUM_CACHE if set, else ./zerosum_cache.jsonl.
  static std::filesystem::path default_path();

  const std::filesystem::path& path() const { return path_; }

  std::optional<ConstantRecord> get(const std::string& key) const;
  /// Appends under an exclusive flock on the file.
  void put(const ConstantRecord& record, const std::string& tool_version = std::string(kToolVersion));

  /// Warnings from the most recent get(), one per skipped line.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::filesystem::path path_;
  mutable std::vector<std::string> warnings_;
};

}  // namespace zerosum
