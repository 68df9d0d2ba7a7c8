#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "npscan/polygon.hpp"
#include "npscan/rational_poly.hpp"

namespace npscan {

inline constexpr const char* kCacheVersion = "npscan-cache-1";

/// Content key for (f, p, c) under a version tag (FNV-1a over a canonical string).
std::string cache_key(const QPoly& f, std::uint64_t p, std::uint64_t c, const std::string& version = kCacheVersion);

/// Append-only JSON-lines store of Newton polygons. Lines that fail to parse
/// or whose polygon is not a valid convex polygon are skipped with a warning.
class ResultCache {
 public:
  explicit ResultCache(std::string path, std::string version = kCacheVersion);

  std::optional<ConvexPolygon> get(const std::string& key) const;
  void put(const std::string& key, const ConvexPolygon& polygon);

  const std::vector<std::string>& warnings() const { return warnings_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::string path_;
  std::string version_;
  std::map<std::string, ConvexPolygon> entries_;
  std::vector<std::string> warnings_;
  mutable std::mutex mutex_;
};

}  // namespace npscan
