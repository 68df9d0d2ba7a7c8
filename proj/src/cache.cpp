#include "npscan/cache.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "npscan/errors.hpp"

namespace npscan {

std::string cache_key(const QPoly& f, std::uint64_t p, std::uint64_t c, const std::string& version) {
  std::string canonical = version + "|";
  for (const auto& coeff : f.coeffs()) canonical += rational_string(coeff) + ",";
  canonical += "|" + std::to_string(p) + "|" + std::to_string(c);
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char ch : canonical) {
    hash ^= ch;
    hash *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << hash;
  return os.str();
}

ResultCache::ResultCache(std::string path, std::string version) : path_(std::move(path)), version_(std::move(version)) {
  std::ifstream in(path_);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (j.at("version").get<std::string>() != version_) continue;
      entries_.insert_or_assign(j.at("key").get<std::string>(), polygon_from_cell(j.at("polygon").get<std::string>()));
    } catch (const std::exception& err) {
      warnings_.push_back(path_ + ":" + std::to_string(lineno) + ": skipped corrupt cache line (" + err.what() + ")");
    }
  }
}

std::optional<ConvexPolygon> ResultCache::get(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::put(const std::string& key, const ConvexPolygon& polygon) {
  std::lock_guard lock(mutex_);
  nlohmann::json j{{"version", version_}, {"key", key}, {"polygon", polygon_to_cell(polygon)}};
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cache path not writable: " + path_);
  out << j.dump() << '\n';
  entries_.insert_or_assign(key, polygon);
}

}  // namespace npscan
