#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace yh::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct CacheKey {
  std::string family;
  int d = 1;
  std::vector<int> D;
  std::string braid;  // canonical text
  std::string tool_version = kToolVersion;

  std::string text() const;
};

/// Append-only JSON-lines store of rendered results. I/O problems are
/// reported on the error stream and otherwise ignored.
class Cache {
 public:
  Cache(std::string path, std::ostream& err);

  std::optional<std::string> get(const CacheKey& key);
  void put(const CacheKey& key, const std::string& record);

 private:
  std::string path_;
  std::ostream& err_;
  std::mutex mutex_;
  std::map<std::string, std::string> entries_;
};

}  // namespace yh::cli
