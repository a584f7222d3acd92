#include "cache.hpp"

#include "json.hpp"

#include <fstream>

namespace yh::cli {

using nlohmann::json;

std::string CacheKey::text() const {
  return json{{"family", family}, {"d", d}, {"D", D}, {"braid", braid}, {"toolVersion", tool_version}}.dump();
}

Cache::Cache(std::string path, std::ostream& err) : path_(std::move(path)), err_(err) {
  std::ifstream in(path_);
  if (!in) return;  // a missing file is an empty cache
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      const json rec = json::parse(line);
      CacheKey key{rec.at("family"), rec.at("d"), rec.at("D").get<std::vector<int>>(), rec.at("braid"),
                   rec.at("toolVersion")};
      entries_[key.text()] = rec.at("result").dump();
    } catch (const std::exception& e) {
      err_ << "cache: skipping line " << number << " of " << path_ << ": " << e.what() << "\n";
    }
  }
}

std::optional<std::string> Cache::get(const CacheKey& key) {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key.text());
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void Cache::put(const CacheKey& key, const std::string& record) {
  std::lock_guard lock(mutex_);
  if (!entries_.emplace(key.text(), record).second) return;
  std::ofstream out(path_, std::ios::app);
  json line = json::parse(key.text());
  line["result"] = json::parse(record);
  if (!(out << line.dump() << "\n")) err_ << "cache: cannot write " << path_ << "\n";
}

}  // namespace yh::cli
