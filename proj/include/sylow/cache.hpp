#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "sylow/partition.hpp"

namespace sylow {

// Line-oriented persistent result store: one JSON record per line, keyed
// by (kind, p, level, partition).  Corrupt lines are skipped with a
// warning on load and never trusted.  A cache hit must never change an
// emitted value; payloads are written exactly as computed.
class ResultCache {
  public:
    ResultCache() = default;                 // disabled
    explicit ResultCache(std::string path);  // loads existing records

    static std::string make_key(const std::string& kind, int p, int level,
                                const Partition& lambda);

    bool enabled() const { return !path_.empty(); }
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& payload_json);

    size_t size() const;
    size_t hits() const { return hits_; }
    size_t skipped_lines() const { return skipped_; }

  private:
    std::string path_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::string> records_;
    mutable size_t hits_ = 0;
    size_t skipped_ = 0;
};

}  // namespace sylow
