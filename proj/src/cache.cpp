#include "sylow/cache.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace sylow {

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // nothing persisted yet
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object() || !rec.contains("key") ||
            !rec.contains("value") || !rec["key"].is_string()) {
            std::cerr << "cache: skipping corrupt line " << lineno << " of "
                      << path_ << "\n";
            ++skipped_;
            continue;
        }
        records_[rec["key"].get<std::string>()] = rec["value"].dump();
    }
}

std::string ResultCache::make_key(const std::string& kind, int p, int level,
                                  const Partition& lambda) {
    std::ostringstream os;
    os << kind << '|' << p << '|' << level << '|' << lambda.to_string();
    return os.str();
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = records_.find(key);
    if (it == records_.end()) return std::nullopt;
    ++hits_;
    return it->second;
}

void ResultCache::put(const std::string& key, const std::string& payload_json) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, fresh] = records_.emplace(key, payload_json);
    if (!fresh || path_.empty()) return;
    nlohmann::json rec;
    rec["key"] = key;
    rec["value"] = nlohmann::json::parse(payload_json);
    std::ofstream out(path_, std::ios::app);
    if (out) out << rec.dump() << "\n";
}

size_t ResultCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return records_.size();
}

}  // namespace sylow
