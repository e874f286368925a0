#pragma once

#include "gwloc/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gwloc {

struct CacheRecord {
    std::string key;
    nlohmann::json query;
    Rational value;
    std::vector<std::uint64_t> seeds;
    std::uint64_t graph_count = 0;
    std::string engine_version;
    std::string created_at;  ///< UTC, ISO 8601
};

nlohmann::json rational_to_json(const Rational& r);
/// Accepts {"num": "...", "den": "..."}; throws InvalidInput otherwise.
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const CacheRecord& record);
CacheRecord record_from_json(const nlohmann::json& j);

/// Result store: one `<key>.json` document per query plus an append-only `index.ndjson`.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    /// --cache-dir, then $GW_CACHE_DIR, then $XDG_CACHE_HOME/gwloc or ~/.cache/gwloc.
    static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);

    /// SHA-256 hex digest of the engine version and canonical query text.
    static std::string make_key(const std::string& canonical_query, const std::string& engine_version);

    const std::filesystem::path& dir() const noexcept { return dir_; }

    std::optional<CacheRecord> lookup(const std::string& key) const;

    /// Writes the record atomically (temp file + rename) and appends to the index.
    void store(const CacheRecord& record) const;

private:
    std::filesystem::path dir_;
};

std::string utc_timestamp();

} // namespace gwloc
