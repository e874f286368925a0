#include "gwloc/cache.hpp"

#include "gwloc/model.hpp"

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unistd.h>

namespace gwloc {

namespace fs = std::filesystem;

nlohmann::json rational_to_json(const Rational& r) {
    return {{"num", r.numerator_str()}, {"den", r.denominator_str()}};
}

Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() || !j["den"].is_string())
        throw InvalidInput("expected {\"num\": string, \"den\": string}");
    try {
        return Rational::parse(j["num"].get<std::string>() + "/" + j["den"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
}

nlohmann::json record_to_json(const CacheRecord& record) {
    return {{"key", record.key},
            {"query", record.query},
            {"value", rational_to_json(record.value)},
            {"seeds", record.seeds},
            {"graph_count", record.graph_count},
            {"engine_version", record.engine_version},
            {"created_at", record.created_at}};
}

CacheRecord record_from_json(const nlohmann::json& j) {
    try {
        CacheRecord r;
        r.key = j.at("key").get<std::string>();
        r.query = j.at("query");
        r.value = rational_from_json(j.at("value"));
        r.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        r.graph_count = j.at("graph_count").get<std::uint64_t>();
        r.engine_version = j.at("engine_version").get<std::string>();
        r.created_at = j.at("created_at").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed cache record: ") + e.what());
    }
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResultCache::resolve_dir(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return fs::path(*flag);
    if (const char* env = std::getenv("GW_CACHE_DIR"); env && *env) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "gwloc";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "gwloc";
    return fs::temp_directory_path() / "gwloc-cache";
}

std::string ResultCache::make_key(const std::string& canonical_query, const std::string& engine_version) {
    const std::string payload = engine_version + "\n" + canonical_query;
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(payload.data(), payload.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
    return hex.str();
}

std::optional<CacheRecord> ResultCache::lookup(const std::string& key) const {
    const fs::path file = dir_ / (key + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        CacheRecord record = record_from_json(j);
        if (record.key != key) return std::nullopt;
        return record;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable records are treated as misses and rewritten
    }
}

void ResultCache::store(const CacheRecord& record) const {
    fs::create_directories(dir_);
    const fs::path final_path = dir_ / (record.key + ".json");
    const fs::path temp_path =
        dir_ / (record.key + ".json.tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(temp_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + temp_path.string());
        out << record_to_json(record).dump(2) << '\n';
        if (!out.flush()) throw std::runtime_error("cannot write cache file " + temp_path.string());
    }
    fs::rename(temp_path, final_path);

    std::ofstream index(dir_ / "index.ndjson", std::ios::app);
    index << nlohmann::json{{"key", record.key}, {"query", record.query}, {"created_at", record.created_at}}.dump()
          << '\n';
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace gwloc
