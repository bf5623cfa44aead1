#include "biharm/scan_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

#include <json.hpp>

#include "biharm/errors.hpp"

namespace biharm {

namespace {

nlohmann::ordered_json header_json()
{
    nlohmann::ordered_json h;
    h["format"] = ScanCache::kFormat;
    h["version"] = ScanCache::kVersion;
    h["scan_bound"] = ScanCache::kScanBound;
    return h;
}

bool header_matches(const nlohmann::json& h)
{
    return h.is_object() && h.value("format", "") == ScanCache::kFormat && h.value("version", 0) == ScanCache::kVersion &&
           h.value("scan_bound", "") == ScanCache::kScanBound;
}

nlohmann::ordered_json record_json(const ScanRecord& r)
{
    const auto [m, n] = cache_probe_pair(r.k);
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["f"] = r.f;
    j["g"] = r.g;
    j["index"] = r.index;
    j["nullity"] = r.nullity;
    j["negative_pairs_digest"] = r.negative_pairs_digest;
    j["probe"] = {{"m", m}, {"n", n}, {"sign", sign_lambda_minus(r.k, m, n)}};
    return j;
}

}  // namespace

LatticePair cache_probe_pair(long k)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(k));
    const long hi = std::max(1L, 3 * k - 1);
    std::uniform_int_distribution<long> pick(1, hi);
    const long m = pick(rng);
    const long n = pick(rng);
    return {m, n};
}

ScanCache::ScanCache(std::filesystem::path directory) : file_(std::move(directory) / kFileName) {}

std::optional<std::filesystem::path> ScanCache::resolve_directory(const std::string& flag)
{
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv("BIHARM_CACHE_DIR"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
}

std::map<long, ScanRecord> ScanCache::load()
{
    std::map<long, ScanRecord> out;
    rejected_ = 0;
    std::ifstream in(file_);
    if (!in) return out;
    std::string line;
    if (!std::getline(in, line)) return out;
    const nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
    if (!header_matches(header)) return out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        try {
            ScanRecord r;
            r.k = j.at("k").get<long>();
            r.f = j.at("f").get<std::int64_t>();
            r.g = j.at("g").get<std::int64_t>();
            r.index = j.at("index").get<std::int64_t>();
            r.nullity = j.at("nullity").get<std::int64_t>();
            r.negative_pairs_digest = j.at("negative_pairs_digest").get<std::uint64_t>();
            const auto& probe = j.at("probe");
            const long m = probe.at("m").get<long>();
            const long n = probe.at("n").get<long>();
            const bool consistent = r.k >= 1 && r.index == 1 + 4 * (r.k - 1) + 4 * r.f && r.nullity == 5 + 4 * r.g;
            if (!consistent || sign_lambda_minus(r.k, m, n) != probe.at("sign").get<int>()) {
                ++rejected_;
                continue;
            }
            out[r.k] = r;
        } catch (const std::exception&) {
            ++rejected_;
        }
    }
    return out;
}

void ScanCache::append(const std::vector<ScanRecord>& records)
{
    if (records.empty()) return;
    std::filesystem::create_directories(file_.parent_path());
    bool fresh = !std::filesystem::exists(file_);
    if (!fresh) {
        std::ifstream in(file_);
        std::string line;
        fresh = !std::getline(in, line) || !header_matches(nlohmann::json::parse(line, nullptr, false));
    }
    std::ofstream out(file_, fresh ? std::ios::trunc : std::ios::app);
    if (!out) throw Error("cannot write cache file " + file_.string());
    if (fresh) out << header_json().dump() << '\n';
    for (const auto& r : records) out << record_json(r).dump() << '\n';
}

std::vector<ScanRecord> cached_scan(long k_min, long k_max, unsigned workers, ScanCache* cache)
{
    if (k_min < 1 || k_max < k_min) throw UsageError("scan range needs 1 <= k_min <= k_max");
    if (!cache) return conjecture_scan(k_max, workers, k_min);

    std::map<long, ScanRecord> have = cache->load();
    std::vector<ScanRecord> computed;
    // Contiguous gaps are scanned as ranges so the parallel schedule still applies.
    long k = k_min;
    while (k <= k_max) {
        if (have.count(k)) {
            ++k;
            continue;
        }
        long end = k;
        while (end + 1 <= k_max && !have.count(end + 1)) ++end;
        for (const auto& r : conjecture_scan(end, workers, k)) computed.push_back(r);
        k = end + 1;
    }
    cache->append(computed);
    for (const auto& r : computed) have[r.k] = r;
    std::vector<ScanRecord> out;
    for (long j = k_min; j <= k_max; ++j) out.push_back(have.at(j));
    return out;
}

}  // namespace biharm
