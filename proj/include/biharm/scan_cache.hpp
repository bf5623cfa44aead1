#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biharm/torus.hpp"

namespace biharm {

// Append-only JSON-lines store of torus scan records, one per k. The first
// line is a header with the format version and the enumeration bound.
class ScanCache {
public:
    static constexpr int kVersion = 1;
    static constexpr const char* kFormat = "biharm-torus-scan";
    static constexpr const char* kScanBound = "m^2+n^2<9k^2";
    static constexpr const char* kFileName = "torus_scan.jsonl";

    explicit ScanCache(std::filesystem::path directory);

    // Directory from the flag, else BIHARM_CACHE_DIR, else none.
    static std::optional<std::filesystem::path> resolve_directory(const std::string& flag);

    const std::filesystem::path& file() const { return file_; }

    // Records whose probe pair still has the stored λ⁻ sign. Records that fail
    // are dropped and counted; a file with a foreign header is ignored.
    std::map<long, ScanRecord> load();
    void append(const std::vector<ScanRecord>& records);

    std::size_t rejected() const { return rejected_; }

private:
    std::filesystem::path file_;
    std::size_t rejected_{0};
};

// Deterministic (m, n) with 1 ≤ m, n < 3k used to revalidate the record for k.
LatticePair cache_probe_pair(long k);

// conjecture_scan that reads and extends the cache when one is given.
std::vector<ScanRecord> cached_scan(long k_min, long k_max, unsigned workers, ScanCache* cache);

}  // namespace biharm
