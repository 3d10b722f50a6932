#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "permap/census.hpp"
#include "permap/theorems.hpp"

namespace permap {

// Version stamped into every serialized record and cache header.
inline constexpr int kSchemaVersion = 1;

// CSV with header "g,n,orbit_genus,class,power_class_id"; one row per class,
// records ascending by order, rows in canonical class order.
std::string census_to_csv(const std::vector<CensusRecord>& records);

// JSON lines. One object per (g, n, orbit_genus) group so each line carries
// a single orbit_genus; power_class ids are shared across the lines of one
// (g, n) record.
std::string census_to_jsonl(const std::vector<CensusRecord>& records);

// Human-readable listing.
std::string census_to_text(const std::vector<CensusRecord>& records);

// Parse census_to_jsonl output (also the cache payload). Throws
// std::invalid_argument on malformed or version-mismatched input.
std::vector<CensusRecord> census_from_jsonl(const std::string& text);

// Per-genus cache: a header line {"permap_census":1,"genus":g} followed by
// the JSONL records. Readers ignore files whose version does not match.
std::filesystem::path cache_file(const std::filesystem::path& dir, Int genus);
void write_cache(const std::filesystem::path& dir, Int genus,
                 const std::vector<CensusRecord>& records);
std::optional<std::vector<CensusRecord>> read_cache(const std::filesystem::path& dir, Int genus);

std::string report_to_text(const CheckReport& report);
std::string report_to_json(const CheckReport& report);

} // namespace permap
