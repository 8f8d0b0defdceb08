#pragma once

// JSON documents for truth tables and spectrum reports.
//
// Truth table:  {"n": 5, "family": "chi:5", "entries": ["0", "1b", ...]}
//   entries[u] is F(u) as lowercase hex under the x_0 = LSB convention.
// Report:       {"metric": "differential", "n": 5, "headline": 8,
//                "spectrum": [[0, 676], [2, 176], ...], "domain": "a!=0,all b"}

#include <filesystem>
#include <string>

#include <json.hpp>

#include "chimap/boolmap.hpp"
#include "chimap/metrics.hpp"

namespace chimap {

struct TableDocument {
    std::string family;
    TruthTable table;
};

nlohmann::ordered_json table_to_json(const TruthTable& table, const std::string& family);
// Throws ParseError on missing fields or malformed hex; DomainError on bad sizes.
TableDocument table_from_json(const nlohmann::json& doc);

void write_table(const std::filesystem::path& path, const TruthTable& table, const std::string& family);
// Throws std::ios_base::failure when the file cannot be read.
TableDocument read_table(const std::filesystem::path& path);

nlohmann::ordered_json report_to_json(const SpectrumReport& report);

}  // namespace chimap
