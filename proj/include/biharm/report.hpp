#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace biharm {

enum class Format { json, csv, md };

Format parse_format(const std::string& name);

struct Check {
    std::string name;
    bool passed{true};
    // Known discrepancies are reported but do not fail the run.
    bool flagged{false};
    std::string detail;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::ordered_json>> rows;
    // Single-row summaries repeat the scalar results and stay out of json.
    bool in_json{true};
};

struct Report {
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    // The claim being reproduced, in words.
    std::string paper_anchor;
    std::vector<Check> checks;
    // Row data for csv and md; json carries it under results.
    Table table;

    bool passed() const;
    void check(std::string name, bool ok, std::string detail = {});
    void flag(std::string name, std::string detail);
};

constexpr int kSchemaVersion = 1;

// Rounds to 10 significant digits so reports are stable across platforms.
nlohmann::ordered_json number(double v);
std::string format_double(double v);

std::string render(const Report& report, Format format);

}  // namespace biharm
