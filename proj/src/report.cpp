#include "biharm/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "biharm/errors.hpp"

namespace biharm {

Format parse_format(const std::string& name)
{
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "md") return Format::md;
    throw UsageError("unknown format '" + name + "' (expected json, csv or md)");
}

bool Report::passed() const
{
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

void Report::check(std::string name, bool ok, std::string detail)
{
    checks.push_back({std::move(name), ok, false, std::move(detail)});
}

void Report::flag(std::string name, std::string detail)
{
    checks.push_back({std::move(name), true, true, std::move(detail)});
}

std::string format_double(double v)
{
    if (v == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

nlohmann::ordered_json number(double v)
{
    if (!std::isfinite(v)) return nullptr;
    return std::stod(format_double(v));
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string cell_text(const nlohmann::ordered_json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string status(const Check& c)
{
    if (!c.passed) return "FAIL";
    return c.flagged ? "FLAG" : "PASS";
}

std::string render_json(const Report& r)
{
    nlohmann::ordered_json j;
    j["schema"] = kSchemaVersion;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    nlohmann::ordered_json results = r.results;
    if (r.table.in_json && !r.table.columns.empty()) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : r.table.rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < r.table.columns.size(); ++i) obj[r.table.columns[i]] = row[i];
            rows.push_back(obj);
        }
        results["rows"] = rows;
    }
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json o;
        o["name"] = c.name;
        o["status"] = status(c);
        if (!c.detail.empty()) o["detail"] = c.detail;
        checks.push_back(o);
    }
    results["checks"] = checks;
    results["passed"] = r.passed();
    j["results"] = results;
    j["paper_anchor"] = r.paper_anchor;
    return j.dump(2) + "\n";
}

std::string render_csv(const Report& r)
{
    std::ostringstream out;
    if (r.table.columns.empty()) {
        out << "key,value\n";
        for (const auto& [k, v] : r.results.items()) out << csv_field(k) << ',' << csv_field(cell_text(v)) << '\n';
        return out.str();
    }
    for (std::size_t i = 0; i < r.table.columns.size(); ++i) out << (i ? "," : "") << csv_field(r.table.columns[i]);
    out << '\n';
    for (const auto& row : r.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row[i]));
        out << '\n';
    }
    return out.str();
}

std::string render_md(const Report& r)
{
    std::ostringstream out;
    out << "## " << r.command << "\n\n";
    if (!r.table.columns.empty()) {
        out << '|';
        for (const auto& c : r.table.columns) out << ' ' << c << " |";
        out << "\n|";
        for (std::size_t i = 0; i < r.table.columns.size(); ++i) out << " --- |";
        out << '\n';
        for (const auto& row : r.table.rows) {
            out << '|';
            for (const auto& cell : row) out << ' ' << cell_text(cell) << " |";
            out << '\n';
        }
        out << '\n';
    } else {
        for (const auto& [k, v] : r.results.items())
            out << "- " << k << ": " << cell_text(v) << '\n';
        out << '\n';
    }
    for (const auto& c : r.checks) {
        out << "- [" << status(c) << "] " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string render(const Report& report, Format format)
{
    switch (format) {
    case Format::json: return render_json(report);
    case Format::csv: return render_csv(report);
    case Format::md: return render_md(report);
    }
    return {};
}

}  // namespace biharm
