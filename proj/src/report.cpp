#include "bandlim/experiments.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace bandlim {

namespace {

// File-name fragment: keep [A-Za-z0-9_-], map anything else to '_'.
std::string sanitize(const std::string& s) {
    std::string out = s.empty() ? std::string("unnamed") : s;
    for (char& c : out) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_' || c == '-';
        if (!ok) c = '_';
    }
    return out;
}

std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string report_to_json(const ExperimentReport& rep) {
    nlohmann::ordered_json j;
    j["schema"] = "bandlab-report-v1";
    j["kind"] = rep.kind;
    j["name"] = rep.name;

    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.inputs) inputs[k] = v; // std::map iterates sorted
    j["inputs"] = inputs;

    nlohmann::ordered_json tables = nlohmann::ordered_json::object();
    for (const auto& [tname, tab] : rep.tables) {
        nlohmann::ordered_json t;
        t["columns"] = tab.columns;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : tab.rows) {
            if (row.size() != tab.columns.size())
                throw std::logic_error("report table '" + tname + "' has a ragged row");
            rows.push_back(row);
        }
        t["rows"] = rows;
        tables[tname] = t;
    }
    j["tables"] = tables;

    nlohmann::ordered_json fits = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.fitted_constants) fits[k] = v;
    j["fitted_constants"] = fits;

    j["notes"] = rep.notes;
    j["verdict"] = {{"pass", rep.verdict.pass}, {"details", rep.verdict.details}};
    return j.dump(2) + "\n";
}

void write_report(const ExperimentReport& rep, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const std::string base = sanitize(rep.name);

    {
        fs::path jp = fs::path(out_dir) / (base + ".report.json");
        std::ofstream out(jp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + jp.string());
        out << report_to_json(rep);
    }

    for (const auto& [tname, tab] : rep.tables) {
        fs::path cp = fs::path(out_dir) / (base + "." + sanitize(tname) + ".csv");
        std::ofstream out(cp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + cp.string());
        for (size_t i = 0; i < tab.columns.size(); ++i)
            out << (i ? "," : "") << tab.columns[i];
        out << "\n";
        for (const auto& row : tab.rows) {
            for (size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << format_cell(row[i]);
            out << "\n";
        }
    }
}

} // namespace bandlim
