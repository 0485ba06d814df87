#include "icotrace/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace icotrace {

ReportDocument::ReportDocument(std::string command, std::string config_digest)
    : command_(std::move(command)), digest_(std::move(config_digest)) {}

void ReportDocument::add_note(const std::string& note) { notes_.push_back(note); }

void ReportDocument::begin_table(const std::string& name, const std::vector<std::string>& columns) {
    tables_.push_back({name, columns, {}});
}

void ReportDocument::add_row(const std::vector<std::string>& cells) {
    if (tables_.empty()) throw std::logic_error("ReportDocument: no table begun");
    if (cells.size() != tables_.back().columns.size())
        throw std::logic_error("ReportDocument: row width mismatch");
    tables_.back().rows.push_back(cells);
}

void ReportDocument::set_status(bool pass, const std::string& summary) {
    pass_ = pass;
    summary_ = summary;
}

std::string ReportDocument::format_double(double v) {
    char buf[40];
    snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string ReportDocument::to_tsv() const {
    std::ostringstream os;
    os << "# command\t" << command_ << "\n";
    os << "# config\t" << digest_ << "\n";
    for (const auto& n : notes_) os << "# note\t" << n << "\n";
    for (const auto& t : tables_) {
        os << "[" << t.name << "]\n";
        for (size_t i = 0; i < t.columns.size(); ++i)
            os << t.columns[i] << (i + 1 < t.columns.size() ? '\t' : '\n');
        for (const auto& r : t.rows)
            for (size_t i = 0; i < r.size(); ++i) os << r[i] << (i + 1 < r.size() ? '\t' : '\n');
    }
    os << "# status\t" << (pass_ ? "pass" : "FAIL") << "\t" << summary_ << "\n";
    return os.str();
}

std::string ReportDocument::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["config"] = digest_;
    j["notes"] = notes_;
    j["tables"] = nlohmann::ordered_json::array();
    for (const auto& t : tables_) {
        nlohmann::ordered_json jt;
        jt["name"] = t.name;
        jt["columns"] = t.columns;
        jt["rows"] = t.rows;
        j["tables"].push_back(jt);
    }
    j["pass"] = pass_;
    j["summary"] = summary_;
    return j.dump(2) + "\n";
}

std::string ReportDocument::write(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    std::string tsv_path = dir + "/" + command_ + ".tsv";
    {
        std::ofstream out(tsv_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tsv_path);
        out << to_tsv();
    }
    {
        std::ofstream out(dir + "/" + command_ + ".json", std::ios::binary);
        out << to_json();
    }
    return tsv_path;
}

}  // namespace icotrace
