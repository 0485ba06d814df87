#pragma once

#include <string>
#include <vector>

namespace icotrace {

// Report document: a named set of TSV tables plus a JSON mirror, rendered
// deterministically (fixed float formatting, ordered keys).
class ReportDocument {
public:
    ReportDocument(std::string command, std::string config_digest);

    void add_note(const std::string& note);
    // begin a table; subsequent add_row calls append to it
    void begin_table(const std::string& name, const std::vector<std::string>& columns);
    void add_row(const std::vector<std::string>& cells);
    void set_status(bool pass, const std::string& summary);

    bool pass() const { return pass_; }
    const std::string& summary() const { return summary_; }

    std::string to_tsv() const;
    std::string to_json() const;
    // writes <command>.tsv and <command>.json under dir (created if needed);
    // returns the TSV path
    std::string write(const std::string& dir) const;

    static std::string format_double(double v);

private:
    struct Table {
        std::string name;
        std::vector<std::string> columns;
        std::vector<std::vector<std::string>> rows;
    };
    std::string command_, digest_, summary_;
    bool pass_ = true;
    std::vector<std::string> notes_;
    std::vector<Table> tables_;
};

}  // namespace icotrace
