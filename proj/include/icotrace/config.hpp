#pragma once

#include <map>
#include <string>
#include <vector>

namespace icotrace {

// Line-oriented key/value scenario config with [section] headers. Values
// keep their raw text; typed accessors parse on demand. Keys are addressed
// as "section.key"; keys before any header live in section "run".
class RunConfig {
public:
    static RunConfig parse_file(const std::string& path);
    static RunConfig parse_text(const std::string& text);

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;                     // throws if absent
    std::string get_or(const std::string& key, const std::string& d) const;
    long long get_int(const std::string& key) const;
    long long get_int_or(const std::string& key, long long d) const;
    double get_double_or(const std::string& key, double d) const;
    std::vector<std::string> get_list_or(const std::string& key) const;  // whitespace-split

    const std::map<std::string, std::string>& entries() const { return entries_; }
    // FNV-1a of the normalized entries, for report metadata
    std::string digest() const;

private:
    std::map<std::string, std::string> entries_;
};

}  // namespace icotrace
