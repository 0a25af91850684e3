#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace korteweg {

// Flat [section] key = value files, '#' comments. Keys are addressed as
// "section.key". Reads are tracked so a run can reject keys it never consumed
// (typo protection); overrides use the same dotted form.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    // "section.key=value"; creates or replaces
    void apply_override(const std::string& keyval);

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    // keys present in the file but never read by any accessor
    std::vector<std::string> unread_keys() const;
    // throws std::invalid_argument naming the unread keys, if any
    void require_all_read() const;

private:
    std::map<std::string, std::string> values_;
    mutable std::set<std::string> read_;
    std::string origin_;

    const std::string& fetch(const std::string& key) const;
};

}  // namespace korteweg
