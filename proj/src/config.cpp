#include "korteweg/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace korteweg {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

}  // namespace

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                            ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                            ": empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = strip_quotes(trim(line.substr(eq + 1)));
        if (key.empty())
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": empty key");
        const std::string full = section.empty() ? key : section + "." + key;
        if (!cfg.values_.emplace(full, value).second)
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": duplicate key '" + full + "'");
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

void Config::apply_override(const std::string& keyval) {
    const auto eq = keyval.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("override must be key=value: " + keyval);
    values_[trim(keyval.substr(0, eq))] = strip_quotes(trim(keyval.substr(eq + 1)));
}

bool Config::has(const std::string& key) const {
    if (values_.count(key) == 0) return false;
    read_.insert(key);
    return true;
}

const std::string& Config::fetch(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw std::invalid_argument("missing config key '" + key + "'");
    read_.insert(key);
    return it->second;
}

std::string Config::get_string(const std::string& key) const { return fetch(key); }

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    read_.insert(key);
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string& raw = fetch(key);
    char* end = nullptr;
    const double v = std::strtod(raw.c_str(), &end);
    if (end == raw.c_str() || *end != '\0')
        throw std::invalid_argument("config key '" + key + "' is not a number: " + raw);
    return v;
}

double Config::get_double(const std::string& key, double fallback) const {
    read_.insert(key);
    return values_.count(key) ? get_double(key) : fallback;
}

int Config::get_int(const std::string& key) const {
    const std::string& raw = fetch(key);
    char* end = nullptr;
    const long v = std::strtol(raw.c_str(), &end, 10);
    if (end == raw.c_str() || *end != '\0')
        throw std::invalid_argument("config key '" + key + "' is not an integer: " + raw);
    return static_cast<int>(v);
}

int Config::get_int(const std::string& key, int fallback) const {
    read_.insert(key);
    return values_.count(key) ? get_int(key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    read_.insert(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const std::string& raw = it->second;
    if (raw == "true" || raw == "yes" || raw == "1") return true;
    if (raw == "false" || raw == "no" || raw == "0") return false;
    throw std::invalid_argument("config key '" + key + "' is not a boolean: " + raw);
}

std::vector<std::string> Config::unread_keys() const {
    std::vector<std::string> out;
    for (const auto& [key, value] : values_)
        if (read_.count(key) == 0) out.push_back(key);
    return out;
}

void Config::require_all_read() const {
    const auto bad = unread_keys();
    if (bad.empty()) return;
    std::string msg = "unknown config key(s):";
    for (const auto& k : bad) msg += " '" + k + "'";
    throw std::invalid_argument(msg);
}

}  // namespace korteweg
