#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trackassoc/errors.hpp"

namespace trackassoc {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// Strict numeric parsing: the whole token must be consumed.
inline double parse_double(std::string_view s, const std::string& what) {
    const std::string t = trim(s);
    if (t.empty()) throw ConfigError(what + ": empty value");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) throw ConfigError(what + ": not a number: '" + t + "'");
    return v;
}

inline long long parse_int(std::string_view s, const std::string& what) {
    const std::string t = trim(s);
    long long v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
        throw ConfigError(what + ": not an integer: '" + t + "'");
    return v;
}

// Plain key=value settings file. '#' starts a comment, blank lines are
// skipped, keys may not repeat.
class KeyValueFile {
public:
    static KeyValueFile parse(std::istream& in, const std::string& name) {
        KeyValueFile kv;
        kv.name_ = name;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const std::string t = trim(line.substr(0, line.find('#')));
            if (t.empty()) continue;
            const auto eq = t.find('=');
            if (eq == std::string::npos)
                throw ConfigError(name + " line " + std::to_string(line_no) +
                                  ": expected key=value, got '" + t + "'");
            const std::string key = trim(t.substr(0, eq));
            const std::string value = trim(t.substr(eq + 1));
            if (key.empty())
                throw ConfigError(name + " line " + std::to_string(line_no) + ": empty key");
            if (!kv.values_.emplace(key, value).second)
                throw ConfigError(name + ": duplicate key '" + key + "'");
        }
        return kv;
    }

    static KeyValueFile load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file: " + path);
        return parse(in, path);
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    const std::string& get(const std::string& key) const {
        const auto it = values_.find(key);
        if (it == values_.end()) throw ConfigError(name_ + ": missing key '" + key + "'");
        return it->second;
    }

    std::string get_or(const std::string& key, const std::string& fallback) const {
        const auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    double get_double(const std::string& key) const { return parse_double(get(key), name_ + ": " + key); }
    double get_double_or(const std::string& key, double fallback) const {
        return has(key) ? get_double(key) : fallback;
    }
    long long get_int(const std::string& key) const { return parse_int(get(key), name_ + ": " + key); }
    long long get_int_or(const std::string& key, long long fallback) const {
        return has(key) ? get_int(key) : fallback;
    }

    // Reject anything outside the allowed key set.
    void require_known_keys(const std::vector<std::string>& allowed) const {
        for (const auto& [key, value] : values_) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                throw ConfigError(name_ + ": unknown key '" + key + "'");
        }
    }

    const std::map<std::string, std::string>& values() const { return values_; }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::map<std::string, std::string> values_;
};

}  // namespace trackassoc
