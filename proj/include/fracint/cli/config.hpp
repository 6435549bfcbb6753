#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "fracint/cli/schema.hpp"

namespace fracint::cli {

/// Invalid configuration; carries every diagnostic found.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> diagnostics)
        : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

    [[nodiscard]] const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

private:
    static std::string join(const std::vector<std::string>& d) {
        std::string s;
        for (const auto& x : d) s += (s.empty() ? "" : "; ") + x;
        return s;
    }
    std::vector<std::string> diagnostics_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline bool parse_real(std::string_view s, double& out) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
    return r.ec == std::errc{} && r.ptr == s.data() + s.size() && !s.empty();
}

inline bool parse_integer(std::string_view s, long long& out) {
    s = trim(s);
    const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
    return r.ec == std::errc{} && r.ptr == s.data() + s.size() && !s.empty();
}

inline std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    s = trim(s);
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace detail

/// Flat key = value experiment description. Lines starting with '#' are
/// comments; list values are comma separated.
class ExperimentConfig {
public:
    [[nodiscard]] static ExperimentConfig parse(std::string_view text) {
        ExperimentConfig cfg;
        std::vector<std::string> diag;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto nl = text.find('\n', pos);
            const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
            ++line_no;
            const auto line = detail::trim(raw);
            if (line.empty() || line.front() == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) {
                diag.push_back("line " + std::to_string(line_no) + ": expected 'key = value'");
                continue;
            }
            const std::string key(detail::trim(line.substr(0, eq)));
            const std::string value(detail::trim(line.substr(eq + 1)));
            if (key.empty()) {
                diag.push_back("line " + std::to_string(line_no) + ": empty key");
                continue;
            }
            if (cfg.values_.count(key)) {
                diag.push_back("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
                continue;
            }
            cfg.values_[key] = value;
        }
        if (diag.empty()) cfg.validate(diag);
        if (!diag.empty()) throw ConfigError(std::move(diag));
        return cfg;
    }

    [[nodiscard]] static ExperimentConfig load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ConfigError({"cannot read config file '" + path + "'"});
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse(ss.str());
    }

    [[nodiscard]] const std::string& kind() const { return values_.at("experiment"); }
    [[nodiscard]] const ExperimentSpec& spec() const { return *find_experiment(kind()); }

    [[nodiscard]] double real(const std::string& key) const {
        double v = 0.0;
        detail::parse_real(raw(key), v);
        return v;
    }
    [[nodiscard]] long long integer(const std::string& key) const {
        long long v = 0;
        detail::parse_integer(raw(key), v);
        return v;
    }
    [[nodiscard]] std::string text(const std::string& key) const { return raw(key); }
    [[nodiscard]] std::vector<double> reals(const std::string& key) const {
        std::vector<double> out;
        for (auto item : detail::split_list(raw(key))) {
            double v = 0.0;
            detail::parse_real(item, v);
            out.push_back(v);
        }
        return out;
    }
    [[nodiscard]] std::vector<long long> integers(const std::string& key) const {
        std::vector<long long> out;
        for (auto item : detail::split_list(raw(key))) {
            long long v = 0;
            detail::parse_integer(item, v);
            out.push_back(v);
        }
        return out;
    }
    [[nodiscard]] std::uint64_t seed() const { return static_cast<std::uint64_t>(integer("seed")); }

    /// Sorted key=value lines with defaults filled in; identical inputs give
    /// identical text regardless of order, spacing or comments.
    [[nodiscard]] std::string canonical() const {
        std::string out;
        for (const auto& [k, v] : values_) {
            out += k + "=";
            std::string item;
            for (auto part : detail::split_list(v)) item += (item.empty() ? "" : ",") + std::string(part);
            out += item + "\n";
        }
        return out;
    }

    /// FNV-1a of the canonical form, as 16 hex digits.
    [[nodiscard]] std::string hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : canonical()) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        static constexpr char digits[] = "0123456789abcdef";
        std::string out(16, '0');
        for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        return out;
    }

    [[nodiscard]] const std::map<std::string, std::string>& values() const noexcept { return values_; }

private:
    [[nodiscard]] const std::string& raw(const std::string& key) const {
        const auto it = values_.find(key);
        if (it == values_.end()) throw std::out_of_range("config key '" + key + "' is not set");
        return it->second;
    }

    void validate(std::vector<std::string>& diag) {
        const auto kind_it = values_.find("experiment");
        if (kind_it == values_.end()) {
            diag.push_back("missing key 'experiment'");
            return;
        }
        const ExperimentSpec* spec = find_experiment(kind_it->second);
        if (!spec) {
            diag.push_back("unknown experiment '" + kind_it->second + "' (see list-experiments)");
            return;
        }
        for (const auto& [key, value] : values_) {
            const auto it = std::find_if(spec->keys.begin(), spec->keys.end(), [&](const KeySpec& k) { return k.name == key; });
            if (it == spec->keys.end()) diag.push_back("unknown key '" + key + "' for experiment " + spec->kind);
        }
        for (const auto& k : spec->keys) {
            auto it = values_.find(k.name);
            if (it == values_.end()) {
                if (k.required) {
                    diag.push_back("missing required key '" + k.name + "'");
                    continue;
                }
                it = values_.emplace(k.name, k.fallback).first;
            }
            check_value(k, it->second, diag);
        }
        if (!diag.empty()) return;
        if (integer("format") != kConfigFormat)
            diag.push_back("unsupported format " + values_.at("format") + " (expected " + std::to_string(kConfigFormat) + ")");
        if (real("sigma") <= 0.0) diag.push_back("sigma must be positive");
    }

    static void check_value(const KeySpec& k, const std::string& value, std::vector<std::string>& diag) {
        const std::string where = "key '" + k.name + "': ";
        switch (k.kind) {
            case ValueKind::Text:
                if (value.empty()) diag.push_back(where + "empty value");
                break;
            case ValueKind::Real: {
                double v;
                if (!detail::parse_real(value, v)) diag.push_back(where + "'" + value + "' is not a number");
                break;
            }
            case ValueKind::Integer: {
                long long v;
                if (!detail::parse_integer(value, v)) diag.push_back(where + "'" + value + "' is not an integer");
                break;
            }
            case ValueKind::RealList:
            case ValueKind::IntegerList: {
                const auto items = detail::split_list(value);
                if (items.empty()) {
                    diag.push_back(where + "empty parameter grid");
                    break;
                }
                for (auto item : items) {
                    double d;
                    long long i;
                    const bool ok = k.kind == ValueKind::RealList ? detail::parse_real(item, d) : detail::parse_integer(item, i);
                    if (!ok) diag.push_back(where + "list entry '" + std::string(item) + "' is malformed");
                }
                break;
            }
        }
    }

    std::map<std::string, std::string> values_;
};

}  // namespace fracint::cli
