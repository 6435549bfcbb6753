#pragma once

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "json.hpp"

#include "fracint/cli/config.hpp"
#include "fracint/cli/experiments.hpp"
#include "fracint/core/parallel.hpp"

namespace fracint::cli {

enum ExitCode : int { kExitOk = 0, kExitAssertion = 1, kExitInvalidConfig = 2 };

struct RunOptions {
    std::string out_dir = "fracint_out";
    unsigned threads = 1;
    bool strict = false;  // warnings count as failures
};

namespace detail {

inline std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Table rows as JSON objects; numeric-looking cells become numbers.
inline nlohmann::json table_json(const CsvTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows()) {
        nlohmann::json row = nlohmann::json::object();
        for (std::size_t i = 0; i < r.size(); ++i) {
            double v;
            long long n;
            if (parse_integer(r[i], n))
                row[t.header()[i]] = n;
            else if (parse_real(r[i], v))
                row[t.header()[i]] = v;
            else
                row[t.header()[i]] = r[i];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace detail

/// Result-record JSON: schema version, inputs hash, estimates and flags.
[[nodiscard]] inline nlohmann::json summary_json(const ExperimentConfig& cfg, const ExperimentOutput& res, bool strict) {
    nlohmann::json j;
    j["schema_version"] = kSummarySchema;
    j["experiment"] = cfg.kind();
    j["config_hash"] = cfg.hash();
    j["inputs"] = cfg.values();
    nlohmann::json tables = nlohmann::json::object();
    for (const auto& nt : res.tables) tables[nt.stem] = detail::table_json(nt.table);
    j["tables"] = std::move(tables);
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : res.cases) cases.push_back({{"case", c.id}, {"pass", c.pass}, {"detail", c.detail}});
    j["verdicts"] = std::move(cases);
    j["warnings"] = res.warnings;
    j["extra"] = res.extra;
    j["all_passed"] = res.all_passed() && !(strict && !res.warnings.empty());
    return j;
}

/// Executes one config file and writes <kind>.csv (plus any extra tables),
/// summary.json and manifest.json into the output directory.
[[nodiscard]] inline int run(const std::string& config_path, const RunOptions& opt, std::ostream& log, std::ostream& err) {
    ExperimentConfig cfg;
    try {
        cfg = ExperimentConfig::load(config_path);
    } catch (const ConfigError& e) {
        err << "invalid config " << config_path << ":\n";
        for (const auto& d : e.diagnostics()) err << "  " << d << '\n';
        return kExitInvalidConfig;
    }
    default_threads() = opt.threads == 0 ? 1 : opt.threads;
    const auto started = detail::utc_now();
    ExperimentOutput res;
    try {
        res = experiment_function(cfg.kind())(cfg);
    } catch (const ConfigError& e) {
        err << "invalid config " << config_path << ":\n";
        for (const auto& d : e.diagnostics()) err << "  " << d << '\n';
        return kExitInvalidConfig;
    }
    const auto finished = detail::utc_now();

    namespace fs = std::filesystem;
    const fs::path out(opt.out_dir);
    fs::create_directories(out);
    for (const auto& nt : res.tables) {
        nt.table.save((out / (nt.stem + ".csv")).string());
        log << "wrote " << (out / (nt.stem + ".csv")).string() << '\n';
    }
    const auto summary = summary_json(cfg, res, opt.strict);
    detail::write_json(out / "summary.json", summary);

    nlohmann::json manifest;
    manifest["config_path"] = config_path;
    manifest["config_hash"] = cfg.hash();
    manifest["code_version"] = std::string(kCodeVersion);
    manifest["started_utc"] = started;
    manifest["finished_utc"] = finished;
    manifest["threads"] = default_threads();
    manifest["verdicts"] = summary["verdicts"];
    detail::write_json(out / "manifest.json", manifest);

    for (const auto& w : res.warnings) err << "warning: " << w << '\n';
    const bool warn_fail = opt.strict && !res.warnings.empty();
    if (res.all_passed() && !warn_fail) {
        log << cfg.kind() << ": all " << res.cases.size() << " assertions passed\n";
        return kExitOk;
    }
    err << "FAILED ASSERTIONS (" << cfg.kind() << ")\n";
    err << std::left << std::setw(40) << "case" << " detail\n";
    for (const auto& c : res.cases)
        if (!c.pass) err << std::left << std::setw(40) << c.id << ' ' << c.detail << '\n';
    if (warn_fail) err << std::left << std::setw(40) << "strict mode" << ' ' << res.warnings.size() << " warning(s) treated as failures\n";
    return kExitAssertion;
}

}  // namespace fracint::cli
