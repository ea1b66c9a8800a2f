#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../errors.hpp"

namespace qsbt::verify {

struct RunConfig {
    double nu = 1.0;
    std::size_t trunc = 32;
    std::size_t gh_nodes = 128;
    std::size_t radial_nodes = 96;
    std::size_t angular_count = 256;
    std::uint64_t seed = 20240531;
    std::map<std::string, double> tolerance_overrides;
    bool timing = true;
};

inline void validate(const RunConfig& c) {
    if (!(c.nu > 0.0) || !std::isfinite(c.nu)) {
        throw config_error("nu must be a finite value > 0");
    }
    if (c.trunc < 1 || c.trunc > 512) {
        throw config_error("trunc must lie in [1, 512]");
    }
    if (c.gh_nodes < 2 || c.gh_nodes > 1024) {
        throw config_error("gh-nodes must lie in [2, 1024]");
    }
    if (c.radial_nodes < 2 || c.radial_nodes > 1024) {
        throw config_error("radial-nodes must lie in [2, 1024]");
    }
    if (c.angular_count < 3 || c.angular_count > 8192) {
        throw config_error("angular must lie in [3, 8192]");
    }
    for (const auto& [name, tol] : c.tolerance_overrides) {
        if (!(tol >= 0.0) || !std::isfinite(tol)) {
            throw config_error("tolerance for '" + name + "' must be a finite value >= 0");
        }
    }
}

enum class Status { pass, fail };

inline const char* to_string(Status s) { return s == Status::pass ? "pass" : "fail"; }

struct SuiteEntry {
    std::string name;
    std::string anchor;
    double residual = 0.0;
    double tolerance = 0.0;
    Status status = Status::fail;
    double runtime_ms = 0.0;
    std::string detail;
};

/// pass iff residual <= tolerance; NaN never passes.
inline Status judge(double residual, double tolerance) {
    return residual <= tolerance ? Status::pass : Status::fail;
}

struct VerificationReport {
    RunConfig config;
    std::vector<SuiteEntry> entries;

    std::size_t passed() const {
        std::size_t n = 0;
        for (const auto& e : entries) {
            n += e.status == Status::pass;
        }
        return n;
    }
    std::size_t failed() const { return entries.size() - passed(); }
    bool all_passed() const { return failed() == 0; }
};

namespace detail {

inline std::string sci(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

inline std::string exact(double v) {
    if (!std::isfinite(v)) {
        return sci(v);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string ms(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

inline nlohmann::ordered_json json_number(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return nullptr;
}

}  // namespace detail

inline nlohmann::ordered_json config_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["nu"] = c.nu;
    j["trunc"] = c.trunc;
    j["gh_nodes"] = c.gh_nodes;
    j["radial_nodes"] = c.radial_nodes;
    j["angular_count"] = c.angular_count;
    j["seed"] = c.seed;
    j["tolerance_overrides"] = nlohmann::ordered_json::object();
    for (const auto& [name, tol] : c.tolerance_overrides) {
        j["tolerance_overrides"][name] = tol;
    }
    return j;
}

/// {config, entries: [{name, anchor, residual, tolerance, status, runtime_ms, detail}], summary: {passed, failed}}.
/// Non-finite residuals are written as null.
inline std::string to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["config"] = config_json(r.config);
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        nlohmann::ordered_json je;
        je["name"] = e.name;
        je["anchor"] = e.anchor;
        je["residual"] = detail::json_number(e.residual);
        je["tolerance"] = e.tolerance;
        je["status"] = to_string(e.status);
        je["runtime_ms"] = e.runtime_ms;
        je["detail"] = e.detail;
        j["entries"].push_back(std::move(je));
    }
    j["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}};
    return j.dump(2) + "\n";
}

inline std::string to_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "name,anchor,residual,tolerance,status,runtime_ms,detail\n";
    for (const auto& e : r.entries) {
        out << detail::csv_field(e.name) << ',' << detail::csv_field(e.anchor) << ',' << detail::exact(e.residual)
            << ',' << detail::exact(e.tolerance) << ',' << to_string(e.status) << ',' << detail::ms(e.runtime_ms)
            << ',' << detail::csv_field(e.detail) << '\n';
    }
    return out.str();
}

inline std::string to_table(const VerificationReport& r) {
    std::size_t name_w = 4;
    for (const auto& e : r.entries) {
        name_w = std::max(name_w, e.name.size());
    }
    std::ostringstream out;
    const RunConfig& c = r.config;
    out << "nu=" << detail::exact(c.nu) << " trunc=" << c.trunc << " gh_nodes=" << c.gh_nodes
        << " radial_nodes=" << c.radial_nodes << " angular_count=" << c.angular_count << " seed=" << c.seed << "\n\n";
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
    out << pad("suite", name_w) << "  status  " << pad("residual", 10) << "  " << pad("tolerance", 10) << "  "
        << pad("ms", 8) << "  identity\n";
    out << std::string(name_w + 48, '-') << '\n';
    for (const auto& e : r.entries) {
        out << pad(e.name, name_w) << "  " << pad(to_string(e.status), 6) << "  " << pad(detail::sci(e.residual), 10)
            << "  " << pad(detail::sci(e.tolerance), 10) << "  " << pad(detail::ms(e.runtime_ms), 8) << "  " << e.anchor
            << '\n';
        if (!e.detail.empty()) {
            out << pad("", name_w) << "  -> " << e.detail << '\n';
        }
    }
    out << '\n' << r.passed() << " passed, " << r.failed() << " failed\n";
    return out.str();
}

}  // namespace qsbt::verify
