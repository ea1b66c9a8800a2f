#pragma once

// Coefficient files: a header line "n,w,x,y,z" followed by one row per index in
// strictly increasing n. Indices that are skipped hold zero. An optional
// "# nu=<value>" line before the header records the weight the coefficients
// belong to; other lines starting with '#' and blank lines are ignored.

#include <charconv>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "errors.hpp"
#include "quaternion.hpp"

namespace qsbt {

struct CoefficientFile {
    std::optional<double> nu;
    std::vector<Quaternion> coeffs;
};

inline constexpr std::size_t max_coefficient_index = 1u << 20;

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline double parse_real(std::string_view field, std::size_t line, const char* what) {
    field = trim(field);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw parse_error(line, std::string("bad ") + what + " '" + std::string(field) + "'");
    }
    return v;
}

inline std::size_t parse_index(std::string_view field, std::size_t line) {
    field = trim(field);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw parse_error(line, "bad index '" + std::string(field) + "'");
    }
    if (v > max_coefficient_index) {
        throw parse_error(line, "index " + std::to_string(v) + " exceeds " + std::to_string(max_coefficient_index));
    }
    return v;
}

inline std::vector<std::string_view> split_fields(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace detail

inline CoefficientFile read_coefficients(std::istream& in) {
    CoefficientFile out;
    std::string raw;
    std::size_t line = 0;
    bool header_seen = false;
    std::optional<std::size_t> last_index;
    while (std::getline(in, raw)) {
        ++line;
        const std::string_view s = detail::trim(raw);
        if (s.empty()) {
            continue;
        }
        if (s.front() == '#') {
            const std::string_view body = detail::trim(s.substr(1));
            if (body.rfind("nu=", 0) == 0) {
                if (header_seen) {
                    throw parse_error(line, "'# nu=' must precede the header");
                }
                const double nu = detail::parse_real(body.substr(3), line, "nu");
                if (!(nu > 0.0)) {
                    throw parse_error(line, "nu must be > 0");
                }
                out.nu = nu;
            }
            continue;
        }
        if (!header_seen) {
            const auto fields = detail::split_fields(s);
            const char* expected[] = {"n", "w", "x", "y", "z"};
            bool ok = fields.size() == 5;
            for (std::size_t k = 0; ok && k < 5; ++k) {
                ok = detail::trim(fields[k]) == expected[k];
            }
            if (!ok) {
                throw parse_error(line, "expected header 'n,w,x,y,z'");
            }
            header_seen = true;
            continue;
        }
        const auto fields = detail::split_fields(s);
        if (fields.size() != 5) {
            throw parse_error(line, "expected 5 fields, found " + std::to_string(fields.size()));
        }
        const std::size_t n = detail::parse_index(fields[0], line);
        if (last_index && n <= *last_index) {
            throw parse_error(line, "index " + std::to_string(n) + " is not above the previous row");
        }
        last_index = n;
        Quaternion q{detail::parse_real(fields[1], line, "w"), detail::parse_real(fields[2], line, "x"),
                     detail::parse_real(fields[3], line, "y"), detail::parse_real(fields[4], line, "z")};
        if (!is_finite(q)) {
            throw parse_error(line, "non-finite coefficient");
        }
        out.coeffs.resize(n + 1);
        out.coeffs[n] = q;
    }
    if (!header_seen) {
        throw parse_error(line == 0 ? 1 : line, "missing header 'n,w,x,y,z'");
    }
    if (out.coeffs.empty()) {
        out.coeffs.emplace_back();
    }
    return out;
}

inline std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_coefficients(std::ostream& out, const std::vector<Quaternion>& coeffs,
                               std::optional<double> nu = std::nullopt) {
    if (nu) {
        out << "# nu=" << format_real(*nu) << '\n';
    }
    out << "n,w,x,y,z\n";
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const Quaternion& q = coeffs[n];
        out << n << ',' << format_real(q.w) << ',' << format_real(q.x) << ',' << format_real(q.y) << ','
            << format_real(q.z) << '\n';
    }
}

}  // namespace qsbt
