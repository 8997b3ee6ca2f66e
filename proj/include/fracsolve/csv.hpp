#pragma once

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fracsolve/error.hpp"
#include "fracsolve/problem.hpp"

namespace fracsolve::csv {

/// Locale-independent decimal rendering with 17 significant digits, enough
/// to round-trip any double exactly.
inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) raise(Errc::bad_config, "not a number: '" + s + "'");
    return v;
}

/// Trajectory as `t,x1,...,xM`, one row per grid point, LF line endings.
inline void write_solution(std::ostream& os, const Solution& sol) {
    os << 't';
    for (std::size_t c = 0; c < sol.x.cols(); ++c) os << ",x" << (c + 1);
    os << '\n';
    for (std::size_t r = 0; r < sol.x.rows(); ++r) {
        os << format_double(sol.t[r]);
        for (std::size_t c = 0; c < sol.x.cols(); ++c)
            os << ',' << format_double(sol.x(r, c));
        os << '\n';
    }
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline Table parse(std::istream& is) {
    Table t;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            t.header = split_fields(line);
            first = false;
        } else {
            t.rows.push_back(split_fields(line));
        }
    }
    return t;
}

inline void emit(std::ostream& os, const Table& t) {
    auto write_row = [&os](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    };
    write_row(t.header);
    for (const auto& row : t.rows) write_row(row);
}

/// Two-column observation series (date-index, count); the header row is
/// required and skipped.
inline std::vector<std::pair<double, double>> read_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::file_not_found, "cannot open '" + path + "'");
    const Table t = parse(in);
    if (t.header.size() < 2)
        raise(Errc::bad_config, "expected a two-column CSV with a header row");
    std::vector<std::pair<double, double>> series;
    series.reserve(t.rows.size());
    for (const auto& row : t.rows) {
        if (row.size() < 2) raise(Errc::bad_config, "short row in '" + path + "'");
        series.emplace_back(parse_double(row[0]), parse_double(row[1]));
    }
    return series;
}

}  // namespace fracsolve::csv
