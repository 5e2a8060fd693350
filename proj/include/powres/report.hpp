#pragma once

/**
 * @file report.hpp
 * @brief CSV and JSON serialization of CheckRecord lists.
 *
 * CSV header: check_name,m,k,n,R,N,extra,pass,known_exception
 * Inapplicable optional fields are empty in CSV and null in JSON. Booleans are
 * written as true/false. Output depends only on the records.
 */

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "powres/check_record.hpp"

namespace powres {

enum class ReportFormat { csv, json };

inline constexpr const char* csv_header = "check_name,m,k,n,R,N,extra,pass,known_exception";

namespace detail {

inline std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

inline std::optional<std::int64_t> parse_opt(const std::string& s) {
    if (s.empty())
        return std::nullopt;
    return std::stoll(s);
}

inline bool parse_bool(const std::string& s) {
    if (s == "true")
        return true;
    if (s == "false")
        return false;
    throw std::invalid_argument("bad boolean in report: " + s);
}

inline nlohmann::ordered_json opt_json(const std::optional<std::int64_t>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

inline std::optional<std::int64_t> opt_from_json(const nlohmann::json& j) {
    if (j.is_null())
        return std::nullopt;
    return j.get<std::int64_t>();
}

}  // namespace detail

inline std::string to_csv(const std::vector<CheckRecord>& records) {
    std::ostringstream os;
    os << csv_header << '\n';
    for (const auto& r : records) {
        os << to_string(r.name) << ',' << r.m << ',' << detail::opt_str(r.k) << ',' << detail::opt_str(r.n) << ','
           << detail::opt_str(r.R) << ',' << detail::opt_str(r.N) << ',' << detail::csv_field(r.extra) << ','
           << (r.pass ? "true" : "false") << ',' << (r.known_exception ? "true" : "false") << '\n';
    }
    return os.str();
}

inline std::string to_json(const std::vector<CheckRecord>& records) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json o;
        o["check_name"] = std::string(to_string(r.name));
        o["m"] = r.m;
        o["k"] = detail::opt_json(r.k);
        o["n"] = detail::opt_json(r.n);
        o["R"] = detail::opt_json(r.R);
        o["N"] = detail::opt_json(r.N);
        o["extra"] = r.extra;
        o["pass"] = r.pass;
        o["known_exception"] = r.known_exception;
        arr.push_back(std::move(o));
    }
    return arr.dump(1) + "\n";
}

inline std::string render_report(const std::vector<CheckRecord>& records, ReportFormat format) {
    return format == ReportFormat::csv ? to_csv(records) : to_json(records);
}

inline std::vector<CheckRecord> parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != csv_header)
        throw std::invalid_argument("report is missing the CSV header");
    std::vector<CheckRecord> out;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        auto f = detail::split_csv_line(line);
        if (f.size() != 9)
            throw std::invalid_argument("CSV row has " + std::to_string(f.size()) + " fields: " + line);
        CheckRecord r;
        r.name = check_name_from_string(f[0]);
        r.m = std::stoll(f[1]);
        r.k = detail::parse_opt(f[2]);
        r.n = detail::parse_opt(f[3]);
        r.R = detail::parse_opt(f[4]);
        r.N = detail::parse_opt(f[5]);
        r.extra = f[6];
        r.pass = detail::parse_bool(f[7]);
        r.known_exception = detail::parse_bool(f[8]);
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<CheckRecord> parse_json(const std::string& text) {
    std::vector<CheckRecord> out;
    for (const auto& o : nlohmann::json::parse(text)) {
        CheckRecord r;
        r.name = check_name_from_string(o.at("check_name").get<std::string>());
        r.m = o.at("m").get<std::int64_t>();
        r.k = detail::opt_from_json(o.at("k"));
        r.n = detail::opt_from_json(o.at("n"));
        r.R = detail::opt_from_json(o.at("R"));
        r.N = detail::opt_from_json(o.at("N"));
        r.extra = o.at("extra").get<std::string>();
        r.pass = o.at("pass").get<bool>();
        r.known_exception = o.at("known_exception").get<bool>();
        out.push_back(std::move(r));
    }
    return out;
}

/// Writes the rendered report to path; throws std::runtime_error if the file cannot be written.
inline void write_report(const std::vector<CheckRecord>& records, ReportFormat format, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw std::runtime_error("cannot open report for writing: " + path);
    os << render_report(records, format);
    os.flush();
    if (!os)
        throw std::runtime_error("failed writing report: " + path);
}

}  // namespace powres
