#include "decisum/io.hpp"

#include "decisum/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace decisum::io {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view token, double& out) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    if (token.empty()) {
        return false;
    }
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

} // namespace

PairList parse_pairs_csv(std::istream& in) {
    PairList pairs;
    std::string line;
    std::size_t line_no = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = trim(line);
        if (row.empty()) {
            continue;
        }
        const auto comma = row.find(',');
        const std::string_view first = comma == std::string_view::npos ? row : row.substr(0, comma);
        double a = 0.0;
        double b = 0.0;
        const bool numeric_lead = parse_double(first, a);
        if (first_content && !numeric_lead) {
            first_content = false;
            continue; // header
        }
        first_content = false;
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected exactly two comma-separated values");
        }
        if (!numeric_lead || !parse_double(row.substr(comma + 1), b)) {
            throw ParseError("line " + std::to_string(line_no) + ": not a number");
        }
        pairs.emplace_back(a, b);
    }
    if (pairs.empty()) {
        throw ParseError("input contains no number pairs");
    }
    return pairs;
}

PairList parse_pairs_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array()) {
        throw ParseError(R"(JSON input must be an object with a "pairs" array)");
    }
    PairList pairs;
    for (const auto& item : doc["pairs"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
            throw ParseError("every JSON pair must be a two-element numeric array");
        }
        pairs.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    if (pairs.empty()) {
        throw ParseError("input contains no number pairs");
    }
    return pairs;
}

PairList read_pairs(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) {
            throw ParseError("cannot open " + path);
        }
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    const bool json_ext = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    const std::string_view body = trim(text);
    if (json_ext || (!body.empty() && body.front() == '{')) {
        return parse_pairs_json(text);
    }
    std::istringstream in(text);
    return parse_pairs_csv(in);
}

std::string format_exact(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_short(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    return buf;
}

std::string bit_string(const Selection& bits) {
    std::string out(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0) {
            out[i] = '1';
        }
    }
    return out;
}

} // namespace decisum::io
