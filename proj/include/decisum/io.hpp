#pragma once

#include "decisum/problem.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace decisum::io {

/// One "a,b" pair per line. A first line whose leading token is not a
/// number is treated as a header; blank lines are skipped.
PairList parse_pairs_csv(std::istream& in);

/// {"pairs": [[a, b], ...]}
PairList parse_pairs_json(std::string_view text);

/// Reads a CSV or JSON pair file ("-" is stdin). JSON is recognised by a
/// .json extension or a leading '{'.
PairList read_pairs(const std::string& path);

/// 17 significant digits; survives a text round trip.
std::string format_exact(double value);

/// 15 significant digits, which hides last-place rounding noise.
std::string format_short(double value);

std::string bit_string(const Selection& bits);

} // namespace decisum::io
