#ifndef CURVEDHH_REPORT_HPP
#define CURVEDHH_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "curvedhh/hochschild.hpp"

namespace curvedhh {

// Version stamped into every report.
inline constexpr const char* kToolVersion = "0.1.0";

// SHA-256 of docs/conventions.md at build time.
std::string conventions_hash();

// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

// One table of Betti numbers: row key (truncation p or weight w) ->
// homological degree -> dimension.
struct BettiReport {
  std::string kind;        // hochschild, e1, e2, donaldson, bar, connes
  std::string field;
  std::string input_hash;
  std::string tool_version = kToolVersion;
  std::string conventions = conventions_hash();
  std::map<int, BettiRow> rows;
};

// "p,degree,dim" lines sorted by (p, degree), nonzero entries only.  The
// output depends on nothing but the rows, so equal tables give equal bytes.
std::string to_csv(const std::map<int, BettiRow>& rows);
// Inverse of to_csv; throws ParseError on malformed lines.
std::map<int, BettiRow> parse_csv(std::string_view text);

// Human-readable table: a header block, then one line per row with columns
// for the homological degrees from the most negative occurring up to 0.
std::string to_text(const BettiReport& r, std::string_view row_label = "p");

}  // namespace curvedhh

#endif  // CURVEDHH_REPORT_HPP
