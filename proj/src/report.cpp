#include "curvedhh/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "curvedhh/errors.hpp"

#ifndef CURVEDHH_CONVENTIONS_SHA256
#define CURVEDHH_CONVENTIONS_SHA256 "unknown"
#endif

namespace curvedhh {

std::string conventions_hash() { return CURVEDHH_CONVENTIONS_SHA256; }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_csv(const std::map<int, BettiRow>& rows) {
  std::string out = "p,degree,dim\n";
  for (const auto& [p, row] : rows)
    for (const auto& [k, n] : row)
      if (n) out += std::to_string(p) + "," + std::to_string(k) + "," + std::to_string(n) + "\n";
  return out;
}

std::map<int, BettiRow> parse_csv(std::string_view text) {
  std::map<int, BettiRow> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "p,degree,dim") throw ParseError(1, 1, "expected header 'p,degree,dim'");
      continue;
    }
    long v[3];
    std::size_t at = 0;
    for (int i = 0; i < 3; ++i) {
      const std::size_t stop = i < 2 ? line.find(',', at) : line.size();
      if (stop == std::string_view::npos) throw ParseError(line_no, static_cast<int>(at) + 1, "expected three fields");
      auto [ptr, ec] = std::from_chars(line.data() + at, line.data() + stop, v[i]);
      if (ec != std::errc() || ptr != line.data() + stop)
        throw ParseError(line_no, static_cast<int>(at) + 1, "expected an integer");
      at = stop + 1;
    }
    if (v[2] <= 0) throw ParseError(line_no, 1, "dimensions must be positive");
    out[static_cast<int>(v[0])][static_cast<int>(v[1])] = static_cast<std::size_t>(v[2]);
  }
  return out;
}

std::string to_text(const BettiReport& r, std::string_view row_label) {
  std::ostringstream os;
  os << "# " << r.kind << " over " << r.field << "\n";
  os << "# input " << r.input_hash << "  version " << r.tool_version << "  conventions " << r.conventions << "\n";
  int lo = 0, hi = 0;
  for (const auto& [p, row] : r.rows)
    for (const auto& [k, n] : row) {
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
  constexpr int width = 6;
  auto cell = [&](const std::string& s) {
    os << std::string(s.size() < width ? width - s.size() : 1, ' ') << s;
  };
  os << std::string(row_label) << std::string(row_label.size() < 4 ? 4 - row_label.size() : 1, ' ');
  for (int k = lo; k <= hi; ++k) cell(std::to_string(k));
  os << "\n";
  for (const auto& [p, row] : r.rows) {
    const std::string label = std::to_string(p);
    os << label << std::string(label.size() < 4 ? 4 - label.size() : 1, ' ');
    for (int k = lo; k <= hi; ++k) {
      auto it = row.find(k);
      cell(it == row.end() ? "." : std::to_string(it->second));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace curvedhh
