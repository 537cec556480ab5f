#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bubblecross::io {

// RFC 4180: quote fields holding a comma, quote, CR or LF; double embedded quotes.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// One record terminated by CRLF.
inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line.push_back(',');
    line += csv_field(fields[i]);
  }
  line += "\r\n";
  return line;
}

}  // namespace bubblecross::io
