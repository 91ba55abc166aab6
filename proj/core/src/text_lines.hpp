#pragma once

// Line/token helpers shared by the text formats.

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcover/errors.hpp"

namespace dcover::detail {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

/// Splits text into whitespace-separated tokens per line, dropping blank
/// lines and `c` comment lines.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty() && line.tokens[0] != "c") out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline long long to_integer(std::string_view token, std::size_t line) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

/// 1-based external vertex to 0-based internal, range-checked.
inline int to_vertex(std::string_view token, int vertex_count, std::size_t line) {
  const long long v = to_integer(token, line);
  if (v < 1 || v > vertex_count) {
    throw ParseError("vertex " + std::string(token) + " out of range 1.." + std::to_string(vertex_count), line);
  }
  return static_cast<int>(v - 1);
}

std::string read_file(const std::string& path);

}  // namespace dcover::detail
