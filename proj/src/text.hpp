#pragma once

// Line-oriented tokenizer shared by the text-format readers.

#include <charconv>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "selset/error.hpp"

namespace selset::detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in, char comment = '#') : in_(in), comment_(comment) {}

  // Next line with at least one token, skipping comment lines.
  bool next(Line& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      line.number = number_;
      line.tokens.clear();
      std::size_t pos = 0;
      while (pos < raw.size()) {
        while (pos < raw.size() && is_space(raw[pos])) ++pos;
        std::size_t end = pos;
        while (end < raw.size() && !is_space(raw[end])) ++end;
        if (end > pos) line.tokens.emplace_back(raw, pos, end - pos);
        pos = end;
      }
      if (line.tokens.empty() || line.tokens.front().front() == comment_) continue;
      return true;
    }
    return false;
  }

  std::size_t line_number() const noexcept { return number_; }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

  std::istream& in_;
  char comment_;
  std::size_t number_ = 0;
};

template <class Int>
Int parse_number(std::string_view token, std::size_t line) {
  Int value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw FormatError(FormatErrc::kMalformedLine, line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

inline void expect_tokens(const Line& line, std::size_t count, std::string_view what) {
  if (line.tokens.size() != count) {
    throw FormatError(FormatErrc::kMalformedLine, line.number,
                      "expected " + std::string(what));
  }
}

}  // namespace selset::detail
