#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace nomen {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& reason)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + reason),
        path_(path),
        line_(line) {}

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

// Shortest representation that round-trips the exact double.
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Fixed number of significant digits, %g-style.
inline std::string format_double(double v, int significant_digits) {
  char buf[48];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, significant_digits);
  return std::string(buf, res.ptr);
}

inline bool parse_double(std::string_view field, double& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

inline bool parse_int(std::string_view field, long& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.emplace_back(line, start);
      break;
    }
    fields.emplace_back(line, start, tab - start);
    start = tab + 1;
  }
  return fields;
}

// Line-oriented TSV reader with 1-based line numbers for error reporting.
class TsvReader {
 public:
  explicit TsvReader(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw std::runtime_error("cannot open " + path);
  }

  // Returns false at EOF. Strips a trailing '\r' so CRLF files parse too.
  bool next(std::vector<std::string>& fields) {
    std::string line;
    if (!std::getline(in_, line)) return false;
    ++lineno_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    fields = split_tabs(line);
    return true;
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(path_, lineno_, reason);
  }

  std::size_t line() const { return lineno_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ifstream in_;
  std::size_t lineno_ = 0;
};

class TsvWriter {
 public:
  explicit TsvWriter(const std::string& path) : path_(path), out_(path) {
    if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
  }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << '\t';
      out_ << fields[i];
    }
    out_ << '\n';
  }

  void close() {
    out_.close();
    if (!out_) throw std::runtime_error("write to " + path_ + " failed");
  }

 private:
  std::string path_;
  std::ofstream out_;
};

}  // namespace nomen
