#pragma once

#include <stdexcept>
#include <string>

namespace rackkit {

// Order or hom-set size above the configured limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A free-model value left the configured window.
class WindowExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Census search stopped by a cancellation flag before completing.
class SearchInterrupted : public std::runtime_error {
 public:
  SearchInterrupted(const std::string& message, long long tables_visited)
      : std::runtime_error(message), tables_visited_(tables_visited) {}
  long long tables_visited() const { return tables_visited_; }

 private:
  long long tables_visited_;
};

// Text input rejected at a specific position (1-based line and column).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace rackkit
