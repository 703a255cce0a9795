#include "rackkit/rackfile.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <string>

#include "rackkit/errors.hpp"

namespace rackkit {

namespace {

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_comment(std::string_view line) { return !line.empty() && line.front() == '#'; }

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;  // number of the line most recently taken

  bool at_end() const { return pos >= text.size(); }

  // Consumes the next physical line; the input is known to end in '\n'.
  std::string_view take_line() {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    return line;
  }
};

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_int_token(const Token& token, int line_no) {
  int value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line_no, token.column, "integer out of range: '" + std::string(token.text) + "'");
  }
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, token.column, "expected an integer, got '" + std::string(token.text) + "'");
  }
  return value;
}

// Advances to the next data line, skipping comments. Blank lines and end
// of input are errors here: a block must be complete before either.
std::vector<Token> take_data_line(Cursor& cursor, int expected, const char* what) {
  for (;;) {
    if (cursor.at_end()) {
      throw ParseError(cursor.line_no + 1, 1,
                       std::string("unexpected end of input: expected ") + what);
    }
    const std::string_view line = cursor.take_line();
    if (is_comment(line)) continue;
    if (is_blank(line)) {
      throw ParseError(cursor.line_no, 1, std::string("blank line inside a block: expected ") + what);
    }
    std::vector<Token> tokens = split_tokens(line);
    if (static_cast<int>(tokens.size()) != expected) {
      const int column = tokens.size() > static_cast<std::size_t>(expected)
                             ? tokens[expected].column
                             : static_cast<int>(line.size()) + 1;
      throw ParseError(cursor.line_no, column,
                       std::string("expected ") + std::to_string(expected) + " entries, got " +
                           std::to_string(tokens.size()));
    }
    return tokens;
  }
}

}  // namespace

RackFile parse_rack_file(std::string_view text) {
  if (!text.empty() && text.back() != '\n') {
    int line_no = 1;
    std::size_t last_start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line_no;
        last_start = i + 1;
      }
    }
    throw ParseError(line_no, static_cast<int>(text.size() - last_start) + 1,
                     "missing trailing newline");
  }

  RackFile file;
  Cursor cursor{text};
  bool need_separator = false;
  while (!cursor.at_end()) {
    const std::string_view line = cursor.take_line();
    if (is_comment(line)) continue;
    if (is_blank(line)) {
      need_separator = false;
      continue;
    }
    if (need_separator) {
      throw ParseError(cursor.line_no, 1, "expected a blank line between blocks");
    }

    const std::vector<Token> header = split_tokens(line);
    RackFileBlock block;
    if (header[0].text == "rack") {
      block.type = RackFileBlock::Type::Rack;
    } else if (header[0].text == "perm") {
      block.type = RackFileBlock::Type::Perm;
    } else {
      throw ParseError(cursor.line_no, header[0].column,
                       "expected 'rack <n>' or 'perm <n>', got '" + std::string(header[0].text) + "'");
    }
    if (header.size() != 2) {
      const int column = header.size() > 2 ? header[2].column : static_cast<int>(line.size()) + 1;
      throw ParseError(cursor.line_no, column, "header must be '" + std::string(header[0].text) + " <n>'");
    }
    block.n = parse_int_token(header[1], cursor.line_no);
    if (block.n < 0) {
      throw ParseError(cursor.line_no, header[1].column, "block size must be nonnegative");
    }

    const int data_lines = block.type == RackFileBlock::Type::Rack ? block.n : (block.n > 0 ? 1 : 0);
    block.entries.reserve(static_cast<std::size_t>(block.n) *
                          (block.type == RackFileBlock::Type::Rack ? block.n : 1));
    for (int r = 0; r < data_lines; ++r) {
      const char* what = block.type == RackFileBlock::Type::Rack ? "a table row" : "an image line";
      for (const Token& token : take_data_line(cursor, block.n, what)) {
        block.entries.push_back(parse_int_token(token, cursor.line_no));
      }
    }
    file.blocks.push_back(std::move(block));
    need_separator = true;
  }
  return file;
}

std::string print_rack_file(const RackFile& file) {
  std::string out;
  bool first = true;
  for (const RackFileBlock& block : file.blocks) {
    if (!first) out += '\n';
    first = false;
    const bool is_rack = block.type == RackFileBlock::Type::Rack;
    out += is_rack ? "rack " : "perm ";
    out += std::to_string(block.n);
    out += '\n';
    const int rows = is_rack ? block.n : (block.n > 0 ? 1 : 0);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < block.n; ++c) {
        if (c > 0) out += ' ';
        out += std::to_string(block.entries[static_cast<std::size_t>(r) * block.n + c]);
      }
      out += '\n';
    }
  }
  return out;
}

RackFileBlock to_block(const FiniteRack& rack) {
  RackFileBlock block;
  block.type = RackFileBlock::Type::Rack;
  block.n = rack.order();
  block.entries = rack.table();
  return block;
}

RackFileBlock to_block(const Permutation& f) {
  RackFileBlock block;
  block.type = RackFileBlock::Type::Perm;
  block.n = f.size();
  block.entries = f.images();
  return block;
}

}  // namespace rackkit
