#include "rackkit/free.hpp"

#include <algorithm>
#include <stdexcept>

#include "rackkit/errors.hpp"
#include "rackkit/functors.hpp"

namespace rackkit {

RackWord RackWord::generator() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Generator, nullptr, nullptr});
  return RackWord(node);
}

RackWord RackWord::apply(RackWord left, RackWord right) {
  return RackWord(std::make_shared<const Node>(
      Node{Kind::Apply, std::move(left.node_), std::move(right.node_)}));
}

RackWord RackWord::apply_inverse(RackWord left, RackWord right) {
  return RackWord(std::make_shared<const Node>(
      Node{Kind::ApplyInverse, std::move(left.node_), std::move(right.node_)}));
}

RackWord RackWord::left() const {
  if (kind() == Kind::Generator) throw std::logic_error("generator has no subterms");
  return RackWord(node_->left);
}

RackWord RackWord::right() const {
  if (kind() == Kind::Generator) throw std::logic_error("generator has no subterms");
  return RackWord(node_->right);
}

int RackWord::depth() const {
  if (kind() == Kind::Generator) return 0;
  return 1 + std::max(left().depth(), right().depth());
}

std::string RackWord::to_string() const {
  switch (kind()) {
    case Kind::Generator:
      return "x";
    case Kind::Apply:
      return "(" + left().to_string() + " > " + right().to_string() + ")";
    case Kind::ApplyInverse:
      return "(" + left().to_string() + " <| " + right().to_string() + ")";
  }
  return "";
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  RackWord parse() {
    RackWord word = parse_term();
    skip_spaces();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return word;
  }

 private:
  RackWord parse_term() {
    skip_spaces();
    if (pos_ >= text_.size()) fail("unexpected end of input, expected 'x' or '('");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return RackWord::generator();
    }
    if (c == '(') {
      ++pos_;
      RackWord left = parse_term();
      skip_spaces();
      bool inverse = false;
      if (pos_ < text_.size() && text_[pos_] == '>') {
        ++pos_;
      } else if (pos_ + 1 < text_.size() && text_[pos_] == '<' && text_[pos_ + 1] == '|') {
        pos_ += 2;
        inverse = true;
      } else {
        fail("expected '>' or '<|'");
      }
      RackWord right = parse_term();
      skip_spaces();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inverse ? RackWord::apply_inverse(std::move(left), std::move(right))
                     : RackWord::apply(std::move(left), std::move(right));
    }
    fail("expected 'x' or '('");
  }

  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    int line = 1;
    int column = 1;
    for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, message);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

long long checked_value(long long value, long long window) {
  if (value > window || value < -window) {
    throw WindowExceeded("free rack value " + std::to_string(value) +
                         " left the window [-" + std::to_string(window) + "," +
                         std::to_string(window) + "]");
  }
  return value;
}

}  // namespace

RackWord parse_word(std::string_view text) { return WordParser(text).parse(); }

long long free_rack_eval(const RackWord& word, long long window) {
  if (window < 0) throw std::invalid_argument("window must be non-negative");
  switch (word.kind()) {
    case RackWord::Kind::Generator:
      return checked_value(0, window);
    case RackWord::Kind::Apply:
      free_rack_eval(word.left(), window);
      return checked_value(free_rack_eval(word.right(), window) + 1, window);
    case RackWord::Kind::ApplyInverse:
      free_rack_eval(word.left(), window);
      return checked_value(free_rack_eval(word.right(), window) - 1, window);
  }
  throw std::logic_error("unreachable");
}

FreePermPoint free_perm_point(int generator, int generator_count, long long shift,
                              long long window) {
  if (generator < 0 || generator >= generator_count) {
    throw std::invalid_argument("generator index out of range");
  }
  checked_value(shift, window);
  return FreePermPoint{generator, shift};
}

FreePermPoint step(const FreePermPoint& point, long long window) {
  return FreePermPoint{point.generator, checked_value(point.shift + 1, window)};
}

FreePermPoint step_back(const FreePermPoint& point, long long window) {
  return FreePermPoint{point.generator, checked_value(point.shift - 1, window)};
}

int free_rack_morphism(const FiniteRack& rack, int s, long long n) {
  if (s < 0 || s >= rack.order()) throw std::invalid_argument("element out of range");
  return canonical_automorphism(rack).pow(n)(s);
}

FiniteRack free_quandle_one_generator() { return trivial_quandle(1); }

}  // namespace rackkit
