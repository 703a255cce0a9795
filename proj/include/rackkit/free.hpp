#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "rackkit/rack.hpp"

namespace rackkit {

inline constexpr long long kDefaultWindow = 64;

// A formal word over a single generator with |> and its inverse. Surface
// syntax, fully parenthesized: `x`, `(A > B)` for A |> B, `(A <| B)` for the
// inverse operation. Words are immutable and share subterms on copy.
class RackWord {
 public:
  enum class Kind { Generator, Apply, ApplyInverse };

  static RackWord generator();
  static RackWord apply(RackWord left, RackWord right);          // (left > right)
  static RackWord apply_inverse(RackWord left, RackWord right);  // (left <| right)

  Kind kind() const { return node_->kind; }
  RackWord left() const;   // requires kind() != Generator
  RackWord right() const;  // requires kind() != Generator
  int depth() const;

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit RackWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Throws ParseError with 1-based line/column on malformed input.
RackWord parse_word(std::string_view text);

// Value of the word in the integer model of the rank-1 free rack, where the
// generator is 0 and a |> b evaluates to b + 1 (b - 1 for the inverse). The
// left subterm is evaluated for window accounting but does not affect the
// result. Every subterm value must stay within [-window, window]; leaving it
// throws WindowExceeded.
long long free_rack_eval(const RackWord& word, long long window = kDefaultWindow);

// A point of the free permutation on generators {0,...,k-1}, modeled as
// generator index plus an integer shift, truncated to |shift| <= window.
struct FreePermPoint {
  int generator = 0;
  long long shift = 0;

  auto operator<=>(const FreePermPoint&) const = default;
};

// Validates generator index and window; throws on violation.
FreePermPoint free_perm_point(int generator, int generator_count, long long shift,
                              long long window = kDefaultWindow);

// The structure bijection: shift + 1. Throws WindowExceeded when the result
// leaves the window.
FreePermPoint step(const FreePermPoint& point, long long window = kDefaultWindow);
FreePermPoint step_back(const FreePermPoint& point, long long window = kDefaultWindow);

// The unique morphism out of the truncated rank-1 free rack determined by
// generator |-> s: returns F^n(s) for F the canonical automorphism.
int free_rack_morphism(const FiniteRack& rack, int s, long long n);

// The free quandle on one generator: the one-element quandle.
FiniteRack free_quandle_one_generator();

}  // namespace rackkit
