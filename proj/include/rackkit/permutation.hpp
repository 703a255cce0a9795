#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rackkit {

bool is_bijection(const std::vector<int>& images);

// A bijection on {0,...,n-1}, stored as its image sequence: entry i is the
// image of i.
class Permutation {
 public:
  Permutation() = default;  // the empty permutation (n = 0)

  static Permutation identity(int n);
  // Throws std::invalid_argument unless `images` is a bijection on [0, n).
  static Permutation from_images(std::vector<int> images);
  // Skips validation (asserted in debug builds).
  static Permutation unchecked(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  bool is_involution() const;

  Permutation inverse() const;
  // Composition power; negative exponents go through the inverse. Exponents
  // with |m| > 4 are folded by repeated squaring.
  Permutation pow(long long m) const;
  // Least k >= 1 with p^k = id (lcm of the cycle lengths). 1 for n = 0.
  long long order() const;

  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

// (outer . inner)(x) = outer(inner(x)); sizes must match.
Permutation compose(const Permutation& outer, const Permutation& inner);

// All permutations of [0, n) in lexicographic order of their image sequences.
std::vector<Permutation> all_permutations(int n);

}  // namespace rackkit
