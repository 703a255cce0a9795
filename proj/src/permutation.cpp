#include "rackkit/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace rackkit {

bool is_bijection(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation size must be non-negative");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  if (!is_bijection(images)) {
    throw std::invalid_argument("image sequence is not a bijection");
  }
  return Permutation(std::move(images));
}

Permutation Permutation::unchecked(std::vector<int> images) {
  assert(is_bijection(images));
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[images_[i]] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("composed permutations must have equal size");
  }
  std::vector<int> images(inner.size());
  for (int i = 0; i < inner.size(); ++i) images[i] = outer(inner(i));
  return Permutation::unchecked(std::move(images));
}

Permutation Permutation::pow(long long m) const {
  Permutation base = m < 0 ? inverse() : *this;
  unsigned long long e =
      m < 0 ? -static_cast<unsigned long long>(m) : static_cast<unsigned long long>(m);
  Permutation result = identity(size());
  if (e <= 4) {
    for (unsigned long long i = 0; i < e; ++i) result = compose(base, result);
    return result;
  }
  while (e > 0) {
    if (e & 1) result = compose(base, result);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

long long Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  long long result = 1;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  out += ']';
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 0) throw std::invalid_argument("permutation size must be non-negative");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::unchecked(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace rackkit
