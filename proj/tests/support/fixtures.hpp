#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rackkit/functors.hpp"
#include "rackkit/rack.hpp"

namespace fixtures {

// Both rows swap: the smallest rack that is not a quandle.
inline rackkit::FiniteRack flip_rack() {
  return rackkit::FiniteRack::from_table(2, {1, 0, 1, 0});
}

// x |> y = 2x - y mod n.
inline rackkit::FiniteRack dihedral(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t[static_cast<std::size_t>(x) * n + y] = ((2 * x - y) % n + n) % n;
    }
  }
  return rackkit::FiniteRack::from_table(n, std::move(t));
}

// i -> i + 1 mod n.
inline rackkit::Permutation rotation(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return rackkit::Permutation::from_images(std::move(im));
}

inline rackkit::Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::shuffle(im.begin(), im.end(), rng);
  return rackkit::Permutation::unchecked(std::move(im));
}

// A valid rack with no fixed shape: a permutation rack, occasionally
// power-twisted, under a random relabeling.
inline rackkit::FiniteRack random_rack(int n, std::mt19937& rng) {
  rackkit::FiniteRack rack = rackkit::perm_to_rack(random_permutation(n, rng));
  if (rng() % 2 == 0) {
    rack = rackkit::power_op(rack, static_cast<long long>(rng() % 5) - 2);
  }
  return rackkit::apply_relabeling(rack, random_permutation(n, rng));
}

}  // namespace fixtures
