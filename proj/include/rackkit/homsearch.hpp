#pragma once

#include <compare>
#include <vector>

#include "rackkit/permutation.hpp"
#include "rackkit/rack.hpp"

namespace rackkit {

inline constexpr int kHomOrderCap = 5;
inline constexpr int kCenterOrderCap = 4;

// A map of underlying sets that commutes with the two tables.
struct RackMorphism {
  FiniteRack source;
  FiniteRack target;
  std::vector<int> map;

  bool commutes() const;
  auto operator<=>(const RackMorphism&) const = default;
};

// Every morphism source -> target, sorted by image sequence. Backtracking
// over images with forced-image propagation: fixing map[x] and map[y]
// forces map[x |> y]. Throws CapExceeded when either order exceeds the cap.
std::vector<RackMorphism> homs(const FiniteRack& source, const FiniteRack& target,
                               int order_cap = kHomOrderCap);

// map o F_source == F_target o map; holds for every morphism.
bool check_F_naturality(const RackMorphism& phi);

// Closure of the left translations and their inverses under composition:
// the inner automorphism group, sorted. Every member preserves the table.
std::vector<Permutation> inner_group(const FiniteRack& rack);

// One self-map per object, aligned with the object list it was built from.
struct NaturalFamily {
  std::vector<std::vector<int>> components;
  auto operator<=>(const NaturalFamily&) const = default;
};

NaturalFamily identity_family(const std::vector<FiniteRack>& objects);

// Componentwise composition: outer after inner.
NaturalFamily compose_families(const NaturalFamily& outer, const NaturalFamily& inner);

// All families of endomorphisms commuting with every morphism of the full
// subcategory on `objects`: the natural transformations of the identity
// functor. Backtracking over components with domain filtering against the
// already-fixed ones. Sorted. Throws CapExceeded when any object exceeds
// the cap.
std::vector<NaturalFamily> natural_center(const std::vector<FiniteRack>& objects,
                                          int order_cap = kCenterOrderCap);

// table[i][j] is the index k with families[i] o families[j] == families[k].
// Throws std::invalid_argument when the list is not closed under
// composition.
std::vector<std::vector<int>> family_composition_table(const std::vector<NaturalFamily>& families);

// The family whose component at each object is x |-> x |> x. Always a
// member of the natural center of any object list.
NaturalFamily canonical_automorphism_family(const std::vector<FiniteRack>& objects);

// Multiplicative order of that family: the lcm of the per-object orders.
long long canonical_automorphism_family_order(const std::vector<FiniteRack>& objects);

}  // namespace rackkit
