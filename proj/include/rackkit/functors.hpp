#pragma once

#include <optional>
#include <string_view>

#include "rackkit/rack.hpp"

namespace rackkit {

// Table-to-table constructions between permutations, racks, and quandles,
// plus the identities that tie them together.

// The rack x |> y = f(y) on the carrier of f.
FiniteRack perm_to_rack(const Permutation& f);

// Underlying permutation of a rack: its canonical automorphism. Retraction
// partner of perm_to_rack.
Permutation rack_to_perm(const FiniteRack& rack);

// The quandle x ((|)) y = F^{-1}(x |> y) on the same carrier; equals
// x |> F^{-1}(y), and equals the input when it is already a quandle.
FiniteRack quandleify(const FiniteRack& rack);

// Replace |> by the m-th power of each left translation. Always a valid
// rack; preserves the quandle property. m = 1 is the identity, m = 0 the
// trivial quandle, negative m uses inverse translations.
FiniteRack power_op(const FiniteRack& rack, long long m);

// x |> y = y on {0,...,n-1}.
FiniteRack trivial_quandle(int n);

// power_op(power_op(rack, n), m) == power_op(rack, m*n), entry for entry.
bool compose_check(long long m, long long n, const FiniteRack& rack);

// The three commuting-square identities relating power ops to the other
// constructions, each reported separately.
struct SquareCheckReport {
  bool power_of_canonical_automorphism;  // F of power_op(R,m) == F(R)^m
  bool power_of_perm_rack;               // perm_to_rack(f^m) == power_op(perm_to_rack(f), m)
  bool power_of_quandleify;              // quandleify . power_op == power_op . quandleify

  bool all() const {
    return power_of_canonical_automorphism && power_of_perm_rack && power_of_quandleify;
  }
};

SquareCheckReport square_checks(const FiniteRack& rack, const Permutation& f, long long m);

// Which construction a batch transformation applies.
struct FunctorTag {
  enum class Op { PermToRack, RackToPerm, Quandleify, Inclusion, TrivialQuandle, Power };
  Op op = Op::Power;
  long long exponent = 1;  // used by Power only
};

std::optional<FunctorTag::Op> functor_op_from_name(std::string_view name);

}  // namespace rackkit
