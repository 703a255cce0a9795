#pragma once

#include <optional>
#include <string>

#include "rackkit/rack.hpp"

namespace rackkit {

struct IdentityFailure {
  std::string identity;  // short name of the failed law
  std::string detail;    // witness, e.g. the offending elements
};

// Runs every structural identity on one rack: absorption, the two
// canonical-automorphism laws, bijectivity and surjectivity of x |-> x|>x,
// idempotence and correctness of quandle-ification, the power-operation
// laws for small exponents, and the round trip through the permutation
// model. Returns the first failure, or nullopt. A valid table passes all
// of them; a failure indicates a broken construction, not bad input.
std::optional<IdentityFailure> run_identity_suite(const FiniteRack& rack);

}  // namespace rackkit
