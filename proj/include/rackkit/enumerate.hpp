#pragma once

#include <atomic>
#include <optional>
#include <vector>

#include "rackkit/rack.hpp"

namespace rackkit {

inline constexpr int kCanonicalOrderCap = 8;
inline constexpr int kOracleOrderCap = 3;

// Largest order the census search accepts for the given kind.
int census_order_cap(StructureKind kind);

// Lexicographically minimal flattened table over all n! relabelings. Two
// racks are isomorphic iff their canonical forms are equal. Throws
// CapExceeded above order kCanonicalOrderCap.
FiniteRack canonical_form(const FiniteRack& rack);

bool is_canonical_form(const FiniteRack& rack);

bool are_isomorphic(const FiniteRack& a, const FiniteRack& b);

// Number of relabelings fixing the table.
long long automorphism_count(const FiniteRack& rack);

struct SearchConfig {
  int order = 1;
  StructureKind kind = StructureKind::Rack;
  bool up_to_iso = true;
  int worker_count = 1;
  bool emit_tables = true;
  // Cooperative cancellation; a set flag aborts the search with
  // SearchInterrupted.
  const std::atomic<bool>* cancel = nullptr;
  // Isomorph-rejection strategy override, for cross-checking the two
  // strategies against each other. Default: dedup set up to order 5,
  // orderly generation from order 6.
  std::optional<bool> orderly_override;
};

struct CensusRecord {
  int order = 0;
  StructureKind kind = StructureKind::Rack;
  long long labeled_count = 0;
  long long iso_count = 0;  // 0 when up_to_iso is off
  std::vector<FiniteRack> representatives;  // sorted canonical forms

  bool operator==(const CensusRecord&) const = default;
};

// Exhaustive enumeration of all structures of the given order and kind.
// Backtracks over rows as permutations, forcing row (x |> y) to be the
// conjugate of row y by row x; partitions the search on the choices for
// rows 0 and 1 across workers. Output is deterministic and independent of
// worker_count.
CensusRecord run_census(const SearchConfig& config);

// Scans every one of the n^(n*n) tables, validating and classifying each
// directly from the definitions. Independent of the run_census search path;
// refuses orders above kOracleOrderCap.
CensusRecord brute_force_census(int order, StructureKind kind);

}  // namespace rackkit
