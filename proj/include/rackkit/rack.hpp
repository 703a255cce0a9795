#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rackkit/permutation.hpp"

namespace rackkit {

// Why an operation table was rejected. Out-of-range entries are malformed
// input; the other kinds are genuine axiom violations. Coordinates name the
// lexicographically first failing instance.
struct TableIssue {
  enum class Kind {
    EntryOutOfRange,
    RowNotBijective,
    NotSelfDistributive,
  };
  Kind kind;
  int x = -1;
  int y = -1;
  int z = -1;

  bool is_input_error() const { return kind == Kind::EntryOutOfRange; }
  std::string to_string() const;
};

// An order-n operation table on the universe {0,...,n-1}; entry (x,y) is
// x |> y. Rows are the left translations. Valid tables have bijective rows
// and satisfy x |> (y |> z) = (x |> y) |> (x |> z). Immutable once built.
class FiniteRack {
 public:
  FiniteRack() = default;  // the empty rack (n = 0), vacuously valid

  // Throws std::invalid_argument when the table is not a valid rack.
  static FiniteRack from_table(int n, std::vector<int> entries);
  // Skips axiom validation (asserted in debug builds).
  static FiniteRack unchecked(int n, std::vector<int> entries);

  int order() const { return n_; }
  int at(int x, int y) const { return table_[x * n_ + y]; }
  std::span<const int> row(int x) const { return {table_.data() + x * n_, static_cast<size_t>(n_)}; }
  const std::vector<int>& table() const { return table_; }

  auto operator<=>(const FiniteRack&) const = default;

 private:
  FiniteRack(int n, std::vector<int> entries) : n_(n), table_(std::move(entries)) {}
  int n_ = 0;
  std::vector<int> table_;
};

// First failing instance, if any: entries in range, then every row bijective
// (ascending x), then self-distributivity over triples (x,y,z) in
// lexicographic order. `entries` must have n*n values.
std::optional<TableIssue> find_table_issue(int n, std::span<const int> entries);

struct RackValidation {
  std::optional<FiniteRack> rack;
  std::optional<TableIssue> issue;
  bool ok() const { return rack.has_value(); }
};

RackValidation validate_rack(int n, std::vector<int> entries);

// Row x as a permutation: y -> x |> y.
Permutation left_translation(const FiniteRack& rack, int x);

// x -> x |> x. Bijective and an endomorphism on every valid rack; the
// endomorphism property is re-checked in debug builds.
Permutation canonical_automorphism(const FiniteRack& rack);

bool is_quandle(const FiniteRack& rack);     // x |> x = x everywhere
bool is_involutary(const FiniteRack& rack);  // every row an involution
bool is_kei(const FiniteRack& rack);         // involutary quandle

// True iff the m-th power of every left translation is the identity.
// Negative m goes through the inverse translations; m = 0 always holds.
bool is_power_trivial(const FiniteRack& rack, long long m);

// Transport along a bijection: table'(p(x), p(y)) = p(table(x, y)).
// Throws std::invalid_argument on size mismatch.
FiniteRack apply_relabeling(const FiniteRack& rack, const Permutation& p);

enum class StructureKind { Rack, Quandle, Involutary, Kei };

bool satisfies_kind(const FiniteRack& rack, StructureKind kind);
std::string_view kind_name(StructureKind kind);
std::optional<StructureKind> kind_from_name(std::string_view name);

}  // namespace rackkit
