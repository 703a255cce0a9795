#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rackkit/permutation.hpp"
#include "rackkit/rack.hpp"

namespace rackkit {

// One block of a rack file. A rack block carries the n*n table entries in
// row-major order; a perm block carries the n images of a self-map.
// Entries are as parsed: validation is a separate step.
struct RackFileBlock {
  enum class Type { Rack, Perm };

  Type type = Type::Rack;
  int n = 0;
  std::vector<int> entries;

  bool operator==(const RackFileBlock&) const = default;
};

struct RackFile {
  std::vector<RackFileBlock> blocks;

  bool operator==(const RackFile&) const = default;
};

// Grammar: `#` starts a comment line (ignored anywhere); a block is a
// header line `rack <n>` followed by n lines of n space-separated integers,
// or `perm <n>` followed by one line of n integers; at least one blank line
// separates consecutive blocks; the file must end in a newline. Throws
// ParseError with 1-based line and column.
RackFile parse_rack_file(std::string_view text);

// Canonical rendering: single spaces, one blank line between blocks,
// trailing newline. parse_rack_file(print_rack_file(f)) == f.
std::string print_rack_file(const RackFile& file);

RackFileBlock to_block(const FiniteRack& rack);
RackFileBlock to_block(const Permutation& f);

}  // namespace rackkit
