#include "rackkit/rack.hpp"

#include <cassert>
#include <stdexcept>

namespace rackkit {

std::string TableIssue::to_string() const {
  switch (kind) {
    case Kind::EntryOutOfRange:
      return "entry out of range at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    case Kind::RowNotBijective:
      return "row " + std::to_string(x) + " is not a bijection";
    case Kind::NotSelfDistributive:
      return "self-distributivity fails at (x,y,z)=(" + std::to_string(x) + "," +
             std::to_string(y) + "," + std::to_string(z) + ")";
  }
  return "unknown issue";
}

std::optional<TableIssue> find_table_issue(int n, std::span<const int> entries) {
  if (static_cast<size_t>(n) * n != entries.size()) {
    throw std::invalid_argument("table must have n*n entries");
  }
  const auto at = [&](int x, int y) { return entries[x * n + y]; };

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int v = at(x, y);
      if (v < 0 || v >= n) {
        return TableIssue{TableIssue::Kind::EntryOutOfRange, x, y, -1};
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    std::vector<char> seen(n, 0);
    bool bijective = true;
    for (int y = 0; y < n; ++y) {
      if (seen[at(x, y)]) {
        bijective = false;
        break;
      }
      seen[at(x, y)] = 1;
    }
    if (!bijective) {
      return TableIssue{TableIssue::Kind::RowNotBijective, x, -1, -1};
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (at(x, at(y, z)) != at(at(x, y), at(x, z))) {
          return TableIssue{TableIssue::Kind::NotSelfDistributive, x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

FiniteRack FiniteRack::from_table(int n, std::vector<int> entries) {
  if (auto issue = find_table_issue(n, entries)) {
    throw std::invalid_argument(issue->to_string());
  }
  return FiniteRack(n, std::move(entries));
}

FiniteRack FiniteRack::unchecked(int n, std::vector<int> entries) {
  assert(static_cast<size_t>(n) * n == entries.size());
  assert(!find_table_issue(n, entries));
  return FiniteRack(n, std::move(entries));
}

RackValidation validate_rack(int n, std::vector<int> entries) {
  if (auto issue = find_table_issue(n, entries)) {
    return RackValidation{std::nullopt, issue};
  }
  return RackValidation{FiniteRack::unchecked(n, std::move(entries)), std::nullopt};
}

Permutation left_translation(const FiniteRack& rack, int x) {
  if (x < 0 || x >= rack.order()) {
    throw std::invalid_argument("element out of range");
  }
  return Permutation::from_images({rack.row(x).begin(), rack.row(x).end()});
}

Permutation canonical_automorphism(const FiniteRack& rack) {
  const int n = rack.order();
  std::vector<int> images(n);
  for (int x = 0; x < n; ++x) images[x] = rack.at(x, x);
  auto f = Permutation::from_images(std::move(images));
#ifndef NDEBUG
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      assert(f(rack.at(x, y)) == rack.at(f(x), f(y)));
    }
  }
#endif
  return f;
}

bool is_quandle(const FiniteRack& rack) {
  for (int x = 0; x < rack.order(); ++x) {
    if (rack.at(x, x) != x) return false;
  }
  return true;
}

bool is_involutary(const FiniteRack& rack) {
  const int n = rack.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (rack.at(x, rack.at(x, y)) != y) return false;
    }
  }
  return true;
}

bool is_kei(const FiniteRack& rack) { return is_quandle(rack) && is_involutary(rack); }

bool is_power_trivial(const FiniteRack& rack, long long m) {
  for (int x = 0; x < rack.order(); ++x) {
    if (!left_translation(rack, x).pow(m).is_identity()) return false;
  }
  return true;
}

FiniteRack apply_relabeling(const FiniteRack& rack, const Permutation& p) {
  const int n = rack.order();
  if (p.size() != n) {
    throw std::invalid_argument("relabeling size does not match rack order");
  }
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      entries[p(x) * n + p(y)] = p(rack.at(x, y));
    }
  }
  return FiniteRack::unchecked(n, std::move(entries));
}

bool satisfies_kind(const FiniteRack& rack, StructureKind kind) {
  switch (kind) {
    case StructureKind::Rack:
      return true;
    case StructureKind::Quandle:
      return is_quandle(rack);
    case StructureKind::Involutary:
      return is_involutary(rack);
    case StructureKind::Kei:
      return is_kei(rack);
  }
  return false;
}

std::string_view kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::Rack:
      return "rack";
    case StructureKind::Quandle:
      return "quandle";
    case StructureKind::Involutary:
      return "involutary";
    case StructureKind::Kei:
      return "kei";
  }
  return "unknown";
}

std::optional<StructureKind> kind_from_name(std::string_view name) {
  if (name == "rack") return StructureKind::Rack;
  if (name == "quandle") return StructureKind::Quandle;
  if (name == "involutary") return StructureKind::Involutary;
  if (name == "kei") return StructureKind::Kei;
  return std::nullopt;
}

}  // namespace rackkit
