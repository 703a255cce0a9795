#include "rackkit/functors.hpp"

#include <cassert>
#include <stdexcept>

namespace rackkit {

FiniteRack perm_to_rack(const Permutation& f) {
  const int n = f.size();
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) entries[x * n + y] = f(y);
  }
  return FiniteRack::unchecked(n, std::move(entries));
}

Permutation rack_to_perm(const FiniteRack& rack) { return canonical_automorphism(rack); }

FiniteRack quandleify(const FiniteRack& rack) {
  const int n = rack.order();
  const Permutation f_inv = canonical_automorphism(rack).inverse();
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      entries[x * n + y] = f_inv(rack.at(x, y));
      assert(entries[x * n + y] == rack.at(x, f_inv(y)));
    }
  }
  auto result = FiniteRack::unchecked(n, std::move(entries));
  assert(is_quandle(result));
  return result;
}

FiniteRack power_op(const FiniteRack& rack, long long m) {
  const int n = rack.order();
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const Permutation row = left_translation(rack, x).pow(m);
    for (int y = 0; y < n; ++y) entries[x * n + y] = row(y);
  }
  return FiniteRack::unchecked(n, std::move(entries));
}

FiniteRack trivial_quandle(int n) {
  if (n < 0) throw std::invalid_argument("order must be non-negative");
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) entries[x * n + y] = y;
  }
  return FiniteRack::unchecked(n, std::move(entries));
}

bool compose_check(long long m, long long n, const FiniteRack& rack) {
  return power_op(power_op(rack, n), m) == power_op(rack, m * n);
}

SquareCheckReport square_checks(const FiniteRack& rack, const Permutation& f, long long m) {
  SquareCheckReport report{};
  report.power_of_canonical_automorphism =
      canonical_automorphism(power_op(rack, m)) == canonical_automorphism(rack).pow(m);
  report.power_of_perm_rack = perm_to_rack(f.pow(m)) == power_op(perm_to_rack(f), m);
  report.power_of_quandleify = quandleify(power_op(rack, m)) == power_op(quandleify(rack), m);
  return report;
}

std::optional<FunctorTag::Op> functor_op_from_name(std::string_view name) {
  if (name == "psi") return FunctorTag::Op::Power;
  if (name == "quandleify") return FunctorTag::Op::Quandleify;
  if (name == "canon-perm") return FunctorTag::Op::RackToPerm;
  if (name == "perm-rack") return FunctorTag::Op::PermToRack;
  return std::nullopt;
}

}  // namespace rackkit
