#include "rackkit/checks.hpp"

#include <stdexcept>
#include <string>

#include "rackkit/functors.hpp"
#include "rackkit/permutation.hpp"

namespace rackkit {

namespace {

std::string pair_detail(int x, int y) {
  return "at x=" + std::to_string(x) + " y=" + std::to_string(y);
}

}  // namespace

std::optional<IdentityFailure> run_identity_suite(const FiniteRack& rack) {
  const int n = rack.order();

  // x |> x reaches every element exactly once.
  Permutation f = Permutation::identity(n);
  try {
    f = canonical_automorphism(rack);
  } catch (const std::invalid_argument&) {
    return IdentityFailure{"canonical-automorphism-bijective", "x |-> x|>x is not a bijection"};
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (rack.at(rack.at(x, x), y) != rack.at(x, y)) {
        return IdentityFailure{"absorption", pair_detail(x, y)};
      }
      if (rack.at(f(x), y) != rack.at(x, y)) {
        return IdentityFailure{"translation-shift", pair_detail(x, y)};
      }
      if (f(rack.at(x, y)) != rack.at(x, f(y))) {
        return IdentityFailure{"automorphism-action", pair_detail(x, y)};
      }
      if (f(rack.at(x, y)) != rack.at(f(x), f(y))) {
        return IdentityFailure{"automorphism-endomorphism", pair_detail(x, y)};
      }
    }
  }

  // Quandle-ification lands on a quandle, agrees with its second form, is
  // the identity on quandles, and is idempotent.
  const FiniteRack q = quandleify(rack);
  if (find_table_issue(q.order(), q.table()).has_value() || !is_quandle(q)) {
    return IdentityFailure{"quandleify-output", "result is not a quandle"};
  }
  const Permutation f_inv = f.inverse();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (q.at(x, y) != rack.at(x, f_inv(y))) {
        return IdentityFailure{"quandleify-two-forms", pair_detail(x, y)};
      }
    }
  }
  if (is_quandle(rack) && q != rack) {
    return IdentityFailure{"quandleify-fixes-quandles", "table changed"};
  }
  if (quandleify(q) != q) {
    return IdentityFailure{"quandleify-idempotent", "second pass changed the table"};
  }

  // Power operations: identity at 1, trivial at 0, composition, validity,
  // and the three squares they sit in.
  if (power_op(rack, 1) != rack) {
    return IdentityFailure{"power-one", "exponent 1 changed the table"};
  }
  if (power_op(rack, 0) != trivial_quandle(n)) {
    return IdentityFailure{"power-zero", "exponent 0 is not the trivial quandle"};
  }
  for (int m = -3; m <= 3; ++m) {
    const FiniteRack rm = power_op(rack, m);
    if (find_table_issue(rm.order(), rm.table()).has_value()) {
      return IdentityFailure{"power-valid", "exponent " + std::to_string(m)};
    }
    if (is_quandle(rack) && !is_quandle(rm)) {
      return IdentityFailure{"power-preserves-quandles", "exponent " + std::to_string(m)};
    }
    const SquareCheckReport squares = square_checks(rack, f, m);
    if (!squares.power_of_canonical_automorphism) {
      return IdentityFailure{"power-vs-canonical-automorphism", "exponent " + std::to_string(m)};
    }
    if (!squares.power_of_perm_rack) {
      return IdentityFailure{"power-vs-permutation-model", "exponent " + std::to_string(m)};
    }
    if (!squares.power_of_quandleify) {
      return IdentityFailure{"power-vs-quandleify", "exponent " + std::to_string(m)};
    }
    for (int k = -3; k <= 3; ++k) {
      if (!compose_check(m, k, rack)) {
        return IdentityFailure{"power-composition",
                               "exponents " + std::to_string(m) + "," + std::to_string(k)};
      }
    }
  }

  // Involutarity has three equivalent readings.
  const bool involutary = is_involutary(rack);
  if (involutary != is_power_trivial(rack, 2)) {
    return IdentityFailure{"involutary-power-trivial", "the two tests disagree"};
  }
  if (involutary != (power_op(rack, 2) == trivial_quandle(n))) {
    return IdentityFailure{"involutary-square-trivial", "the two tests disagree"};
  }

  // Round trip through the permutation model.
  if (rack_to_perm(perm_to_rack(f)) != f) {
    return IdentityFailure{"permutation-round-trip", "x |-> x|>x not recovered"};
  }

  return std::nullopt;
}

}  // namespace rackkit
