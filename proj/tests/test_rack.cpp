#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rackkit/functors.hpp"
#include "rackkit/rack.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using rackkit::FiniteRack;
using rackkit::Permutation;
using rackkit::StructureKind;
using rackkit::TableIssue;

TEST_CASE("validation accepts the known-good tables") {
  CHECK(rackkit::validate_rack(1, {0}).ok());
  CHECK(rackkit::validate_rack(2, {1, 0, 1, 0}).ok());              // flip
  CHECK(rackkit::validate_rack(3, {0, 2, 1, 2, 1, 0, 1, 0, 2}).ok());  // 2x-y mod 3
  CHECK(rackkit::validate_rack(0, {}).ok());
  for (int n = 1; n <= 5; ++n) {
    CHECK(rackkit::validate_rack(n, fixtures::dihedral(n).table()).ok());
  }
}

TEST_CASE("validation pinpoints the first failure") {
  SUBCASE("entry out of range is an input error") {
    const auto v = rackkit::validate_rack(2, {0, 7, 1, 0});
    REQUIRE_FALSE(v.ok());
    CHECK(v.issue->kind == TableIssue::Kind::EntryOutOfRange);
    CHECK(v.issue->is_input_error());
    CHECK(v.issue->x == 0);
    CHECK(v.issue->y == 1);
  }
  SUBCASE("repeated entry in a row") {
    const auto v = rackkit::validate_rack(2, {0, 0, 0, 1});
    REQUIRE_FALSE(v.ok());
    CHECK(v.issue->kind == TableIssue::Kind::RowNotBijective);
    CHECK_FALSE(v.issue->is_input_error());
    CHECK(v.issue->x == 0);
  }
  SUBCASE("self-distributivity reports the first triple") {
    const auto v = rackkit::validate_rack(2, {0, 1, 1, 0});
    REQUIRE_FALSE(v.ok());
    CHECK(v.issue->kind == TableIssue::Kind::NotSelfDistributive);
    CHECK(v.issue->x == 1);
    CHECK(v.issue->y == 0);
    CHECK(v.issue->z == 0);
  }
  SUBCASE("wrong entry count throws") {
    CHECK_THROWS_AS(rackkit::validate_rack(2, {0, 1, 1}), std::invalid_argument);
  }
  CHECK_THROWS_AS(FiniteRack::from_table(2, {0, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("validation agrees with the definitional oracle on every small table") {
  for (int n = 1; n <= 3; ++n) {
    oracle::for_each_table(n, [n](const std::vector<int>& t) {
      const bool valid = !rackkit::find_table_issue(n, t).has_value();
      CHECK(valid == oracle::valid_table(n, t));
    });
  }
}

TEST_CASE("triple form and conjugation form of the axiom coincide on bijective-row tables") {
  for (int n = 1; n <= 3; ++n) {
    oracle::for_each_table(n, [n](const std::vector<int>& t) {
      if (!oracle::rows_bijective(n, t)) return;
      CHECK(oracle::self_distributive(n, t) == oracle::conjugation_form(n, t));
    });
  }
}

TEST_CASE("left translations are the rows") {
  const FiniteRack flip = fixtures::flip_rack();
  CHECK(rackkit::left_translation(flip, 0).images() == std::vector<int>{1, 0});
  CHECK(rackkit::left_translation(rackkit::trivial_quandle(3), 1).is_identity());
  CHECK(rackkit::left_translation(fixtures::dihedral(3), 0).images() == std::vector<int>{0, 2, 1});
  CHECK_THROWS_AS(rackkit::left_translation(flip, 2), std::invalid_argument);
  CHECK_THROWS_AS(rackkit::left_translation(flip, -1), std::invalid_argument);
}

TEST_CASE("canonical automorphism is the diagonal") {
  CHECK(rackkit::canonical_automorphism(rackkit::trivial_quandle(4)).is_identity());
  CHECK(rackkit::canonical_automorphism(fixtures::flip_rack()).images() == std::vector<int>{1, 0});
  const FiniteRack r3 = rackkit::perm_to_rack(fixtures::rotation(3));
  CHECK(rackkit::canonical_automorphism(r3) == fixtures::rotation(3));
  CHECK(rackkit::canonical_automorphism(FiniteRack()).size() == 0);
}

TEST_CASE("structural laws hold on every valid table of order up to 3") {
  for (int n = 1; n <= 3; ++n) {
    oracle::for_each_table(n, [n](const std::vector<int>& t) {
      if (!oracle::valid_table(n, t)) return;
      const FiniteRack rack = FiniteRack::unchecked(n, t);
      const Permutation f = rackkit::canonical_automorphism(rack);

      std::vector<bool> hit(n, false);
      for (int x = 0; x < n; ++x) hit[f(x)] = true;
      for (int x = 0; x < n; ++x) CHECK(hit[x]);  // surjective

      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          CHECK(rack.at(rack.at(x, x), y) == rack.at(x, y));   // absorption
          CHECK(rack.at(f(x), y) == rack.at(x, y));            // translation shift
          CHECK(f(rack.at(x, y)) == rack.at(x, f(y)));         // action law
          CHECK(f(rack.at(x, y)) == rack.at(f(x), f(y)));      // endomorphism
        }
      }

      CHECK(rackkit::is_quandle(rack) == f.is_identity());
      CHECK(rackkit::is_involutary(rack) == rackkit::is_power_trivial(rack, 2));
      if (rackkit::is_involutary(rack)) CHECK(f.pow(2).is_identity());
    });
  }
}

TEST_CASE("kind predicates on the fixtures") {
  const FiniteRack trivial = rackkit::trivial_quandle(3);
  const FiniteRack flip = fixtures::flip_rack();
  const FiniteRack d3 = fixtures::dihedral(3);

  CHECK(rackkit::is_quandle(trivial));
  CHECK(rackkit::is_involutary(trivial));
  CHECK(rackkit::is_kei(trivial));

  CHECK_FALSE(rackkit::is_quandle(flip));
  CHECK(rackkit::is_involutary(flip));
  CHECK_FALSE(rackkit::is_kei(flip));

  CHECK(rackkit::is_kei(d3));

  const FiniteRack r3 = rackkit::perm_to_rack(fixtures::rotation(3));
  CHECK_FALSE(rackkit::is_quandle(r3));
  CHECK_FALSE(rackkit::is_involutary(r3));

  CHECK(rackkit::satisfies_kind(flip, StructureKind::Rack));
  CHECK(rackkit::satisfies_kind(flip, StructureKind::Involutary));
  CHECK_FALSE(rackkit::satisfies_kind(flip, StructureKind::Quandle));
  CHECK_FALSE(rackkit::satisfies_kind(flip, StructureKind::Kei));
}

TEST_CASE("power triviality walks through inverses for negative exponents") {
  const FiniteRack flip = fixtures::flip_rack();
  CHECK(rackkit::is_power_trivial(flip, 0));
  CHECK_FALSE(rackkit::is_power_trivial(flip, 1));
  CHECK(rackkit::is_power_trivial(flip, 2));
  CHECK(rackkit::is_power_trivial(flip, -2));

  const FiniteRack r3 = rackkit::perm_to_rack(fixtures::rotation(3));
  CHECK_FALSE(rackkit::is_power_trivial(r3, 2));
  CHECK(rackkit::is_power_trivial(r3, 3));
  CHECK(rackkit::is_power_trivial(r3, -3));
  CHECK(rackkit::is_power_trivial(rackkit::trivial_quandle(5), 1));
}

TEST_CASE("relabeling transports the table") {
  const FiniteRack flip = fixtures::flip_rack();
  const Permutation swap = Permutation::from_images({1, 0});
  CHECK(rackkit::apply_relabeling(flip, swap) == flip);  // rigid
  CHECK(rackkit::apply_relabeling(flip, Permutation::identity(2)) == flip);

  const FiniteRack d3 = fixtures::dihedral(3);
  const Permutation p = Permutation::from_images({1, 0, 2});
  const FiniteRack moved = rackkit::apply_relabeling(d3, p);
  CHECK_FALSE(rackkit::find_table_issue(3, moved.table()).has_value());
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      CHECK(moved.at(p(x), p(y)) == p(d3.at(x, y)));
    }
  }
  CHECK_THROWS_AS(rackkit::apply_relabeling(d3, swap), std::invalid_argument);
}

TEST_CASE("kind names round-trip") {
  using rackkit::kind_from_name;
  using rackkit::kind_name;
  for (StructureKind kind : {StructureKind::Rack, StructureKind::Quandle,
                             StructureKind::Involutary, StructureKind::Kei}) {
    CHECK(kind_from_name(kind_name(kind)) == kind);
  }
  CHECK(kind_name(StructureKind::Involutary) == "involutary");
  CHECK_FALSE(kind_from_name("biquandle").has_value());
}

TEST_CASE("issue text names the coordinates") {
  const auto v = rackkit::validate_rack(2, {0, 1, 1, 0});
  CHECK(v.issue->to_string() == "self-distributivity fails at (x,y,z)=(1,0,0)");
}
