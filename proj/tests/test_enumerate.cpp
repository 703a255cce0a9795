#include <atomic>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rackkit/enumerate.hpp"
#include "rackkit/errors.hpp"
#include "rackkit/functors.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using rackkit::CensusRecord;
using rackkit::FiniteRack;
using rackkit::SearchConfig;
using rackkit::StructureKind;

namespace {

constexpr StructureKind kAllKinds[] = {StructureKind::Rack, StructureKind::Quandle,
                                       StructureKind::Involutary, StructureKind::Kei};

CensusRecord census(int order, StructureKind kind, int workers = 1) {
  SearchConfig config;
  config.order = order;
  config.kind = kind;
  config.worker_count = workers;
  return rackkit::run_census(config);
}

}  // namespace

TEST_CASE("canonical form is the least relabeling and an isomorphism invariant") {
  const FiniteRack flip = fixtures::flip_rack();
  CHECK(rackkit::canonical_form(rackkit::trivial_quandle(3)) == rackkit::trivial_quandle(3));
  CHECK(rackkit::canonical_form(flip) == flip);

  std::mt19937 rng(31);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const FiniteRack rack = fixtures::random_rack(n, rng);
      const FiniteRack canon = rackkit::canonical_form(rack);
      CHECK(canon.table() <= rack.table());
      CHECK(rackkit::is_canonical_form(canon));
      CHECK(rackkit::canonical_form(canon) == canon);
      const FiniteRack moved =
          rackkit::apply_relabeling(rack, fixtures::random_permutation(n, rng));
      CHECK(rackkit::canonical_form(moved) == canon);
      CHECK(rackkit::are_isomorphic(rack, moved));
    }
  }
}

TEST_CASE("canonical form agrees with the all-relabelings oracle") {
  for (int n = 1; n <= 3; ++n) {
    oracle::for_each_table(n, [n](const std::vector<int>& t) {
      if (!oracle::valid_table(n, t)) return;
      const FiniteRack canon = rackkit::canonical_form(FiniteRack::unchecked(n, t));
      CHECK(canon.table() == oracle::min_relabeling(n, t));
    });
  }
  std::mt19937 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteRack rack = fixtures::random_rack(4, rng);
    CHECK(rackkit::canonical_form(rack).table() == oracle::min_relabeling(4, rack.table()));
  }
}

TEST_CASE("non-isomorphic racks are told apart") {
  CHECK_FALSE(rackkit::are_isomorphic(fixtures::flip_rack(), rackkit::trivial_quandle(2)));
  CHECK_FALSE(rackkit::are_isomorphic(fixtures::flip_rack(), rackkit::trivial_quandle(3)));
  CHECK(rackkit::are_isomorphic(fixtures::dihedral(3), fixtures::dihedral(3)));
}

TEST_CASE("canonical form order cap") {
  CHECK_THROWS_AS(rackkit::canonical_form(rackkit::trivial_quandle(9)), rackkit::CapExceeded);
  CHECK_NOTHROW(rackkit::canonical_form(rackkit::trivial_quandle(8)));
}

TEST_CASE("automorphism counts") {
  CHECK(rackkit::automorphism_count(rackkit::trivial_quandle(3)) == 6);
  CHECK(rackkit::automorphism_count(fixtures::flip_rack()) == 2);
  CHECK(rackkit::automorphism_count(fixtures::dihedral(3)) == 6);
  CHECK(rackkit::automorphism_count(FiniteRack()) == 1);
}

TEST_CASE("census matches the brute-force table scan at orders 1-3 for every kind") {
  for (int n = 1; n <= 3; ++n) {
    for (StructureKind kind : kAllKinds) {
      const CensusRecord scan = rackkit::brute_force_census(n, kind);
      const CensusRecord searched = census(n, kind);
      CHECK(searched == scan);
    }
  }
}

TEST_CASE("frozen census values") {
  // iso counts cross-checked by hand at small orders and against the
  // brute-force scan; labeled counts from the same runs
  CHECK(census(2, StructureKind::Rack).labeled_count == 2);
  CHECK(census(2, StructureKind::Rack).iso_count == 2);
  CHECK(census(2, StructureKind::Quandle).iso_count == 1);
  CHECK(census(2, StructureKind::Involutary).iso_count == 2);
  CHECK(census(3, StructureKind::Rack).iso_count == 6);
  CHECK(census(3, StructureKind::Quandle).iso_count == 3);
  CHECK(census(3, StructureKind::Involutary).iso_count == 5);
  CHECK(census(3, StructureKind::Kei).iso_count == 3);
  CHECK(census(4, StructureKind::Rack).iso_count == 19);
  CHECK(census(4, StructureKind::Quandle).iso_count == 7);
  CHECK(census(5, StructureKind::Rack).iso_count == 74);
  CHECK(census(5, StructureKind::Quandle).iso_count == 22);
}

TEST_CASE("representatives are valid, canonical, of the right kind, and sorted") {
  for (int n = 1; n <= 4; ++n) {
    for (StructureKind kind : kAllKinds) {
      const CensusRecord record = census(n, kind);
      REQUIRE(record.iso_count == static_cast<long long>(record.representatives.size()));
      for (std::size_t i = 0; i < record.representatives.size(); ++i) {
        const FiniteRack& rep = record.representatives[i];
        CHECK_FALSE(rackkit::find_table_issue(n, rep.table()).has_value());
        CHECK(rackkit::satisfies_kind(rep, kind));
        CHECK(rackkit::is_canonical_form(rep));
        if (i > 0) CHECK(record.representatives[i - 1] < rep);
      }
    }
  }
}

TEST_CASE("kind lattice: kei sits under quandle and involutary") {
  for (int n = 1; n <= 4; ++n) {
    const auto racks = census(n, StructureKind::Rack);
    const auto quandles = census(n, StructureKind::Quandle);
    const auto involutary = census(n, StructureKind::Involutary);
    const auto kei = census(n, StructureKind::Kei);

    const std::set<FiniteRack> rack_set(racks.representatives.begin(),
                                        racks.representatives.end());
    const std::set<FiniteRack> quandle_set(quandles.representatives.begin(),
                                           quandles.representatives.end());
    const std::set<FiniteRack> involutary_set(involutary.representatives.begin(),
                                              involutary.representatives.end());

    CHECK(quandles.iso_count <= racks.iso_count);
    CHECK(kei.iso_count <= quandles.iso_count);
    CHECK(kei.iso_count <= involutary.iso_count);
    for (const FiniteRack& k : kei.representatives) {
      CHECK(quandle_set.count(k) == 1);
      CHECK(involutary_set.count(k) == 1);
    }
    for (const FiniteRack& q : quandles.representatives) CHECK(rack_set.count(q) == 1);
  }
}

TEST_CASE("labeled counts equal direct counting without isomorph rejection") {
  for (int n = 1; n <= 4; ++n) {
    for (StructureKind kind : kAllKinds) {
      SearchConfig config;
      config.order = n;
      config.kind = kind;
      config.up_to_iso = false;
      const CensusRecord direct = rackkit::run_census(config);
      CHECK(direct.iso_count == 0);
      CHECK(direct.representatives.empty());
      CHECK(direct.labeled_count == census(n, kind).labeled_count);
    }
  }
}

TEST_CASE("dedup and orderly strategies agree wherever both run") {
  for (int n = 3; n <= 5; ++n) {
    for (StructureKind kind : {StructureKind::Rack, StructureKind::Quandle}) {
      SearchConfig dedup;
      dedup.order = n;
      dedup.kind = kind;
      dedup.orderly_override = false;
      SearchConfig orderly = dedup;
      orderly.orderly_override = true;
      CHECK(rackkit::run_census(dedup) == rackkit::run_census(orderly));
    }
  }
}

TEST_CASE("census output is identical across worker counts") {
  for (StructureKind kind : {StructureKind::Rack, StructureKind::Kei}) {
    const CensusRecord one = census(4, kind, 1);
    CHECK(census(4, kind, 2) == one);
    CHECK(census(4, kind, 8) == one);
    CHECK(census(4, kind, 64) == one);
  }
}

TEST_CASE("census is closed under the power operations") {
  for (int n = 1; n <= 4; ++n) {
    const CensusRecord racks = census(n, StructureKind::Rack);
    const std::set<FiniteRack> reps(racks.representatives.begin(),
                                    racks.representatives.end());
    for (const FiniteRack& rep : racks.representatives) {
      for (long long m = -2; m <= 3; ++m) {
        CHECK(reps.count(rackkit::canonical_form(rackkit::power_op(rep, m))) == 1);
      }
    }
  }
}

TEST_CASE("power-trivial structures coincide for opposite exponents") {
  for (int n = 1; n <= 4; ++n) {
    for (const FiniteRack& rep : census(n, StructureKind::Rack).representatives) {
      for (long long m = 1; m <= 3; ++m) {
        CHECK(rackkit::is_power_trivial(rep, m) == rackkit::is_power_trivial(rep, -m));
        CHECK((rackkit::power_op(rep, m) == rackkit::trivial_quandle(n)) ==
              (rackkit::power_op(rep, -m) == rackkit::trivial_quandle(n)));
      }
    }
  }
}

TEST_CASE("caps and argument validation") {
  CHECK(rackkit::census_order_cap(StructureKind::Rack) == 6);
  CHECK(rackkit::census_order_cap(StructureKind::Involutary) == 6);
  CHECK(rackkit::census_order_cap(StructureKind::Quandle) == 7);
  CHECK(rackkit::census_order_cap(StructureKind::Kei) == 7);

  SearchConfig config;
  config.order = 7;
  CHECK_THROWS_AS(rackkit::run_census(config), rackkit::CapExceeded);
  config.order = 8;
  config.kind = StructureKind::Quandle;
  CHECK_THROWS_AS(rackkit::run_census(config), rackkit::CapExceeded);
  config.order = 0;
  CHECK_THROWS_AS(rackkit::run_census(config), std::invalid_argument);
  config.order = 2;
  config.worker_count = 0;
  CHECK_THROWS_AS(rackkit::run_census(config), std::invalid_argument);

  CHECK_THROWS_AS(rackkit::brute_force_census(4, StructureKind::Rack), rackkit::CapExceeded);
  CHECK_THROWS_AS(rackkit::brute_force_census(0, StructureKind::Rack), std::invalid_argument);
}

TEST_CASE("a raised cancel flag interrupts the search") {
  std::atomic<bool> cancel{true};
  SearchConfig config;
  config.order = 4;
  config.cancel = &cancel;
  CHECK_THROWS_AS(rackkit::run_census(config), rackkit::SearchInterrupted);
  try {
    rackkit::run_census(config);
  } catch (const rackkit::SearchInterrupted& e) {
    CHECK(e.tables_visited() >= 0);
    CHECK(std::string(e.what()).find("interrupted") != std::string::npos);
  }
}

TEST_CASE("emit_tables off suppresses representatives but not counts") {
  SearchConfig config;
  config.order = 3;
  config.emit_tables = false;
  const CensusRecord record = rackkit::run_census(config);
  CHECK(record.iso_count == 6);
  CHECK(record.labeled_count == 13);
  CHECK(record.representatives.empty());
}
