#include "doctest.h"
#include "rcc/error.hpp"
#include "rcc/sets.hpp"

using namespace rcc;

TEST_CASE("index sets") {
  RegionSet s(5, {0, 3});
  CHECK(s.count() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(7));
  CHECK(format_regions(s) == "{R1,R4}");
  CHECK(format_crossings(CrossingSet(3, {1})) == "{c2}");
  CHECK(format_regions(RegionSet(4)) == "{}");
  CHECK(s.complement() == RegionSet(5, {1, 2, 4}));
  CHECK((s ^ s).empty());
  CHECK(RegionSet::full(64).count() == 64);
  CHECK_THROWS_AS(RegionSet(65), Error);
  CHECK_THROWS_AS((void)(RegionSet(4) ^ RegionSet(5)), Error);
}

TEST_CASE("subset test is directional") {
  const RegionSet small(6, {1});
  const RegionSet big(6, {1, 4});
  CHECK(small.is_subset_of(big));
  CHECK_FALSE(big.is_subset_of(small));
  CHECK(RegionSet(6).is_subset_of(small));
  CHECK_FALSE(small.is_subset_of(RegionSet(6)));
}

TEST_CASE("canonical order: cardinality, then bit string") {
  CHECK(canonical_less(RegionSet(5, {0}), RegionSet(5, {2, 3})));
  // {R1,R2,R5} = 11001 comes after {R3,R4} = 00110 only by size
  CHECK(canonical_less(RegionSet(5, {2, 3}), RegionSet(5, {0, 1, 4})));
  // same size: 00110 < 10100
  CHECK(canonical_less(RegionSet(5, {2, 3}), RegionSet(5, {0, 2})));
  CHECK_FALSE(canonical_less(RegionSet(5, {0, 2}), RegionSet(5, {0, 2})));
}
