#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "rcc/rcc.hpp"

using namespace rcc;
using fixtures::error_of;

namespace {

const RccMap& trefoil() {
  static const RccMap map(parse_pd(fixtures::kTrefoilPd));
  return map;
}

const RccMap& curled_trefoil() {
  static const RccMap map(fixtures::curled_trefoil());
  return map;
}

bool in_kernel(const RccMap& map, const RegionSet& s) {
  const auto& k = map.kernel();
  return std::find(k.begin(), k.end(), s) != k.end();
}

}  // namespace

TEST_CASE("region choice matrices") {
  const auto& m = trefoil().matrix();
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 5);
  for (std::size_t i = 0; i < 3; ++i) CHECK(m.row(i).weight() == 4);

  const RccMap round{KnotDiagram{}};
  CHECK(round.matrix().rows() == 0);
  CHECK(round.matrix().cols() == 2);

  const RccMap curl(parse_pd("X[1,1,2,2]"));
  CHECK(curl.matrix().rows() == 1);
  CHECK(curl.matrix().cols() == 3);
  CHECK(curl.matrix().row(0).weight() == 3);
  CHECK_FALSE(curl.irreducible());
}

TEST_CASE("the curl region meets its crossing twice") {
  const RccMap curl(parse_pd("X[1,1,2,2]"));
  const auto diag = incidence_discrepancies(curl);
  REQUIRE(diag.size() == 1);
  CHECK(diag[0].crossing == 0);
  CHECK(diag[0].multiplicity == 2);
  // matrix and corner-by-corner simulation agree on every set avoiding it
  for (std::uint64_t m = 0; m < 8; ++m) {
    const auto s = RegionSet::from_mask(3, m);
    const bool agrees = curl.phi(s) == simulate_rcc(curl.diagram(), curl.regions(), s);
    CHECK(agrees == !s.contains(diag[0].region));
  }
  CHECK(incidence_discrepancies(trefoil()).empty());
}

TEST_CASE("phi basics") {
  const auto& t = trefoil();
  CHECK(t.phi(t.no_regions()).empty());
  CHECK(t.phi(t.black()).empty());
  CHECK(t.phi(t.white()).empty());
  CHECK(error_of([&] { t.phi(RegionSet(4)); }) == ErrorCode::DimensionMismatch);

  const auto match = fixtures::match_worked_example(t);
  REQUIRE(match.has_value());
  CHECK(t.phi(RegionSet(5, {match->regions[0]})) == CrossingSet(3, {match->c1, match->c2}));
}

TEST_CASE("the worked example reproduces on the trefoil projection") {
  const auto& t = trefoil();
  const auto match = fixtures::match_worked_example(t);
  REQUIRE(match.has_value());
  const auto& R = match->regions;
  const auto sols = solve_for_crossings(t, CrossingSet(3, {match->c1, match->c2}));
  CHECK(sols[0] == RegionSet(5, {R[0]}));
  CHECK(sols[1].count() == 2);
  CHECK(sols[1] == RegionSet(5, {R[2], R[3]}));
  CHECK(sols[2] == RegionSet(5, {R[0], R[1], R[4]}));
  CHECK(sols[3] == RegionSet(5, {R[1], R[2], R[3], R[4]}));
}

TEST_CASE("solve_for_crossings") {
  const auto& t = trefoil();
  const auto zero = solve_for_crossings(t, t.no_crossings());
  std::vector<RegionSet> expect{t.no_regions(), t.black(), t.white(), t.all_regions()};
  std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
  CHECK(std::vector<RegionSet>(zero.begin(), zero.end()) == expect);

  for (std::size_t x = 0; x < 3; ++x) {
    const CrossingSet one(3, {x});
    const auto sols = solve_for_crossings(t, one);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(t.phi(sols[i]) == one);
      if (i > 0) CHECK(canonical_less(sols[i - 1], sols[i]));
      for (std::size_t j = 0; j < 4; ++j) CHECK(in_kernel(t, sols[i] ^ sols[j]));
    }
  }
  CHECK(error_of([&] { solve_for_crossings(t, CrossingSet(2)); }) == ErrorCode::UnknownCrossing);
}

TEST_CASE("BW-complements") {
  const auto& t = trefoil();
  const auto none = bw_complements(t, t.no_regions());
  CHECK(none[0] == t.black());
  CHECK(none[1] == t.white());
  CHECK(none[2] == t.all_regions());
  const auto b = bw_complements(t, t.black());
  CHECK(b[0].empty());
  CHECK(b[1] == t.all_regions());
  CHECK(b[2] == t.white());
  for (std::uint64_t m = 0; m < 32; ++m) {
    const auto s = RegionSet::from_mask(5, m);
    for (const auto& c : bw_class(t, s)) CHECK(t.phi(c) == t.phi(s));
  }
}

TEST_CASE("splice solutions") {
  std::vector<fixtures::Named> diagrams{{"3_1", parse_pd(fixtures::kTrefoilPd)}};
  for (const auto& r : fixtures::rational_diagrams(6))
    if (r.diagram.crossing_count() >= 2) diagrams.push_back(r);
  for (const auto& [name, d] : diagrams) {
    CAPTURE(name);
    const RccMap map(d);
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
      const auto s = splice_solution(map, x);
      CHECK(map.phi(s) == CrossingSet(d.crossing_count(), {x}));
      const auto sols = solve_for_crossings(map, CrossingSet(d.crossing_count(), {x}));
      CHECK(std::find(sols.begin(), sols.end(), s) != sols.end());
      for (const auto& other : sols) CHECK(in_kernel(map, s ^ other));
    }
  }
  const RccMap round{KnotDiagram{}};
  CHECK(error_of([&] { splice_solution(round, 0); }) == ErrorCode::UnknownCrossing);
  CHECK(error_of([&] { splice_solution(curled_trefoil(), 0); }) == ErrorCode::ReducibleDiagram);
}

TEST_CASE("solving without one black and one white region") {
  const auto& t = trefoil();
  int pairs = 0;
  for (auto b : t.black().members())
    for (auto w : t.white().members()) {
      CHECK(avoidance_invertible(t, b, w));
      for (std::size_t x = 0; x < 3; ++x) {
        const auto s = solve_avoiding(t, CrossingSet(3, {x}), b, w);
        CHECK(t.phi(s) == CrossingSet(3, {x}));
        CHECK_FALSE(s.contains(b));
        CHECK_FALSE(s.contains(w));
      }
      CHECK(solve_avoiding(t, t.no_crossings(), b, w).empty());
      ++pairs;
    }
  CHECK(pairs == 6);

  const auto b0 = t.black().members()[0];
  const auto b1 = t.black().members()[1];
  const auto w0 = t.white().members()[0];
  CHECK(error_of([&] { solve_avoiding(t, t.no_crossings(), b0, b1); }) == ErrorCode::NotBlackWhitePair);
  CHECK(error_of([&] { solve_avoiding(t, t.no_crossings(), w0, b0); }) == ErrorCode::NotBlackWhitePair);
  CHECK(error_of([&] { solve_avoiding(t, t.no_crossings(), b0, 9); }) == ErrorCode::UnknownRegion);

  const auto& k = curled_trefoil();
  bool singular = false;
  for (auto b : k.black().members())
    for (auto w : k.white().members()) singular = singular || !avoidance_invertible(k, b, w);
  CHECK(singular);
  CHECK(error_of([&] { solve_avoiding(k, k.no_crossings(), k.black().members()[0], k.white().members()[0]); }) ==
        ErrorCode::ReducibleDiagram);
}

TEST_CASE("apply_rcc") {
  std::mt19937_64 rng(11);
  for (const auto& [name, d] : fixtures::catalog_diagrams()) {
    CAPTURE(name);
    const RccMap map(d);
    CHECK(apply_rcc(map, map.black()) == d);
    CHECK(apply_rcc(map, map.white()) == d);
    const auto s = RegionSet::from_mask(map.region_count(), rng());
    const auto t = RegionSet::from_mask(map.region_count(), rng());
    const auto once = apply_rcc(map, s);
    CHECK(apply_rcc(RccMap(once), s) == d);
    CHECK(apply_rcc(RccMap(once), t) == apply_rcc(map, s ^ t));
    CHECK(once == apply_crossing_changes(d, map.phi(s)));
  }
}

TEST_CASE("kernel and ineffective subsets of one color") {
  for (const auto& [name, d] : fixtures::catalog_diagrams()) {
    if (d.crossing_count() > 6) continue;
    CAPTURE(name);
    const RccMap map(d);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << map.region_count()); ++m) {
      const auto s = RegionSet::from_mask(map.region_count(), m);
      CHECK(map.phi(s).empty() == in_kernel(map, s));
      if (s.is_subset_of(map.black())) CHECK(map.phi(s) == map.phi(map.black() ^ s));
      if (s.is_subset_of(map.white())) CHECK(map.phi(s) == map.phi(map.white() ^ s));
    }
  }
}

TEST_CASE("size limit") {
  const std::vector<int> big{63};
  CHECK(error_of([&] { RccMap m(rational_diagram(big)); }) == ErrorCode::TooManyCrossings);
  const std::vector<int> fits{61};
  CHECK(RccMap(rational_diagram(fits)).region_count() == 63);
}
