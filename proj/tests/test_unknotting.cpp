#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rcc/unknotting.hpp"

using namespace rcc;
using fixtures::error_of;

namespace {

using L = LaurentPolynomial;

oracle::Poly as_oracle(const L& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) out[e] = c;
  return out;
}

KnotDiagram relabel(const KnotDiagram& d, int shift, bool reverse) {
  auto pd = oracle::read_pd(d.to_pd());
  const int n = static_cast<int>(2 * pd.size());
  for (auto& q : pd) {
    for (auto& l : q) l = (l - 1 + shift) % n + 1;
    if (reverse) {
      for (auto& l : q) l = n + 1 - l;
      q = {q[2], q[3], q[0], q[1]};
    }
  }
  return parse_pd(oracle::write_pd(pd));
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  const auto a = L::monomial(1, 2) + L(3);  // A^2 + 3
  const auto b = L::monomial(-1, -1);
  CHECK((a * b).to_string("A") == "-A - 3*A^-1");
  CHECK((a - a).is_zero());
  CHECK(a.pow(2) == L::monomial(1, 4) + L::monomial(6, 2) + L(9));
  CHECK(a.inverted() == L::monomial(1, -2) + L(3));
  CHECK(L::monomial(5, 8).divide_exponents(-4) == L::monomial(5, -2));
  CHECK_THROWS_AS((void)L::monomial(1, 3).divide_exponents(2), std::domain_error);
  CHECK(a.at_minus_one() == 4);
  CHECK(b.at_minus_one() == 1);
  CHECK(a.coefficient(2) == 1);
  CHECK(a.coefficient(7) == 0);
  CHECK(a.min_exponent() == 0);
  CHECK(a.max_exponent() == 2);
  CHECK(L().to_string() == "0");
  CHECK((-a).coefficient(0) == -3);
}

TEST_CASE("bracket and Jones on small diagrams") {
  CHECK(kauffman_bracket(KnotDiagram{}) == L(1));
  CHECK(jones_normalized(KnotDiagram{}) == L(1));

  const auto d = parse_pd(fixtures::kTrefoilPd);
  const auto v = jones_normalized(d);
  CHECK(v == L::monomial(-1, -4) + L::monomial(1, -3) + L::monomial(1, -1));
  CHECK(as_oracle(v) == oracle::jones(oracle::read_pd(d.to_pd())));
  CHECK(jones_normalized(apply_crossing_changes(d, CrossingSet::full(3))) == v.inverted());

  // the curl: one smoothing leaves a split circle, the other a single loop
  const auto curl = parse_pd("X[1,1,2,2]");
  const auto delta = L::monomial(-1, 2) + L::monomial(-1, -2);
  const auto br = kauffman_bracket(curl);
  CHECK((br == L::monomial(1, 1) * delta + L::monomial(1, -1) || br == L::monomial(1, -1) * delta + L::monomial(1, 1)));
  CHECK(jones_normalized(curl) == L(1));
  CHECK(is_trivial(curl));
}

TEST_CASE("a curl multiplies the bracket by -A^3 or -A^-3") {
  std::mt19937_64 rng(9);
  for (const auto& [name, d] : fixtures::catalog_diagrams()) {
    if (d.crossing_count() > 7) continue;
    CAPTURE(name);
    const auto before = kauffman_bracket(d);
    const auto after = kauffman_bracket(add_kink(d, static_cast<int>(rng() % d.edge_count())));
    CHECK((after == L::monomial(-1, 3) * before || after == L::monomial(-1, -3) * before));
  }
}

TEST_CASE("Jones does not depend on the basepoint or orientation") {
  for (const auto& [name, d] : fixtures::catalog_diagrams()) {
    if (d.crossing_count() > 7) continue;
    CAPTURE(name);
    const auto v = jones_normalized(d);
    CHECK(jones_normalized(relabel(d, 3, false)) == v);
    CHECK(jones_normalized(relabel(d, 0, true)) == v);
    CHECK(jones_normalized(relabel(d, 5, true)) == v);
  }
}

TEST_CASE("bracket guard") {
  const std::vector<int> fifteen{15};
  const auto big = rational_diagram(fifteen);
  CHECK(error_of([&] { kauffman_bracket(big); }) == ErrorCode::TooManyCrossings);
  CHECK(error_of([&] { is_trivial(big); }) == ErrorCode::TooManyCrossings);
}

TEST_CASE("triviality") {
  CHECK(is_trivial(KnotDiagram{}));
  const RccMap t(parse_pd(fixtures::kTrefoilPd));
  CHECK_FALSE(is_trivial(t.diagram()));
  int lobes = 0;
  for (std::size_t r = 0; r < 5; ++r)
    if (t.regions().crossings_of(r).count() == 2) {
      ++lobes;
      CHECK(is_trivial(apply_rcc(t, RegionSet(5, {r}))));
    }
  CHECK(lobes == 3);
}

TEST_CASE("region unknotting number") {
  CHECK(region_unknotting_number(KnotDiagram{}).value == 0);
  const auto r = region_unknotting_number(parse_pd(fixtures::kTrefoilPd));
  CHECK(r.value == 1);
  CHECK(r.certificate.size == 1);
  CHECK(r.certificate.trivial);
  CHECK(r.certificate.within_c_plus_1_half);
  CHECK(r.certificate.jones == L(1));
  const RccMap map(parse_pd(fixtures::kTrefoilPd));
  CHECK(is_trivial(apply_rcc(map, r.certificate.regions)));
  CHECK(map.phi(r.certificate.regions) == r.certificate.changed);

  const std::vector<int> eleven{11};
  CHECK(error_of([&] { region_unknotting_number(rational_diagram(eleven)); }) == ErrorCode::TooManyCrossings);
}

TEST_CASE("monotone diagrams") {
  CHECK(is_monotone(KnotDiagram{}, {0}));
  const auto d = parse_pd(fixtures::kTrefoilPd);
  for (int p = 0; p < 6; ++p) {
    CAPTURE(p);
    const auto target = monotone_target(d, {p});
    // passes alternate, so starting before an over-pass leaves one crossing
    // met from below and starting before an under-pass leaves two
    const bool over_first = d.head(p).slot != 0;
    CHECK(target.count() == (over_first ? 1U : 2U));
    CHECK_FALSE(is_monotone(d, {p}));
    const auto m = apply_crossing_changes(d, target);
    CHECK(is_monotone(m, {p}));
    CHECK(monotone_target(m, {p}).empty());
    CHECK(is_trivial(m));
    auto ref = oracle::under_first(oracle::read_pd(d.to_pd()), p + 1);
    std::sort(ref.begin(), ref.end());
    CHECK(target.members() == ref);
  }
  CHECK(error_of([&] { monotone_target(d, {6}); }) == ErrorCode::ContractViolation);
}

TEST_CASE("changing the crossing just past the basepoint keeps a diagram monotone from the next edge") {
  for (const auto& [name, d] : fixtures::catalog_diagrams()) {
    CAPTURE(name);
    const int edges = static_cast<int>(d.edge_count());
    for (int p = 0; p < edges; ++p) {
      const auto m = apply_crossing_changes(d, monotone_target(d, {p}));
      REQUIRE(is_monotone(m, {p}));
      const auto x = static_cast<std::size_t>(m.head(p).crossing);
      const auto shifted = apply_crossing_changes(m, CrossingSet(d.crossing_count(), {x}));
      CHECK(is_monotone(shifted, {(p + 1) % edges}));
    }
  }
}

TEST_CASE("equilibrium sets") {
  const RccMap t(parse_pd(fixtures::kTrefoilPd));
  for (std::uint64_t m = 0; m < 32; ++m) CHECK_FALSE(equilibrium(RegionSet::from_mask(5, m), t.coloring()).is_equilibrium);

  const std::vector<int> fig11{2, 3, 1, 2};
  const RccMap e(rational_diagram(fig11));
  const auto& col = e.coloring();
  const auto rb = equilibrium(e.black(), col);
  CHECK_FALSE(rb.is_equilibrium);
  CHECK(rb.white_in_set == 0);
  CHECK(rb.black_in_set == rb.black_total);

  std::mt19937_64 rng(4);
  int found = 0;
  for (int trial = 0; trial < 2000 && found < 200; ++trial) {
    const auto s = RegionSet::from_mask(10, rng());
    if (!equilibrium(s, col).is_equilibrium) continue;
    ++found;
    for (const auto& c : bw_complements(e, s)) CHECK(equilibrium(c, col).is_equilibrium);
  }
  CHECK(found > 50);
}

TEST_CASE("equilibrium shift law") {
  const std::vector<int> fig11{2, 3, 1, 2};
  const RccMap e(rational_diagram(fig11));
  const auto& col = e.coloring();
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = RegionSet::from_mask(10, rng());
    if (!equilibrium(s, col).is_equilibrium) continue;
    const auto t = RegionSet::from_mask(10, rng());
    const auto out = s.complement();
    const bool law = (t & col.black & s).count() == (t & col.black & out).count() &&
                     (t & col.white & s).count() == (t & col.white & out).count();
    CHECK(equilibrium(s ^ t, col).is_equilibrium == law);
  }
}

TEST_CASE("procedure on the trefoil and the even/even rational diagram") {
  const auto t = theorem2_search(parse_pd(fixtures::kTrefoilPd));
  CHECK(t.route == "odd-coloring");
  CHECK(t.size <= 2);
  CHECK(t.trivial);

  const std::vector<int> fig11{2, 3, 1, 2};
  const RccMap e(rational_diagram(fig11));
  const auto c = theorem2_search(e);
  CHECK(c.size <= 4);
  CHECK(c.trivial);
  CHECK(c.route != "odd-coloring");
  CHECK(is_trivial(apply_rcc(e, c.regions)));
  REQUIRE_FALSE(c.trace.empty());
  CHECK(c.trace.front().k == 0);
  CHECK(c.trace.front().report.is_equilibrium == (c.route != "procedure-0"));
  CHECK_FALSE(c.trace.back().report.is_equilibrium);

  CHECK(error_of([] { theorem2_search(add_kink(parse_pd(fixtures::kTrefoilPd), 2)); }) == ErrorCode::ReducibleDiagram);
  CHECK(error_of([] { theorem2_search(KnotDiagram{}); }) == ErrorCode::ContractViolation);
}

TEST_CASE("every basepoint shift uses a set realizing the crossing just passed") {
  for (const auto& [name, d] : fixtures::catalog_diagrams()) {
    const RccMap map(d);
    const auto cert = theorem2_search(map);
    for (std::size_t i = 1; i < cert.trace.size(); ++i) {
      const auto& step = cert.trace[i];
      REQUIRE(step.shift.has_value());
      CHECK(map.phi(*step.shift) == CrossingSet(d.crossing_count(), {*step.crossing_passed}));
      CHECK(step.set == (cert.trace[i - 1].set ^ *step.shift));
      CHECK(is_monotone(apply_rcc(map, step.set), {step.basepoint_edge}));
    }
  }
}

TEST_CASE("four complements split 2(c+2) regions") {
  std::mt19937_64 rng(12);
  for (const auto& [name, d] : fixtures::catalog_diagrams()) {
    const RccMap map(d);
    const auto c = d.crossing_count();
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = RegionSet::from_mask(map.region_count(), rng());
      std::size_t total = 0;
      for (const auto& x : bw_class(map, s)) total += x.count();
      CHECK(total == 2 * (c + 2));
      CHECK(2 * theorem1_bound(map, s) <= c + 2);
    }
    CHECK(theorem1_bound(map, map.no_regions()) == 0);
  }
}

TEST_CASE("some single-crossing solution has an odd number of regions of one color") {
  for (const auto& [name, d] : fixtures::catalog_diagrams()) {
    CAPTURE(name);
    const RccMap map(d);
    bool odd = false;
    for (std::size_t x = 0; x < d.crossing_count(); ++x)
      for (const auto& t : solve_for_crossings(map, CrossingSet(d.crossing_count(), {x})))
        odd = odd || (t & map.black()).count() % 2 == 1 || (t & map.white()).count() % 2 == 1;
    CHECK(odd);
  }
}
