#include "rcc/unknotting.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "rcc/kernels.hpp"

namespace rcc {
namespace {

void require_bracket_size(const KnotDiagram& d) {
  if (d.crossing_count() > kMaxBracketCrossings)
    throw Error(ErrorCode::TooManyCrossings, std::to_string(d.crossing_count()) + " crossings exceed the bracket guard of " +
                                                 std::to_string(kMaxBracketCrossings));
}

// Number of loops in the state where crossing x is A-smoothed iff bit x of
// `state` is set. A joins slots 0-1 and 2-3, B joins 0-3 and 1-2.
int count_loops(const KnotDiagram& d, std::uint32_t state, std::vector<int>& parent) {
  const int edges = static_cast<int>(d.edge_count());
  std::iota(parent.begin(), parent.end(), 0);
  int components = edges;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v)
      v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  };
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    const auto& e = d.crossing(x).edges;
    if ((state >> x) & 1U) {
      unite(e[0], e[1]);
      unite(e[2], e[3]);
    } else {
      unite(e[0], e[3]);
      unite(e[1], e[2]);
    }
  }
  return components;
}

RegionSet smallest(const std::array<RegionSet, 4>& sets) {
  return *std::min_element(sets.begin(), sets.end(),
                           [](const RegionSet& a, const RegionSet& b) { return canonical_less(a, b); });
}

}  // namespace

LaurentPolynomial kauffman_bracket(const KnotDiagram& d) {
  require_bracket_size(d);
  const std::size_t n = d.crossing_count();
  if (n == 0) return LaurentPolynomial(1);

  // tally[a][loops]: states with a A-smoothings and that many loops
  std::vector<std::vector<std::int64_t>> tally(n + 1, std::vector<std::int64_t>(2 * n + 1, 0));
  std::vector<int> parent(d.edge_count());
  for (std::uint32_t state = 0; state < (1U << n); ++state) {
    const int loops = count_loops(d, state, parent);
    ++tally[static_cast<std::size_t>(std::popcount(state))][static_cast<std::size_t>(loops)];
  }

  const LaurentPolynomial delta = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  std::vector<LaurentPolynomial> delta_pow{LaurentPolynomial(1)};
  for (std::size_t i = 1; i <= 2 * n; ++i) delta_pow.push_back(delta_pow.back() * delta);

  LaurentPolynomial out;
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t loops = 1; loops <= 2 * n; ++loops)
      if (tally[a][loops] != 0) {
        const int exponent = static_cast<int>(a) - static_cast<int>(n - a);
        out += LaurentPolynomial::monomial(tally[a][loops], exponent) * delta_pow[loops - 1];
      }
  return out;
}

LaurentPolynomial jones_normalized(const KnotDiagram& d) {
  const int w = d.writhe();
  const auto factor = LaurentPolynomial::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return (factor * kauffman_bracket(d)).divide_exponents(-4);
}

bool is_trivial(const KnotDiagram& d) { return jones_normalized(d) == LaurentPolynomial(1); }

EquilibriumReport equilibrium(const RegionSet& s, const Coloring& col) {
  EquilibriumReport r;
  r.black_in_set = (s & col.black).count();
  r.white_in_set = (s & col.white).count();
  r.black_total = col.black.count();
  r.white_total = col.white.count();
  r.is_equilibrium = r.black_total % 2 == 0 && r.white_total % 2 == 0 && 2 * r.black_in_set == r.black_total &&
                     2 * r.white_in_set == r.white_total;
  return r;
}

UnknottingCertificate make_certificate(const RccMap& map, const RegionSet& s) {
  UnknottingCertificate cert;
  cert.crossing_count = map.crossing_count();
  cert.regions = s;
  cert.size = s.count();
  cert.changed = map.phi(s);
  cert.jones = jones_normalized(apply_crossing_changes(map.diagram(), cert.changed));
  cert.trivial = cert.jones == LaurentPolynomial(1);
  cert.within_c_plus_2_half = 2 * cert.size <= cert.crossing_count + 2;
  cert.within_c_plus_1_half = 2 * cert.size <= cert.crossing_count + 1;
  return cert;
}

UnknottingResult region_unknotting_number(const KnotDiagram& d) {
  if (d.crossing_count() > kMaxExactSearchCrossings)
    throw Error(ErrorCode::TooManyCrossings, std::to_string(d.crossing_count()) + " crossings exceed the search guard of " +
                                                 std::to_string(kMaxExactSearchCrossings));
  return region_unknotting_number(RccMap(d));
}

UnknottingResult region_unknotting_number(const RccMap& map) {
  const std::size_t n = map.crossing_count();
  if (n > kMaxExactSearchCrossings)
    throw Error(ErrorCode::TooManyCrossings, std::to_string(n) + " crossings exceed the search guard of " +
                                                 std::to_string(kMaxExactSearchCrossings));

  // A region set for each single crossing; any crossing set's preimage coset
  // is the XOR of these plus the kernel.
  std::vector<std::uint64_t> unit_preimage(n);
  for (std::size_t i = 0; i < n; ++i) {
    CrossingSet one(n);
    one.insert(i);
    unit_preimage[i] = solve_for_crossings(map, one)[0].mask();
  }
  const std::size_t classes = std::size_t{1} << n;
  std::vector<std::uint64_t> selectors(classes);
  std::iota(selectors.begin(), selectors.end(), std::uint64_t{0});
  std::vector<std::uint64_t> preimage(classes);
  kernels::xor_combine(unit_preimage, selectors, preimage);

  std::vector<RegionSet> lightest;
  lightest.reserve(classes);
  for (std::size_t a = 0; a < classes; ++a) {
    const auto p = RegionSet::from_mask(map.region_count(), preimage[a]);
    const auto& k = map.kernel();
    lightest.push_back(smallest({p ^ k[0], p ^ k[1], p ^ k[2], p ^ k[3]}));
  }
  std::vector<std::size_t> order(classes);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return canonical_less(lightest[a], lightest[b]); });

  for (std::size_t a : order) {
    const auto changed = CrossingSet::from_mask(n, a);
    if (is_trivial(apply_crossing_changes(map.diagram(), changed))) {
      UnknottingResult result;
      result.value = lightest[a].count();
      result.certificate = make_certificate(map, lightest[a]);
      return result;
    }
  }
  // changing every under-first crossing from any basepoint gives a monotone
  // diagram, so some class always succeeds
  throw Error(ErrorCode::ContractViolation, "no region set unknots the diagram");
}

CrossingSet monotone_target(const KnotDiagram& d, Basepoint p) {
  const std::size_t n = d.crossing_count();
  CrossingSet target(n);
  if (n == 0) return target;
  const int edges = static_cast<int>(d.edge_count());
  if (p.edge < 0 || p.edge >= edges) throw Error(ErrorCode::ContractViolation, "basepoint edge out of range");
  std::vector<bool> seen(n, false);
  for (int t = 0; t < edges; ++t) {
    const EdgeEnd h = d.head((p.edge + t) % edges);
    const auto x = static_cast<std::size_t>(h.crossing);
    if (seen[x]) continue;
    seen[x] = true;
    if (h.slot == 0) target.insert(x);
  }
  return target;
}

bool is_monotone(const KnotDiagram& d, Basepoint p) { return monotone_target(d, p).empty(); }

UnknottingCertificate theorem2_search(const KnotDiagram& d) { return theorem2_search(RccMap(d)); }

UnknottingCertificate theorem2_search(const RccMap& map) {
  if (!map.irreducible()) throw Error(ErrorCode::ReducibleDiagram, "the procedure needs an irreducible diagram");
  const std::size_t n = map.crossing_count();
  if (n == 0) throw Error(ErrorCode::ContractViolation, "the procedure needs at least one crossing");
  const KnotDiagram& d = map.diagram();
  const Coloring& col = map.coloring();
  const int edges = static_cast<int>(d.edge_count());

  std::vector<ProcedureStep> trace;
  RegionSet s = solve_for_crossings(map, monotone_target(d, {0}))[0];
  trace.push_back({0, 0, std::nullopt, std::nullopt, s, equilibrium(s, col)});

  std::string route;
  std::optional<std::size_t> steps_k;
  if (col.black.count() % 2 != 0 || col.white.count() % 2 != 0) {
    route = "odd-coloring";
  } else if (!trace.back().report.is_equilibrium) {
    route = "procedure-0";
  } else {
    for (int k = 1;; ++k) {
      if (k >= edges)
        throw Error(ErrorCode::ProofContractViolated, "every basepoint shift up to k = 2c kept the set equilibrium");
      const auto passed = static_cast<std::size_t>(d.head(k - 1).crossing);
      CrossingSet one(n);
      one.insert(passed);
      const RegionSet shift = solve_for_crossings(map, one)[0];
      s ^= shift;
      if (!is_monotone(apply_rcc(map, s), {k}))
        throw Error(ErrorCode::ProofContractViolated, "shifted set is not monotone from the new basepoint");
      trace.push_back({static_cast<std::size_t>(k), k, passed, shift, s, equilibrium(s, col)});
      if (!trace.back().report.is_equilibrium) {
        route = "procedure-k";
        steps_k = static_cast<std::size_t>(k);
        break;
      }
    }
  }

  UnknottingCertificate cert = make_certificate(map, smallest(bw_class(map, s)));
  cert.route = route;
  cert.steps_k = steps_k;
  cert.trace = std::move(trace);
  if (!cert.trivial)
    throw Error(ErrorCode::ProofContractViolated, "result " + format_regions(cert.regions) + " does not unknot the diagram");
  if (!cert.within_c_plus_1_half)
    throw Error(ErrorCode::ProofContractViolated,
                "result has " + std::to_string(cert.size) + " regions for c = " + std::to_string(n));
  return cert;
}

std::size_t theorem1_bound(const RccMap& map, const RegionSet& s) { return smallest(bw_class(map, s)).count(); }

}  // namespace rcc
