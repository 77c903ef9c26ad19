#include "rcc/rcc.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "rcc/kernels.hpp"

namespace rcc {
namespace {

void require_region(const RccMap& map, std::size_t r) {
  if (r >= map.region_count())
    throw Error(ErrorCode::UnknownRegion, "region " + std::to_string(r + 1) + " of " + std::to_string(map.region_count()));
}

void require_pair(const RccMap& map, std::size_t b, std::size_t w) {
  require_region(map, b);
  require_region(map, w);
  if (!map.coloring().is_black(b) || map.coloring().is_black(w))
    throw Error(ErrorCode::NotBlackWhitePair,
                "R" + std::to_string(b + 1) + " must be black and R" + std::to_string(w + 1) + " white");
}

RegionSet scatter(const Gf2Vector& compact, std::span<const std::size_t> positions, std::size_t universe) {
  RegionSet s(universe);
  for (std::size_t i : compact.indices()) s.insert(positions[i]);
  return s;
}

}  // namespace

Gf2Matrix region_choice_matrix(const KnotDiagram& d, const RegionMap& rm) {
  Gf2Matrix m(d.crossing_count(), rm.region_count());
  for (std::size_t x = 0; x < d.crossing_count(); ++x)
    for (int r : rm.regions_around(x)) m.set(x, static_cast<std::size_t>(r));
  return m;
}

RccMap::RccMap(const KnotDiagram& d)
    : diagram_(d),
      regions_(faces(d)),
      coloring_(checkerboard(regions_)),
      matrix_(region_choice_matrix(diagram_, regions_)),
      irreducible_(is_irreducible(diagram_, regions_)) {
  if (regions_.region_count() > kMaxSetUniverse)
    throw Error(ErrorCode::TooManyCrossings, std::to_string(d.crossing_count()) + " crossings exceed the 62-crossing limit");
  columns_.resize(region_count());
  for (std::size_t j = 0; j < region_count(); ++j) columns_[j] = matrix_.column(j).mask();

  const auto basis = rcc::kernel(matrix_);
  if (basis.size() != 2)
    throw Error(ErrorCode::ContractViolation,
                "region choice matrix has kernel dimension " + std::to_string(basis.size()) + ", expected 2");
  const auto k1 = RegionSet::from_vector(basis[0]);
  const auto k2 = RegionSet::from_vector(basis[1]);
  kernel_ = {no_regions(), k1, k2, k1 ^ k2};
}

CrossingSet RccMap::phi(const RegionSet& s) const {
  if (s.universe() != region_count())
    throw Error(ErrorCode::DimensionMismatch, "region set over " + std::to_string(s.universe()) + " regions");
  std::uint64_t acc = 0;
  for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) acc ^= columns_[static_cast<std::size_t>(std::countr_zero(m))];
  return CrossingSet::from_mask(crossing_count(), acc);
}

void RccMap::phi_masks(std::span<const std::uint64_t> region_masks, std::span<std::uint64_t> out) const {
  kernels::xor_combine(columns_, region_masks, out);
}

std::array<RegionSet, 4> solve_for_crossings(const RccMap& map, const CrossingSet& target) {
  if (target.universe() != map.crossing_count())
    throw Error(ErrorCode::UnknownCrossing, "target over " + std::to_string(target.universe()) + " crossings");
  AffineSolution sol;
  try {
    sol = solve_affine(map.matrix(), target.to_vector());
  } catch (const Error& e) {
    throw Error(ErrorCode::ContractViolation, std::string("region choice matrix not full rank: ") + e.what());
  }
  const auto p = RegionSet::from_vector(sol.particular);
  const auto& k = map.kernel();
  std::array<RegionSet, 4> out{p ^ k[0], p ^ k[1], p ^ k[2], p ^ k[3]};
  std::sort(out.begin(), out.end(), [](const RegionSet& a, const RegionSet& b) { return canonical_less(a, b); });
  return out;
}

std::array<RegionSet, 3> bw_complements(const RccMap& map, const RegionSet& s) {
  const RegionSet b = map.black();
  const RegionSet w = map.white();
  return {s ^ b, s ^ w, s ^ b ^ w};
}

std::array<RegionSet, 4> bw_class(const RccMap& map, const RegionSet& s) {
  const auto c = bw_complements(map, s);
  return {s, c[0], c[1], c[2]};
}

RegionSet splice_solution(const RccMap& map, std::size_t crossing) {
  const KnotDiagram& d = map.diagram();
  const RegionMap& rm = map.regions();
  if (crossing >= d.crossing_count())
    throw Error(ErrorCode::UnknownCrossing, "c" + std::to_string(crossing + 1) + " of " + std::to_string(d.crossing_count()));
  if (!map.irreducible()) throw Error(ErrorCode::ReducibleDiagram, "splice solution needs an irreducible projection");

  const Crossing& cr = d.crossing(crossing);
  const int edges = static_cast<int>(d.edge_count());
  // Smoothing along the orientation splits the curve into the arc leaving
  // through the under-strand and the arc leaving through the over-strand;
  // each runs until it first returns to the crossing.
  const int start = std::min(cr.edges[2], cr.edges[static_cast<std::size_t>(cr.over_out_slot())]);
  std::vector<bool> on_component(d.edge_count(), false);
  for (int e = start;; e = (e + 1) % edges) {
    on_component[static_cast<std::size_t>(e)] = true;
    if (d.head(e).crossing == static_cast<int>(crossing)) break;
  }

  const std::size_t r = rm.region_count();
  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e = 0; e < edges; ++e)
    if (!on_component[static_cast<std::size_t>(e)])
      parent[find(static_cast<std::size_t>(rm.left_of(e)))] = find(static_cast<std::size_t>(rm.right_of(e)));

  // faces of the component's complement, 2-colored across its edges
  std::vector<std::vector<std::size_t>> adj(r);
  for (int e = 0; e < edges; ++e) {
    if (!on_component[static_cast<std::size_t>(e)]) continue;
    const auto a = find(static_cast<std::size_t>(rm.left_of(e)));
    const auto b = find(static_cast<std::size_t>(rm.right_of(e)));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> color(r, -1);
  const std::size_t root = find(0);
  color[root] = 0;
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto v : adj[u]) {
      if (color[v] < 0) {
        color[v] = 1 - color[u];
        stack.push_back(v);
      } else if (color[v] == color[u]) {
        throw Error(ErrorCode::ContractViolation, "spliced component admits no checkerboard coloring");
      }
    }
  }

  RegionSet out(r);
  for (std::size_t j = 0; j < r; ++j)
    if (color[find(j)] == 0) out.insert(j);

  CrossingSet expected(d.crossing_count());
  expected.insert(crossing);
  if (map.phi(out) != expected)
    throw Error(ErrorCode::ContractViolation, "splice solution " + format_regions(out) + " changes " +
                                                  format_crossings(map.phi(out)));
  return out;
}

bool avoidance_invertible(const RccMap& map, std::size_t b, std::size_t w) {
  require_region(map, b);
  require_region(map, w);
  const std::array<std::size_t, 2> cols{b, w};
  return rank(delete_columns(map.matrix(), cols)) == map.crossing_count() && b != w;
}

RegionSet solve_avoiding(const RccMap& map, const CrossingSet& target, std::size_t b, std::size_t w) {
  require_pair(map, b, w);
  if (!map.irreducible()) throw Error(ErrorCode::ReducibleDiagram, "avoidance solve needs an irreducible projection");
  if (target.universe() != map.crossing_count())
    throw Error(ErrorCode::UnknownCrossing, "target over " + std::to_string(target.universe()) + " crossings");

  const std::array<std::size_t, 2> cols{b, w};
  Gf2Matrix inverse;
  try {
    inverse = invert_square(delete_columns(map.matrix(), cols));
  } catch (const Error& e) {
    throw Error(ErrorCode::ContractViolation, std::string("irreducible projection with ") + e.what());
  }
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < map.region_count(); ++j)
    if (j != b && j != w) kept.push_back(j);
  return scatter(inverse.multiply(target.to_vector()), kept, map.region_count());
}

KnotDiagram apply_rcc(const RccMap& map, const RegionSet& s) { return apply_crossing_changes(map.diagram(), map.phi(s)); }

CrossingSet simulate_rcc(const KnotDiagram& d, const RegionMap& rm, const RegionSet& s) {
  KnotDiagram cur = d;
  for (std::size_t r : s.members()) {
    for (const Corner& c : rm.boundary(r)) {
      CrossingSet one(d.crossing_count());
      one.insert(static_cast<std::size_t>(c.crossing));
      cur = apply_crossing_changes(cur, one);
    }
  }
  CrossingSet changed(d.crossing_count());
  for (std::size_t x = 0; x < d.crossing_count(); ++x)
    if (cur.crossing(x).positive != d.crossing(x).positive) changed.insert(x);
  return changed;
}

std::vector<IncidenceDiscrepancy> incidence_discrepancies(const RccMap& map) {
  std::vector<IncidenceDiscrepancy> out;
  const RegionMap& rm = map.regions();
  for (std::size_t x = 0; x < map.crossing_count(); ++x)
    for (std::size_t r = 0; r < rm.region_count(); ++r)
      if (const int m = rm.multiplicity(x, r); m >= 2) out.push_back({x, r, m});
  return out;
}

}  // namespace rcc
