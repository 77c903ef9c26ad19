#pragma once

// Region crossing change calculus: the region choice matrix, the effect map
// phi : P(R) -> P(C), and the solvers built on it.

#include <array>
#include <span>
#include <vector>

#include "rcc/diagram.hpp"
#include "rcc/gf2.hpp"
#include "rcc/sets.hpp"

namespace rcc {

// c x (c+2) incidence matrix: entry (i, j) is 1 when crossing i lies on the
// boundary of region j, however many corners of i the region occupies.
Gf2Matrix region_choice_matrix(const KnotDiagram& d, const RegionMap& rm);

// The effect map bound to one diagram. Immutable once built.
class RccMap {
 public:
  // Throws Error(TooManyCrossings) when c + 2 > 64.
  explicit RccMap(const KnotDiagram& d);

  const KnotDiagram& diagram() const noexcept { return diagram_; }
  const RegionMap& regions() const noexcept { return regions_; }
  const Coloring& coloring() const noexcept { return coloring_; }
  const Gf2Matrix& matrix() const noexcept { return matrix_; }
  bool irreducible() const noexcept { return irreducible_; }

  std::size_t crossing_count() const noexcept { return diagram_.crossing_count(); }
  std::size_t region_count() const noexcept { return regions_.region_count(); }

  RegionSet black() const { return coloring_.black; }
  RegionSet white() const { return coloring_.white; }
  RegionSet all_regions() const { return RegionSet::full(region_count()); }
  RegionSet no_regions() const { return RegionSet(region_count()); }
  CrossingSet no_crossings() const { return CrossingSet(crossing_count()); }

  // Null space of the matrix, {0, k1, k2, k1+k2}; on irreducible diagrams
  // this is {empty, B, W, B+W}.
  const std::array<RegionSet, 4>& kernel() const noexcept { return kernel_; }

  CrossingSet phi(const RegionSet& s) const;

  // out[k] = phi(region_masks[k]) as crossing masks.
  void phi_masks(std::span<const std::uint64_t> region_masks, std::span<std::uint64_t> out) const;

  // Column j of the matrix as a crossing mask.
  std::span<const std::uint64_t> column_masks() const noexcept { return columns_; }

 private:
  KnotDiagram diagram_;
  RegionMap regions_;
  Coloring coloring_;
  Gf2Matrix matrix_;
  bool irreducible_;
  std::vector<std::uint64_t> columns_;
  std::array<RegionSet, 4> kernel_;
};

// The four region sets with phi(s) = target, by (cardinality, bit string).
std::array<RegionSet, 4> solve_for_crossings(const RccMap& map, const CrossingSet& target);

// s+B, s+W, s+B+W.
std::array<RegionSet, 3> bw_complements(const RccMap& map, const RegionSet& s);

// s together with its three BW-complements.
std::array<RegionSet, 4> bw_class(const RccMap& map, const RegionSet& s);

// Region set realizing a single crossing change by smoothing `crossing` along
// the orientation, keeping the component through the lower-numbered outgoing
// edge, checkerboard-coloring its complement and collecting the original
// regions inside its black faces (the one holding region 0, if any, is black).
// Errors: ReducibleDiagram, UnknownCrossing; ContractViolation if the result
// fails phi(s) = {crossing}.
RegionSet splice_solution(const RccMap& map, std::size_t crossing);

// Whether deleting columns b and w leaves an invertible square matrix.
bool avoidance_invertible(const RccMap& map, std::size_t b, std::size_t w);

// The unique s with phi(s) = target and b, w not in s.
// Errors: NotBlackWhitePair, ReducibleDiagram, UnknownRegion; Singular would
// be a contract violation on irreducible input.
RegionSet solve_avoiding(const RccMap& map, const CrossingSet& target, std::size_t b, std::size_t w);

KnotDiagram apply_rcc(const RccMap& map, const RegionSet& s);

// Reference effect computed on the diagram itself: for every region of s,
// change every crossing once per corner the region has there.
CrossingSet simulate_rcc(const KnotDiagram& d, const RegionMap& rm, const RegionSet& s);

// A crossing at which some region sits in two or more corners: there the
// incidence matrix and the per-corner simulation can disagree.
struct IncidenceDiscrepancy {
  std::size_t crossing;
  std::size_t region;
  int multiplicity;
};
std::vector<IncidenceDiscrepancy> incidence_discrepancies(const RccMap& map);

}  // namespace rcc
