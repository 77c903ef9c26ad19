#pragma once

// Knot diagrams as oriented 4-valent planar maps, their regions (faces) and
// checkerboard colorings.
//
// Internally edges are numbered 0..2c-1 in traversal order, so edge e+1
// leaves the crossing that edge e enters. PD text uses the knot-table
// convention: X[a,b,c,d] lists the edge labels counterclockwise starting
// from the incoming under-strand, labels are 1-based.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcc/sets.hpp"

namespace rcc {

struct Crossing {
  // Edge labels counterclockwise; slot 0 is the incoming under-strand, slot 2
  // the outgoing one.
  std::array<int, 4> edges{};
  // The over-strand enters at slot 3 and leaves at slot 1 (a right-handed
  // crossing). Otherwise it enters at slot 1 and leaves at slot 3.
  bool positive = false;

  int over_in_slot() const noexcept { return positive ? 3 : 1; }
  int over_out_slot() const noexcept { return positive ? 1 : 3; }
  int sign() const noexcept { return positive ? 1 : -1; }
  bool is_incoming(int slot) const noexcept { return slot == 0 || slot == over_in_slot(); }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct EdgeEnd {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

class KnotDiagram {
 public:
  // The round 0-crossing diagram.
  KnotDiagram() = default;

  // Labels must already be 0..2c-1 in traversal order; throws
  // Error(ContractViolation) otherwise. parse_pd() is the forgiving entry point.
  explicit KnotDiagram(std::vector<Crossing> crossings);

  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t edge_count() const noexcept { return 2 * crossings_.size(); }
  const Crossing& crossing(std::size_t i) const { return crossings_.at(i); }
  std::span<const Crossing> crossings() const noexcept { return crossings_; }

  // Where edge e ends (enters a crossing) and starts (leaves one).
  EdgeEnd head(int edge) const { return heads_.at(static_cast<std::size_t>(edge)); }
  EdgeEnd tail(int edge) const { return tails_.at(static_cast<std::size_t>(edge)); }
  // The opposite end of the edge occupying `end`.
  EdgeEnd other_end(EdgeEnd end) const;

  int writhe() const noexcept;

  // PD text with 1-based labels, crossings in index order.
  std::string to_pd() const;

  friend bool operator==(const KnotDiagram& a, const KnotDiagram& b) { return a.crossings_ == b.crossings_; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<EdgeEnd> heads_;
  std::vector<EdgeEnd> tails_;
};

// Whitespace-separated X[a,b,c,d] tokens with positive integer labels. Labels
// are renumbered along the orientation starting from the smallest one.
// Errors: MalformedToken, EdgeLabelNotTwice, MultipleComponents.
KnotDiagram parse_pd(std::string_view text);

// Corner `slot` of a crossing is the angle between its slots `slot` and
// `slot + 1` (counterclockwise).
struct Corner {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

class RegionMap {
 public:
  RegionMap(std::vector<std::vector<Corner>> boundaries, std::vector<std::array<int, 4>> corner_region,
            std::vector<std::array<int, 2>> edge_sides);

  std::size_t region_count() const noexcept { return boundaries_.size(); }
  std::size_t crossing_count() const noexcept { return corner_region_.size(); }

  // Corners of region r in boundary order.
  std::span<const Corner> boundary(std::size_t r) const { return boundaries_.at(r); }
  int region_at(Corner c) const {
    return corner_region_.at(static_cast<std::size_t>(c.crossing))[static_cast<std::size_t>(c.slot)];
  }
  const std::array<int, 4>& regions_around(std::size_t crossing) const { return corner_region_.at(crossing); }

  // Regions to the left and right of edge e, relative to its orientation.
  int left_of(int edge) const { return edge_sides_.at(static_cast<std::size_t>(edge))[0]; }
  int right_of(int edge) const { return edge_sides_.at(static_cast<std::size_t>(edge))[1]; }
  std::size_t edge_count() const noexcept { return edge_sides_.size(); }

  // Number of corners of `crossing` lying in `region` (0..4).
  int multiplicity(std::size_t crossing, std::size_t region) const;
  bool incident(std::size_t crossing, std::size_t region) const { return multiplicity(crossing, region) > 0; }

  // Crossings on the boundary of `region`.
  CrossingSet crossings_of(std::size_t region) const;

 private:
  std::vector<std::vector<Corner>> boundaries_;
  std::vector<std::array<int, 4>> corner_region_;
  std::vector<std::array<int, 2>> edge_sides_;
};

// Regions numbered by first discovery over edges 0, 1, ..., left side before
// right side. A 0-crossing diagram has two regions and no corners.
RegionMap faces(const KnotDiagram& d);

// Every crossing touches four distinct regions.
bool is_irreducible(const KnotDiagram& d, const RegionMap& rm);

struct Coloring {
  RegionSet black;
  RegionSet white;

  bool is_black(std::size_t region) const noexcept { return black.contains(region); }
  Coloring swapped() const { return {white, black}; }
};

// Region 0 is black.
Coloring checkerboard(const RegionMap& rm);

// Basepoint on `edge`, just before the crossing the edge enters.
struct Basepoint {
  int edge = 0;
};

// Standard alternating 2-bridge diagram for the Conway continued-fraction
// sequence: twists alternate horizontal / vertical starting horizontal, and
// the closure matches the last twist direction, so the diagram is reduced.
// c = sum(seq). Throws Error(NotAKnot) when the closure has two components.
KnotDiagram rational_diagram(std::span<const int> seq);

// Swaps over/under at every crossing in s; the projection is unchanged.
KnotDiagram apply_crossing_changes(const KnotDiagram& d, const CrossingSet& s);

// Inserts a Reidemeister-I curl on `edge`; the new crossing is nugatory.
KnotDiagram add_kink(const KnotDiagram& d, int edge);

}  // namespace rcc
