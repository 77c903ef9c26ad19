#pragma once

// Triviality oracle, exact region unknotting numbers, monotone diagrams,
// equilibrium sets, and the constructive (c+1)/2 procedure.

#include <optional>
#include <string>
#include <vector>

#include "rcc/diagram.hpp"
#include "rcc/laurent.hpp"
#include "rcc/rcc.hpp"

namespace rcc {

inline constexpr std::size_t kMaxBracketCrossings = 14;
inline constexpr std::size_t kMaxExactSearchCrossings = 10;

// State-sum Kauffman bracket in the variable A, normalized so the round
// diagram has bracket 1. Throws Error(TooManyCrossings) above 14 crossings.
LaurentPolynomial kauffman_bracket(const KnotDiagram& d);

// Writhe-normalized bracket (-A^3)^-w <D> in the variable t = A^-4.
LaurentPolynomial jones_normalized(const KnotDiagram& d);

// Jones polynomial equal to 1. No nontrivial knot of at most 14 crossings has
// trivial Jones polynomial, so this is exact within the guard.
bool is_trivial(const KnotDiagram& d);

struct EquilibriumReport {
  std::size_t black_in_set = 0;
  std::size_t white_in_set = 0;
  std::size_t black_total = 0;
  std::size_t white_total = 0;
  bool is_equilibrium = false;
};

// s holds exactly half of the black and half of the white regions.
EquilibriumReport equilibrium(const RegionSet& s, const Coloring& col);

// One step of the basepoint-shifting procedure: S_k = S_{k-1} + T^k where
// phi(T^k) is the crossing just passed.
struct ProcedureStep {
  std::size_t k = 0;
  int basepoint_edge = 0;
  std::optional<std::size_t> crossing_passed;
  std::optional<RegionSet> shift;
  RegionSet set;
  EquilibriumReport report;
};

struct UnknottingCertificate {
  std::size_t crossing_count = 0;
  RegionSet regions;
  std::size_t size = 0;
  CrossingSet changed;
  LaurentPolynomial jones;
  bool trivial = false;
  bool within_c_plus_2_half = false;  // 2 * size <= c + 2
  bool within_c_plus_1_half = false;  // 2 * size <= c + 1

  // Filled in by theorem2_search.
  std::string route;
  std::optional<std::size_t> steps_k;
  std::vector<ProcedureStep> trace;
};

// Evaluates RCC on s and records the outcome.
UnknottingCertificate make_certificate(const RccMap& map, const RegionSet& s);

struct UnknottingResult {
  std::size_t value = 0;
  UnknottingCertificate certificate;
};

// Exact u_R(D): crossing-change classes are visited by increasing weight of
// their lightest region set, and the first class the oracle accepts wins.
// Throws Error(TooManyCrossings) above 10 crossings.
UnknottingResult region_unknotting_number(const KnotDiagram& d);
UnknottingResult region_unknotting_number(const RccMap& map);

// Crossings that are first met as an under-pass when travelling from p.
CrossingSet monotone_target(const KnotDiagram& d, Basepoint p);
bool is_monotone(const KnotDiagram& d, Basepoint p);

// Runs the constructive proof: monotone target from the basepoint on edge 0,
// then shifts the basepoint one crossing at a time until the working set is
// not equilibrium, and returns its smallest BW-complement.
// Errors: ReducibleDiagram; ProofContractViolated if no non-equilibrium set
// turns up before k = 2c or the result misses the (c+1)/2 bound.
UnknottingCertificate theorem2_search(const RccMap& map);
UnknottingCertificate theorem2_search(const KnotDiagram& d);

// Smallest cardinality among s and its BW-complements.
std::size_t theorem1_bound(const RccMap& map, const RegionSet& s);

}  // namespace rcc
