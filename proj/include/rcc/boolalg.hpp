#pragma once

// The Boolean algebra induced on P(S), S = R minus one black region b and one
// white region w, by pulling union, intersection and complement of P(C) back
// through the bijection phi : P(S) -> P(C).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcc/gf2.hpp"
#include "rcc/rcc.hpp"

namespace rcc {

class RestrictedAlgebra {
 public:
  const RccMap& map() const noexcept { return *map_; }
  std::size_t black_region() const noexcept { return b_; }
  std::size_t white_region() const noexcept { return w_; }
  // Members of S in ascending region order.
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  RegionSet universe() const;

  CrossingSet phi(const RegionSet& a) const;
  RegionSet phi_inverse(const CrossingSet& x) const;

  RegionSet join_r(const RegionSet& a, const RegionSet& b) const;
  RegionSet meet_r(const RegionSet& a, const RegionSet& b) const;
  RegionSet complement_r(const RegionSet& a) const;
  // a <=r b  iff  a meet_r complement_r(b) is empty.
  bool leq_r(const RegionSet& a, const RegionSet& b) const;

  RegionSet top() const { return top_; }     // phi^-1(C)
  RegionSet bottom() const { return RegionSet(map_->region_count()); }

  // The i-th element of P(S): bit j of i selects members()[j].
  RegionSet element(std::uint64_t index) const;
  std::uint64_t element_count() const noexcept { return std::uint64_t{1} << members_.size(); }

 private:
  friend RestrictedAlgebra build_restricted(const RccMap& map, std::size_t b, std::size_t w);
  RestrictedAlgebra() = default;
  void require_in_s(const RegionSet& a) const;

  const RccMap* map_ = nullptr;
  std::size_t b_ = 0;
  std::size_t w_ = 0;
  std::vector<std::size_t> members_;
  // region mask of phi^-1 of each single crossing
  std::vector<std::uint64_t> inverse_columns_;
  RegionSet top_;
};

// The map must outlive the algebra.
// Errors: ReducibleDiagram, NotBlackWhitePair, UnknownRegion.
RestrictedAlgebra build_restricted(const RccMap& map, std::size_t b, std::size_t w);

struct AxiomReport {
  bool commutative = true;
  bool associative = true;
  bool distributive = true;
  bool identities = true;
  bool complements = true;
  bool exhaustive = false;
  std::uint64_t triples_checked = 0;
  std::optional<std::string> first_violation;

  bool ok() const noexcept { return commutative && associative && distributive && identities && complements; }
};

struct SweepOptions {
  // Triples are enumerated exhaustively when the algebra has at most this
  // many elements, otherwise `samples` random triples are drawn.
  std::uint64_t exhaustive_max_elements = 32;
  // Isomorphism checks visit every pair up to this many elements.
  std::uint64_t exhaustive_pair_max_elements = 32;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0x5eed;
};

// Checks the five defining conditions of a Boolean algebra for the induced
// operations on P(S).
AxiomReport verify_axioms(const RestrictedAlgebra& alg, const SweepOptions& opts = {});

// The same five conditions for P(C) with union and intersection.
AxiomReport verify_power_set_axioms(std::size_t crossings, const SweepOptions& opts = {});

struct IsomorphismReport {
  bool bijective = true;     // phi o phi^-1 = id on P(C), phi^-1 o phi = id on P(S)
  bool homomorphism = true;  // phi preserves join, meet, complement
  bool order = true;         // a <=r b  iff  phi(a) subset of phi(b)
  bool hasse = true;         // covering pairs correspond (checked when exhaustive)
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  std::optional<std::string> first_violation;

  bool ok() const noexcept { return bijective && homomorphism && order && hasse; }
};

IsomorphismReport verify_isomorphism(const RestrictedAlgebra& alg, const SweepOptions& opts = {});

}  // namespace rcc
