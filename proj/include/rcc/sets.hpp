#pragma once

// Subsets of the regions R or the crossings C of one diagram, i.e. elements of
// the Boolean algebras P(R) and P(C). Universes are capped at 64 members,
// which bounds diagrams handled by the RCC calculus at 62 crossings.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "rcc/error.hpp"
#include "rcc/gf2.hpp"

namespace rcc {

inline constexpr std::size_t kMaxSetUniverse = 64;

template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : universe_(check_universe(universe)) {}
  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members) : IndexSet(universe) {
    for (auto m : members) insert(m);
  }

  static IndexSet from_mask(std::size_t universe, std::uint64_t mask) {
    IndexSet s(universe);
    s.bits_ = mask & s.full_mask();
    return s;
  }
  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    s.bits_ = s.full_mask();
    return s;
  }
  static IndexSet from_vector(const Gf2Vector& v) { return from_mask(v.size(), v.mask()); }
  static IndexSet from_indices(std::size_t universe, const std::vector<std::size_t>& members) {
    IndexSet s(universe);
    for (auto m : members) s.insert(m);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t mask() const noexcept { return bits_; }
  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(std::size_t i) const noexcept { return i < universe_ && ((bits_ >> i) & 1U); }

  void insert(std::size_t i) {
    if (i >= universe_)
      throw Error(ErrorCode::DimensionMismatch,
                  "member " + std::to_string(i) + " outside universe of " + std::to_string(universe_));
    bits_ |= std::uint64_t{1} << i;
  }
  void erase(std::size_t i) noexcept {
    if (i < universe_) bits_ &= ~(std::uint64_t{1} << i);
  }
  void toggle(std::size_t i) {
    if (i >= universe_)
      throw Error(ErrorCode::DimensionMismatch,
                  "member " + std::to_string(i) + " outside universe of " + std::to_string(universe_));
    bits_ ^= std::uint64_t{1} << i;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  Gf2Vector to_vector() const { return Gf2Vector::from_mask(universe_, bits_); }

  IndexSet complement() const { return from_mask(universe_, ~bits_); }
  bool is_subset_of(const IndexSet& other) const { return (bits_ & ~same(other).bits_) == 0; }

  IndexSet& operator^=(const IndexSet& o) { return bits_ ^= same(o).bits_, *this; }
  IndexSet& operator&=(const IndexSet& o) { return bits_ &= same(o).bits_, *this; }
  IndexSet& operator|=(const IndexSet& o) { return bits_ |= same(o).bits_, *this; }
  friend IndexSet operator^(IndexSet a, const IndexSet& b) { return a ^= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  // (cardinality, bit-string) order used for every sorted listing.
  friend bool canonical_less(const IndexSet& a, const IndexSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    return diff != 0 && (a.bits_ & (diff & (~diff + 1))) == 0;
  }

 private:
  static std::size_t check_universe(std::size_t n) {
    if (n > kMaxSetUniverse)
      throw Error(ErrorCode::TooManyCrossings,
                  "set universe of " + std::to_string(n) + " exceeds " + std::to_string(kMaxSetUniverse));
    return n;
  }
  std::uint64_t full_mask() const noexcept {
    return universe_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe_) - 1;
  }
  const IndexSet& same(const IndexSet& o) const {
    if (o.universe_ != universe_) throw Error(ErrorCode::DimensionMismatch, "sets over different universes");
    return o;
  }

  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

struct RegionTag;
struct CrossingTag;
using RegionSet = IndexSet<RegionTag>;
using CrossingSet = IndexSet<CrossingTag>;

// "{R1,R3}" / "{c2}" with 1-based labels.
std::string format_regions(const RegionSet& s);
std::string format_crossings(const CrossingSet& s);

}  // namespace rcc
