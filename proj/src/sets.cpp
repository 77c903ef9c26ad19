#include "rcc/sets.hpp"

namespace rcc {
namespace {

template <class Set>
std::string format_members(const Set& s, const char* prefix) {
  std::string out = "{";
  bool first = true;
  for (auto m : s.members()) {
    if (!first) out += ',';
    out += prefix + std::to_string(m + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string format_regions(const RegionSet& s) { return format_members(s, "R"); }
std::string format_crossings(const CrossingSet& s) { return format_members(s, "c"); }

}  // namespace rcc
