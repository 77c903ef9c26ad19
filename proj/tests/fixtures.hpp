#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rcc/catalog.hpp"
#include "rcc/diagram.hpp"
#include "rcc/error.hpp"
#include "rcc/rcc.hpp"

namespace fixtures {

struct Named {
  std::string name;
  rcc::KnotDiagram diagram;
};

// The bundled 3_1 .. 8_21 table.
const std::vector<rcc::CatalogEntry>& catalog();
const std::vector<Named>& catalog_diagrams();

// Every Conway sequence with positive terms and at most `max_crossings`
// crossings whose closure is a knot.
std::vector<std::vector<int>> rational_sequences(int max_crossings);
std::vector<Named> rational_diagrams(int max_crossings);

std::string sequence_name(const std::vector<int>& seq);

// Known determinants of 3_1 .. 8_21 in table order.
const std::vector<long>& table_determinants();

// A labelling of a 5-region, 3-crossing projection under which solving for
// {c1, c2} gives exactly {R1}, {R1,R2,R5}, {R3,R4}, {R2,R3,R4,R5} with
// {R2,R5} one color class. regions[k] is the region playing R(k+1).
struct WorkedExampleMatch {
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  std::array<std::size_t, 5> regions{};
};
std::optional<WorkedExampleMatch> match_worked_example(const rcc::RccMap& map);

// Code of the rcc::Error thrown by f, if any.
template <class F>
std::optional<rcc::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const rcc::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline const char* kTrefoilPd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

// The trefoil with a curl on two different arcs: 5 crossings, 7 regions. One
// curl is not enough for a singular black/white deletion.
rcc::KnotDiagram curled_trefoil();

}  // namespace fixtures
