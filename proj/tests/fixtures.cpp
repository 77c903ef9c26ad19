#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rcc/error.hpp"

namespace fixtures {

const std::vector<rcc::CatalogEntry>& catalog() {
  static const auto entries = rcc::load_catalog(RCC_TEST_CATALOG);
  return entries;
}

const std::vector<Named>& catalog_diagrams() {
  static const auto named = [] {
    std::vector<Named> out;
    for (const auto& e : catalog()) out.push_back({e.name, rcc::entry_diagram(e)});
    return out;
  }();
  return named;
}

std::vector<std::vector<int>> rational_sequences(int max_crossings) {
  std::vector<std::vector<int>> out;
  for (int n = 1; n <= max_crossings; ++n)
    for (unsigned cuts = 0; cuts < (1U << (n - 1)); ++cuts) {
      std::vector<int> seq;
      int run = 1;
      for (int i = 0; i < n - 1; ++i) {
        if ((cuts >> i) & 1U) {
          seq.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      seq.push_back(run);
      try {
        (void)rcc::rational_diagram(seq);
        out.push_back(seq);
      } catch (const rcc::Error& e) {
        if (e.code() != rcc::ErrorCode::NotAKnot) throw;
      }
    }
  return out;
}

std::vector<Named> rational_diagrams(int max_crossings) {
  std::vector<Named> out;
  for (const auto& seq : rational_sequences(max_crossings)) out.push_back({sequence_name(seq), rcc::rational_diagram(seq)});
  return out;
}

std::string sequence_name(const std::vector<int>& seq) {
  std::string s = "T(";
  for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + std::to_string(seq[i]);
  return s + ")";
}

const std::vector<long>& table_determinants() {
  static const std::vector<long> dets{3,  5,  5,  7,  9,  11, 13, 7,  11, 13, 15, 17, 19, 21, 13, 17, 17, 19,
                                      21, 23, 23, 25, 25, 27, 27, 29, 29, 31, 33, 35, 37, 45, 3,  9,  15};
  return dets;
}

rcc::KnotDiagram curled_trefoil() {
  // edge 3 after the first curl is the trefoil's original edge 1
  return rcc::add_kink(rcc::add_kink(rcc::parse_pd(kTrefoilPd), 0), 3);
}

std::optional<WorkedExampleMatch> match_worked_example(const rcc::RccMap& map) {
  if (map.crossing_count() != 3 || map.region_count() != 5) return std::nullopt;
  // reference sets over labels R1..R5 (bit k = R(k+1))
  const std::set<std::uint64_t> caption{0b00001, 0b10011, 0b01100, 0b11110};
  const std::uint64_t color_class = 0b10010;
  for (std::size_t c1 = 0; c1 < 3; ++c1)
    for (std::size_t c2 = 0; c2 < 3; ++c2) {
      if (c1 == c2) continue;
      rcc::CrossingSet target(3, {c1, c2});
      const auto sols = rcc::solve_for_crossings(map, target);
      std::array<std::size_t, 5> perm;
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      do {
        auto relabel = [&](std::uint64_t reference) {
          std::uint64_t m = 0;
          for (std::size_t k = 0; k < 5; ++k)
            if ((reference >> k) & 1U) m |= std::uint64_t{1} << perm[k];
          return m;
        };
        std::set<std::uint64_t> ours;
        for (const auto& s : sols) ours.insert(s.mask());
        std::set<std::uint64_t> theirs;
        for (auto p : caption) theirs.insert(relabel(p));
        const auto cls = relabel(color_class);
        if (ours == theirs && (cls == map.black().mask() || cls == map.white().mask())) return WorkedExampleMatch{c1, c2, perm};
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return std::nullopt;
}

}  // namespace fixtures
