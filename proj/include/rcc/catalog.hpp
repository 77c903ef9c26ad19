#pragma once

// Catalog files: one knot per line, `name<TAB>pd_code`, optionally followed by
// further tab-separated `key=value` fields (`c=` declared crossing number,
// `ur=` known region unknotting number of the diagram). Lines starting with
// '#' and blank lines are ignored.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcc/diagram.hpp"

namespace rcc {

struct CatalogEntry {
  std::string name;
  std::string pd;
  std::optional<std::size_t> crossing_number;
  std::optional<std::size_t> known_ur;
  std::size_t line = 0;
};

// Throws Error(CatalogFormat) naming the offending line.
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

// Parses the entry's PD code and checks it against the declared crossing
// number (explicit `c=` or the `<c>_<index>` name pattern).
KnotDiagram entry_diagram(const CatalogEntry& entry);

// $RCC_CATALOG if set, otherwise the catalog bundled with the sources.
std::filesystem::path default_catalog_path();

}  // namespace rcc
