#include "rcc/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

namespace rcc {
namespace {

std::size_t parse_count(const std::string& value, std::size_t line) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value.size() > 6)
    throw Error(ErrorCode::CatalogFormat, "line " + std::to_string(line) + ": '" + value + "' is not a count");
  return static_cast<std::size_t>(std::stoul(value));
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  static const std::regex table_name(R"((\d+)_(\d+))");
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;

    std::vector<std::string> fields;
    std::istringstream row(raw);
    for (std::string f; std::getline(row, f, '\t');) fields.push_back(f);
    if (fields.size() < 2 || fields[0].empty())
      throw Error(ErrorCode::CatalogFormat, "line " + std::to_string(line) + ": expected name<TAB>pd_code");

    CatalogEntry e;
    e.name = fields[0];
    e.pd = fields[1];
    e.line = line;
    for (std::size_t i = 2; i < fields.size(); ++i) {
      const auto eq = fields[i].find('=');
      if (eq == std::string::npos)
        throw Error(ErrorCode::CatalogFormat, "line " + std::to_string(line) + ": field '" + fields[i] + "' is not key=value");
      const std::string key = fields[i].substr(0, eq);
      const std::string value = fields[i].substr(eq + 1);
      if (key == "c")
        e.crossing_number = parse_count(value, line);
      else if (key == "ur")
        e.known_ur = parse_count(value, line);
      else
        throw Error(ErrorCode::CatalogFormat, "line " + std::to_string(line) + ": unknown field '" + key + "'");
    }
    std::smatch m;
    if (!e.crossing_number && std::regex_match(e.name, m, table_name)) e.crossing_number = parse_count(m[1].str(), line);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::CatalogFormat, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

KnotDiagram entry_diagram(const CatalogEntry& entry) {
  KnotDiagram d = parse_pd(entry.pd);
  if (entry.crossing_number && *entry.crossing_number != d.crossing_count())
    throw Error(ErrorCode::CatalogFormat, entry.name + " declares " + std::to_string(*entry.crossing_number) +
                                              " crossings but its PD code has " + std::to_string(d.crossing_count()));
  return d;
}

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv("RCC_CATALOG"); env != nullptr && *env != '\0') return env;
#ifdef RCC_DEFAULT_CATALOG
  return RCC_DEFAULT_CATALOG;
#else
  return "data/knots_3_to_8.tsv";
#endif
}

}  // namespace rcc
