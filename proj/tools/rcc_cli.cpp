#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcc/boolalg.hpp"
#include "rcc/catalog.hpp"
#include "rcc/unknotting.hpp"

using json = nlohmann::ordered_json;
using namespace rcc;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finished command: human text plus the structured outputs for the record.
struct Run {
  std::string text;
  json outputs = json::object();
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

template <class Set>
json labels(const Set& s) {
  json out = json::array();
  for (auto i : s.members()) out.push_back(i + 1);
  return out;
}

// "1,2", "c1,c2" or "R1,R2"; returns 0-based indices.
std::vector<std::size_t> parse_list(const std::string& text, char prefix, std::size_t limit, ErrorCode out_of_range) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }), tok.end());
    if (!tok.empty() && std::tolower(static_cast<unsigned char>(tok[0])) == std::tolower(static_cast<unsigned char>(prefix)))
      tok.erase(0, 1);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw UsageError("cannot read '" + text + "' as a list of labels");
    const auto v = std::stoull(tok);
    if (v == 0 || v > limit)
      throw Error(out_of_range, std::string(1, prefix) + tok + " outside 1.." + std::to_string(limit));
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  if (out.empty()) throw UsageError("empty label list");
  return out;
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text, std::size_t regions) {
  const auto v = parse_list(text, 'R', regions, ErrorCode::UnknownRegion);
  if (v.size() != 2) throw UsageError("expected two regions, got '" + text + "'");
  return {v[0], v[1]};
}

Run cmd_regions(const KnotDiagram& d) {
  const RccMap map(d);
  const auto b = map.black().count();
  const auto w = map.white().count();
  Run r;
  std::ostringstream os;
  os << "crossings: " << d.crossing_count() << "\n"
     << "regions: " << map.region_count() << "\n"
     << "irreducible: " << yes_no(map.irreducible()) << "\n"
     << "black: " << b << " " << format_regions(map.black()) << "\n"
     << "white: " << w << " " << format_regions(map.white()) << "\n"
     << "black even: " << yes_no(b % 2 == 0) << ", white even: " << yes_no(w % 2 == 0) << "\n"
     << "rank: " << rank(map.matrix()) << "\n";
  r.text = os.str();
  r.outputs = {{"crossings", d.crossing_count()},
               {"regions", map.region_count()},
               {"irreducible", map.irreducible()},
               {"black", labels(map.black())},
               {"white", labels(map.white())},
               {"black_count", b},
               {"white_count", w},
               {"black_even", b % 2 == 0},
               {"white_even", w % 2 == 0},
               {"rank", rank(map.matrix())},
               {"kernel_dimension", 2}};
  return r;
}

Run cmd_solve(const KnotDiagram& d, const std::string& crossings, const std::optional<std::string>& avoid) {
  const RccMap map(d);
  CrossingSet target(d.crossing_count());
  for (auto x : parse_list(crossings, 'c', d.crossing_count(), ErrorCode::UnknownCrossing)) target.toggle(x);
  Run r;
  std::ostringstream os;
  os << "target: " << format_crossings(target) << "\n";
  r.outputs["target"] = labels(target);
  if (avoid) {
    const auto [b, w] = parse_pair(*avoid, map.region_count());
    const auto s = solve_avoiding(map, target, b, w);
    os << "avoiding R" << b + 1 << ",R" << w + 1 << ": " << format_regions(s) << " (" << s.count() << " regions)\n";
    r.outputs["avoid"] = {b + 1, w + 1};
    r.outputs["solution"] = labels(s);
  } else {
    const auto sols = solve_for_crossings(map, target);
    r.outputs["solutions"] = json::array();
    for (const auto& s : sols) {
      const bool minimum = s.count() == sols[0].count();
      os << format_regions(s) << " (" << s.count() << ")" << (minimum ? " minimum" : "") << "\n";
      r.outputs["solutions"].push_back({{"regions", labels(s)}, {"size", s.count()}, {"minimum", minimum}});
    }
  }
  r.text = os.str();
  return r;
}

Run cmd_splice(const KnotDiagram& d, std::size_t crossing) {
  if (crossing == 0 || crossing > d.crossing_count())
    throw Error(ErrorCode::UnknownCrossing, "c" + std::to_string(crossing) + " of " + std::to_string(d.crossing_count()));
  const RccMap map(d);
  const auto s = splice_solution(map, crossing - 1);
  const auto sols = solve_for_crossings(map, CrossingSet(d.crossing_count(), {crossing - 1}));
  const auto it = std::find(sols.begin(), sols.end(), s);
  if (it == sols.end())
    throw Error(ErrorCode::ContractViolation, "splice set " + format_regions(s) + " is not a linear solution");
  const auto index = static_cast<std::size_t>(it - sols.begin());
  Run r;
  r.text = "c" + std::to_string(crossing) + ": " + format_regions(s) + ", linear solution " + std::to_string(index + 1) +
           " of 4\n";
  r.outputs = {{"crossing", crossing}, {"regions", labels(s)}, {"solution_index", index + 1}};
  return r;
}

json certificate_json(const UnknottingCertificate& c) {
  return {{"regions", labels(c.regions)},   {"size", c.size},
          {"changed", labels(c.changed)},   {"jones", c.jones.to_string("t")},
          {"trivial", c.trivial},           {"within_c_plus_2_half", c.within_c_plus_2_half},
          {"within_c_plus_1_half", c.within_c_plus_1_half}};
}

std::string bound_lines(const UnknottingCertificate& c) {
  return "≤(c+2)/2: " + yes_no(c.within_c_plus_2_half) + "\n≤(c+1)/2: " + yes_no(c.within_c_plus_1_half) + "\n";
}

Run cmd_ur(const KnotDiagram& d) {
  const auto res = region_unknotting_number(d);
  Run r;
  std::ostringstream os;
  os << "u_R = " << res.value << "\n"
     << "certificate: " << format_regions(res.certificate.regions) << " changes "
     << format_crossings(res.certificate.changed) << ", Jones " << res.certificate.jones.to_string("t") << "\n"
     << bound_lines(res.certificate);
  r.text = os.str();
  r.outputs = {{"crossings", d.crossing_count()}, {"u_R", res.value}, {"certificate", certificate_json(res.certificate)}};
  return r;
}

Run cmd_theorem2(const KnotDiagram& d) {
  const auto cert = theorem2_search(d);
  Run r;
  std::ostringstream os;
  json trace = json::array();
  for (const auto& st : cert.trace) {
    const auto& e = st.report;
    os << "k=" << st.k << " basepoint edge " << st.basepoint_edge + 1;
    if (st.crossing_passed) os << " passed c" << *st.crossing_passed + 1;
    os << ": " << format_regions(st.set) << " black " << e.black_in_set << "/" << e.black_total << " white "
       << e.white_in_set << "/" << e.white_total << " equilibrium " << yes_no(e.is_equilibrium) << "\n";
    json step = {{"k", st.k},
                 {"basepoint_edge", st.basepoint_edge + 1},
                 {"set", labels(st.set)},
                 {"black_in_set", e.black_in_set},
                 {"black_total", e.black_total},
                 {"white_in_set", e.white_in_set},
                 {"white_total", e.white_total},
                 {"equilibrium", e.is_equilibrium}};
    if (st.crossing_passed) step["crossing_passed"] = *st.crossing_passed + 1;
    if (st.shift) step["shift"] = labels(*st.shift);
    trace.push_back(step);
  }
  os << "route: " << cert.route;
  if (cert.steps_k) os << " (k = " << *cert.steps_k << ")";
  os << "\nresult: " << format_regions(cert.regions) << " (" << cert.size << " regions), trivial " << yes_no(cert.trivial)
     << "\n"
     << bound_lines(cert);
  r.text = os.str();
  r.outputs = {{"crossings", d.crossing_count()},
               {"route", cert.route},
               {"k", cert.steps_k ? json(*cert.steps_k) : json(nullptr)},
               {"trace", trace},
               {"certificate", certificate_json(cert)}};
  return r;
}

Run cmd_boolcheck(const KnotDiagram& d, const std::optional<std::string>& pair, const SweepOptions& opts) {
  const RccMap map(d);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (pair) {
    pairs.push_back(parse_pair(*pair, map.region_count()));
  } else {
    for (auto b : map.black().members())
      for (auto w : map.white().members()) pairs.emplace_back(b, w);
  }
  Run r;
  std::ostringstream os;
  json checks = json::array();
  bool all_ok = true;
  for (const auto& [b, w] : pairs) {
    const auto alg = build_restricted(map, b, w);
    const auto ax = verify_axioms(alg, opts);
    const auto iso = verify_isomorphism(alg, opts);
    all_ok = all_ok && ax.ok() && iso.ok();
    os << "without R" << b + 1 << ",R" << w + 1 << ": axioms " << yes_no(ax.ok()) << " (" << ax.triples_checked
       << (ax.exhaustive ? " triples, exhaustive" : " sampled triples") << "), isomorphism " << yes_no(iso.ok()) << " ("
       << iso.pairs_checked << " pairs)";
    if (ax.first_violation) os << " first violation: " << *ax.first_violation;
    if (iso.first_violation) os << " first violation: " << *iso.first_violation;
    os << "\n";
    json c = {{"black", b + 1},
              {"white", w + 1},
              {"axioms", ax.ok()},
              {"axioms_exhaustive", ax.exhaustive},
              {"triples_checked", ax.triples_checked},
              {"isomorphism", iso.ok()},
              {"bijective", iso.bijective},
              {"homomorphism", iso.homomorphism},
              {"order", iso.order},
              {"hasse", iso.hasse},
              {"pairs_checked", iso.pairs_checked}};
    if (ax.first_violation) c["axiom_violation"] = *ax.first_violation;
    if (iso.first_violation) c["isomorphism_violation"] = *iso.first_violation;
    checks.push_back(c);
  }
  os << "all hold: " << yes_no(all_ok) << "\n";
  r.text = os.str();
  r.outputs = {{"pairs", checks}, {"all_hold", all_ok}};
  return r;
}

struct Record {
  std::string command;
  std::string name;
  std::string pd;
  json outputs;
  double ms = 0;
  std::optional<std::string> error;

  json to_json() const {
    json j = {{"command", command},
              {"input", {{"name", name}, {"pd", pd}, {"hash", fnv1a(pd)}}},
              {"outputs", outputs},
              {"timing", {{"wall_ms", ms}}}};
    if (error) j["error"] = *error;
    return j;
  }
};

void write_records(const std::string& path, const std::vector<Record>& records) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write records to " + path);
  for (const auto& r : records) out << r.to_json().dump() << "\n";
}

template <class F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Every verb on one catalog entry. Failures are kept per entry.
struct CatalogRow {
  Record record;
  std::string name;
  std::size_t c = 0;
  std::string cells;
  bool bounds_ok = true;
};

std::string cell(const json& v) { return v.is_null() ? "-" : (v.is_string() ? v.get<std::string>() : v.dump()); }

CatalogRow catalog_row(const CatalogEntry& e, const SweepOptions& opts) {
  CatalogRow row;
  row.name = e.name;
  row.record.command = "catalog";
  row.record.name = e.name;
  row.record.pd = e.pd;
  json& out = row.record.outputs;
  json u = nullptr, t2 = nullptr, size = nullptr, route = nullptr, boolok = nullptr, splice_ok = nullptr;
  json b = nullptr, w = nullptr, irr = nullptr;
  row.record.ms = timed([&] {
    try {
      const auto d = entry_diagram(e);
      row.c = d.crossing_count();
      const auto reg = cmd_regions(d);
      out["regions"] = reg.outputs;
      b = reg.outputs["black_count"];
      w = reg.outputs["white_count"];
      irr = reg.outputs["irreducible"];
      if (d.crossing_count() <= kMaxExactSearchCrossings) {
        const auto ur = cmd_ur(d);
        out["ur"] = ur.outputs;
        u = ur.outputs["u_R"];
        row.bounds_ok = row.bounds_ok && ur.outputs["certificate"]["within_c_plus_1_half"].get<bool>() &&
                        ur.outputs["certificate"]["within_c_plus_2_half"].get<bool>();
        if (e.known_ur && *e.known_ur != u.get<std::size_t>())
          throw Error(ErrorCode::ContractViolation, "u_R " + u.dump() + " differs from the table value " +
                                                        std::to_string(*e.known_ur));
      }
      if (reg.outputs["irreducible"].get<bool>() && d.crossing_count() > 0) {
        json spliced = json::array();
        for (std::size_t x = 1; x <= d.crossing_count(); ++x) spliced.push_back(cmd_splice(d, x).outputs);
        out["splice"] = spliced;
        splice_ok = "yes";
        const auto th = cmd_theorem2(d);
        out["theorem2"] = th.outputs;
        size = th.outputs["certificate"]["size"];
        route = th.outputs["route"];
        t2 = th.outputs["k"];
        row.bounds_ok = row.bounds_ok && th.outputs["certificate"]["within_c_plus_1_half"].get<bool>();
        const auto bc = cmd_boolcheck(d, std::nullopt, opts);
        out["boolcheck"] = bc.outputs;
        boolok = yes_no(bc.outputs["all_hold"].get<bool>());
        row.bounds_ok = row.bounds_ok && bc.outputs["all_hold"].get<bool>();
      }
    } catch (const std::exception& ex) {
      row.record.error = ex.what();
    }
  });
  std::ostringstream os;
  os << std::left << std::setw(7) << e.name << std::right << std::setw(3) << row.c << std::setw(4) << cell(b)
     << std::setw(4) << cell(w) << std::setw(5) << (irr.is_null() ? "-" : yes_no(irr.get<bool>())) << std::setw(5)
     << cell(u) << std::setw(6) << cell(size) << "  " << std::left << std::setw(13) << cell(route) << std::right
     << std::setw(3) << cell(t2) << std::setw(8) << cell(splice_ok) << std::setw(9) << cell(boolok) << std::setw(8)
     << yes_no(row.bounds_ok && !row.record.error);
  if (row.record.error) os << "  " << *row.record.error;
  row.cells = os.str();
  return row;
}

int cmd_catalog(const std::string& path, unsigned jobs, const SweepOptions& opts, const std::string& records) {
  const auto entries = load_catalog(path);
  std::vector<CatalogRow> rows(entries.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
    for (unsigned t = 0; t < n; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) rows[i] = catalog_row(entries[i], opts);
      });
  }
  std::cout << "catalog: " << path << " (" << entries.size() << " entries)\n";
  std::cout << "name     c   B   W irr  u_R  thm2  route          k  splice  boolalg  bounds\n";
  std::size_t failures = 0;
  std::vector<Record> recs;
  for (const auto& row : rows) {
    std::cout << row.cells << "\n";
    failures += (row.record.error || !row.bounds_ok) ? 1 : 0;
    recs.push_back(row.record);
  }
  std::cout << entries.size() - failures << "/" << entries.size() << " entries passed, every bound flag "
            << (failures == 0 ? "yes" : "no") << "\n";
  write_records(records, recs);
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Region crossing change calculus on knot diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string records;
  app.add_option("--records", records, "write line-delimited JSON records to this path");

  std::optional<std::string> pd;
  std::string knot;
  std::string name;
  auto add_input = [&](CLI::App* sub) {
    auto* p = sub->add_option("--pd", pd, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
    auto* k = sub->add_option("--knot", knot, "name of a knot in the catalog");
    p->excludes(k);
    sub->add_option("--name", name, "label stored in records");
  };

  auto* regions = app.add_subcommand("regions", "regions, coloring and parity");
  add_input(regions);

  auto* solve = app.add_subcommand("solve", "region sets realizing a crossing change");
  add_input(solve);
  std::string crossings;
  std::optional<std::string> avoid;
  solve->add_option("--crossings", crossings, "crossings to change, e.g. 1,2 or c1,c2")->required();
  solve->add_option("--avoid", avoid, "black and white region to leave out, e.g. R1,R2");

  auto* splice = app.add_subcommand("splice", "region set from smoothing one crossing");
  add_input(splice);
  std::size_t crossing = 0;
  splice->add_option("--crossing", crossing, "1-based crossing")->required();

  auto* ur = app.add_subcommand("ur", "exact region unknotting number");
  add_input(ur);

  auto* theorem2 = app.add_subcommand("theorem2", "run the basepoint-shifting procedure");
  add_input(theorem2);

  SweepOptions opts;
  auto* boolcheck = app.add_subcommand("boolcheck", "check the restricted Boolean algebras");
  add_input(boolcheck);
  std::optional<std::string> pair;
  boolcheck->add_option("--pair", pair, "one black and one white region, e.g. R1,R2");
  for (auto* sub : {boolcheck}) {
    sub->add_option("--samples", opts.samples, "random triples/pairs above the exhaustive size")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opts.seed, "sampling seed");
  }

  auto* catalog = app.add_subcommand("catalog", "every verb over a catalog file");
  std::string catalog_path;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  catalog->add_option("path", catalog_path, "catalog file (default: $RCC_CATALOG or the bundled table)");
  catalog->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog->parsed()) {
      if (catalog_path.empty()) catalog_path = default_catalog_path().string();
      return cmd_catalog(catalog_path, jobs, opts, records);
    }

    if (!pd && knot.empty()) throw UsageError("one of --pd or --knot is required");
    std::string text;
    if (pd) {
      text = *pd;
      if (name.empty()) name = "pd";
    } else {
      const auto entries = load_catalog(default_catalog_path());
      const auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == knot; });
      if (it == entries.end()) throw UsageError("no knot named " + knot + " in " + default_catalog_path().string());
      text = it->pd;
      if (name.empty()) name = knot;
    }
    const KnotDiagram d = parse_pd(text);

    Record rec;
    rec.name = name;
    rec.pd = text;
    Run run;
    rec.ms = timed([&] {
      if (regions->parsed()) {
        rec.command = "regions";
        run = cmd_regions(d);
      } else if (solve->parsed()) {
        rec.command = "solve";
        run = cmd_solve(d, crossings, avoid);
      } else if (splice->parsed()) {
        rec.command = "splice";
        run = cmd_splice(d, crossing);
      } else if (ur->parsed()) {
        rec.command = "ur";
        run = cmd_ur(d);
      } else if (theorem2->parsed()) {
        rec.command = "theorem2";
        run = cmd_theorem2(d);
      } else {
        rec.command = "boolcheck";
        run = cmd_boolcheck(d, pair, opts);
      }
    });
    rec.outputs = run.outputs;
    std::cout << run.text;
    write_records(records, {rec});
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
