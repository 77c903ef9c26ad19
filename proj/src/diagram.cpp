#include "rcc/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>

namespace rcc {
namespace {

constexpr int kHead = 1;
constexpr int kTail = -1;

int opposite(int slot) { return (slot + 2) % 4; }

struct RawCrossing {
  std::array<long, 4> labels{};
  std::string token;
};

std::string label_name(long label) { return "edge label " + std::to_string(label); }

// Orients a raw PD code and renumbers its labels along the traversal.
KnotDiagram orient_and_normalize(const std::vector<RawCrossing>& raw) {
  const std::size_t n = raw.size();
  std::map<long, std::vector<EdgeEnd>> occurrences;
  for (std::size_t x = 0; x < n; ++x)
    for (int s = 0; s < 4; ++s) occurrences[raw[x].labels[s]].push_back({static_cast<int>(x), s});
  for (const auto& [label, ends] : occurrences)
    if (ends.size() != 2)
      throw Error(ErrorCode::EdgeLabelNotTwice, label_name(label) + " appears " + std::to_string(ends.size()) + " times");

  // +1: the edge enters the crossing at this slot, -1: it leaves.
  std::vector<std::array<int, 4>> dir(n, std::array<int, 4>{kHead, 0, kTail, 0});
  std::vector<std::optional<bool>> positive(n);

  auto set_over = [&](int x, int slot, int d) {
    // over-strand entering at slot 3 means positive
    const bool pos = (slot == 3) == (d == kHead);
    if (positive[x] && *positive[x] != pos)
      throw Error(ErrorCode::MalformedToken, raw[static_cast<std::size_t>(x)].token + " has no consistent orientation");
    positive[x] = pos;
    dir[x][slot] = d;
    dir[x][opposite(slot)] = -d;
  };

  for (;;) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& [label, ends] : occurrences) {
        const EdgeEnd a = ends[0];
        const EdgeEnd b = ends[1];
        const int da = dir[a.crossing][a.slot];
        const int db = dir[b.crossing][b.slot];
        if (da != 0 && db != 0) {
          if (da == db)
            throw Error(ErrorCode::MalformedToken,
                        raw[static_cast<std::size_t>(b.crossing)].token + ": " + label_name(label) +
                            " would be entered (or left) at both ends");
          continue;
        }
        if (da != 0) {
          set_over(b.crossing, b.slot, -da);
          progress = true;
        } else if (db != 0) {
          set_over(a.crossing, a.slot, -db);
          progress = true;
        }
      }
    }
    auto it = std::find_if(positive.begin(), positive.end(), [](const auto& p) { return !p.has_value(); });
    if (it == positive.end()) break;
    // only reachable when some strand never passes under; fixed up arbitrarily
    // and rejected below as a second component
    set_over(static_cast<int>(it - positive.begin()), 1, kHead);
  }

  // successor along the orientation
  std::map<long, long> next;
  for (const auto& [label, ends] : occurrences) {
    const EdgeEnd h = dir[ends[0].crossing][ends[0].slot] == kHead ? ends[0] : ends[1];
    next[label] = raw[static_cast<std::size_t>(h.crossing)].labels[opposite(h.slot)];
  }

  std::map<long, int> renumber;
  long cur = occurrences.begin()->first;
  while (!renumber.contains(cur)) {
    renumber.emplace(cur, static_cast<int>(renumber.size()));
    cur = next.at(cur);
  }
  if (renumber.size() != occurrences.size()) {
    for (const auto& [label, ends] : occurrences)
      if (!renumber.contains(label))
        throw Error(ErrorCode::MultipleComponents, label_name(label) + " is not on the component through the smallest label");
  }

  std::vector<Crossing> crossings(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (int s = 0; s < 4; ++s) crossings[x].edges[s] = renumber.at(raw[x].labels[s]);
    crossings[x].positive = *positive[x];
  }
  return KnotDiagram(std::move(crossings));
}

}  // namespace

KnotDiagram::KnotDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  const int edges = static_cast<int>(edge_count());
  heads_.assign(edge_count(), EdgeEnd{-1, -1});
  tails_.assign(edge_count(), EdgeEnd{-1, -1});
  for (std::size_t x = 0; x < crossings_.size(); ++x) {
    const Crossing& cr = crossings_[x];
    for (int s = 0; s < 4; ++s) {
      const int e = cr.edges[s];
      if (e < 0 || e >= edges)
        throw Error(ErrorCode::ContractViolation, "edge " + std::to_string(e) + " outside 0.." + std::to_string(edges - 1));
      auto& slot = cr.is_incoming(s) ? heads_[e] : tails_[e];
      if (slot.crossing >= 0)
        throw Error(ErrorCode::ContractViolation, "edge " + std::to_string(e) + " has two heads or two tails");
      slot = {static_cast<int>(x), s};
    }
  }
  for (int e = 0; e < edges; ++e) {
    const EdgeEnd h = heads_[e];
    const EdgeEnd t = tails_[(e + 1) % edges];
    if (t.crossing != h.crossing || t.slot != opposite(h.slot))
      throw Error(ErrorCode::ContractViolation, "edge labels are not in traversal order at edge " + std::to_string(e));
  }
}

EdgeEnd KnotDiagram::other_end(EdgeEnd end) const {
  const Crossing& cr = crossings_.at(static_cast<std::size_t>(end.crossing));
  const int e = cr.edges[static_cast<std::size_t>(end.slot)];
  return cr.is_incoming(end.slot) ? tails_[static_cast<std::size_t>(e)] : heads_[static_cast<std::size_t>(e)];
}

int KnotDiagram::writhe() const noexcept {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign();
  return w;
}

std::string KnotDiagram::to_pd() const {
  std::ostringstream os;
  for (std::size_t x = 0; x < crossings_.size(); ++x) {
    const auto& e = crossings_[x].edges;
    if (x > 0) os << ' ';
    os << "X[" << e[0] + 1 << ',' << e[1] + 1 << ',' << e[2] + 1 << ',' << e[3] + 1 << ']';
  }
  return os.str();
}

KnotDiagram parse_pd(std::string_view text) {
  static const std::regex token_re(R"(X\[(\d+),(\d+),(\d+),(\d+)\])");
  std::vector<RawCrossing> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::smatch m;
    if (!std::regex_match(token, m, token_re)) throw Error(ErrorCode::MalformedToken, "'" + token + "'");
    RawCrossing rc;
    rc.token = token;
    for (int i = 0; i < 4; ++i) {
      const std::string digits = m[i + 1].str();
      if (digits.size() > 9) throw Error(ErrorCode::MalformedToken, "'" + token + "': label too large");
      rc.labels[i] = std::stol(digits);
      if (rc.labels[i] <= 0) throw Error(ErrorCode::MalformedToken, "'" + token + "': labels must be positive");
    }
    raw.push_back(std::move(rc));
  }
  if (raw.empty()) return KnotDiagram{};
  return orient_and_normalize(raw);
}

RegionMap::RegionMap(std::vector<std::vector<Corner>> boundaries, std::vector<std::array<int, 4>> corner_region,
                     std::vector<std::array<int, 2>> edge_sides)
    : boundaries_(std::move(boundaries)), corner_region_(std::move(corner_region)), edge_sides_(std::move(edge_sides)) {}

int RegionMap::multiplicity(std::size_t crossing, std::size_t region) const {
  const auto& around = corner_region_.at(crossing);
  return static_cast<int>(std::count(around.begin(), around.end(), static_cast<int>(region)));
}

CrossingSet RegionMap::crossings_of(std::size_t region) const {
  CrossingSet s(crossing_count());
  for (const Corner& c : boundaries_.at(region)) s.insert(static_cast<std::size_t>(c.crossing));
  return s;
}

RegionMap faces(const KnotDiagram& d) {
  const std::size_t n = d.crossing_count();
  if (n == 0) return RegionMap({{}, {}}, {}, {});

  // Corner (x, s) is followed by the corner at the far end of slot s+1:
  // walking that way keeps the face on the right.
  auto next_corner = [&](Corner c) {
    const EdgeEnd far = d.other_end({c.crossing, (c.slot + 1) % 4});
    return Corner{far.crossing, far.slot};
  };

  std::vector<std::array<int, 4>> corner_region(n, std::array<int, 4>{-1, -1, -1, -1});
  std::vector<std::vector<Corner>> boundaries;
  auto region_of = [&](Corner start) {
    int& slot = corner_region[static_cast<std::size_t>(start.crossing)][static_cast<std::size_t>(start.slot)];
    if (slot >= 0) return slot;
    const int id = static_cast<int>(boundaries.size());
    boundaries.emplace_back();
    Corner c = start;
    do {
      corner_region[static_cast<std::size_t>(c.crossing)][static_cast<std::size_t>(c.slot)] = id;
      boundaries.back().push_back(c);
      c = next_corner(c);
    } while (!(c == start));
    return id;
  };

  std::vector<std::array<int, 2>> sides(d.edge_count());
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    const EdgeEnd h = d.head(static_cast<int>(e));
    sides[e][0] = region_of({h.crossing, (h.slot + 3) % 4});
    sides[e][1] = region_of({h.crossing, h.slot});
  }
  return RegionMap(std::move(boundaries), std::move(corner_region), std::move(sides));
}

bool is_irreducible(const KnotDiagram& d, const RegionMap& rm) {
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    auto around = rm.regions_around(x);
    std::sort(around.begin(), around.end());
    if (std::adjacent_find(around.begin(), around.end()) != around.end()) return false;
  }
  return true;
}

Coloring checkerboard(const RegionMap& rm) {
  const std::size_t r = rm.region_count();
  Coloring col{RegionSet(r), RegionSet(r)};
  if (rm.edge_count() == 0) {
    col.black.insert(0);
    col.white.insert(1);
    return col;
  }
  std::vector<std::vector<int>> adj(r);
  for (std::size_t e = 0; e < rm.edge_count(); ++e) {
    const int a = rm.left_of(static_cast<int>(e));
    const int b = rm.right_of(static_cast<int>(e));
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> color(r, -1);
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (color[static_cast<std::size_t>(v)] < 0) {
        color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
        stack.push_back(v);
      } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
        throw Error(ErrorCode::ContractViolation, "projection has no checkerboard coloring");
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) (color[i] == 0 ? col.black : col.white).insert(i);
  return col;
}

KnotDiagram rational_diagram(std::span<const int> seq) {
  if (seq.empty()) throw Error(ErrorCode::MalformedToken, "empty twist sequence");
  for (int a : seq)
    if (a <= 0) throw Error(ErrorCode::MalformedToken, "twist counts must be positive");

  // Unoriented tangle assembly. Crossing slots are counterclockwise and the
  // strands run slot 0 - slot 2 and slot 1 - slot 3.
  int next_id = 0;
  auto fresh = [&] { return next_id++; };
  std::vector<std::array<int, 4>> slots;
  const int top = fresh();
  const int bottom = fresh();
  int nw = top, ne = top, sw = bottom, se = bottom;  // 0-tangle: two horizontal arcs

  bool horizontal = true;
  for (int twists : seq) {
    for (int i = 0; i < twists; ++i) {
      const int a = fresh();
      const int b = fresh();
      if (horizontal) {
        // corners: lower-left = old se, lower-right = new se, upper-right = new ne, upper-left = old ne
        slots.push_back({se, a, b, ne});
        se = a;
        ne = b;
      } else {
        // corners: lower-left = new sw, lower-right = new se, upper-right = old se, upper-left = old sw
        slots.push_back({a, b, se, sw});
        sw = a;
        se = b;
      }
    }
    horizontal = !horizontal;
  }
  const bool last_horizontal = !horizontal;

  std::vector<int> parent(static_cast<std::size_t>(next_id));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  if (last_horizontal) {
    unite(nw, ne);
    unite(sw, se);
  } else {
    unite(nw, sw);
    unite(ne, se);
  }

  std::map<int, std::vector<EdgeEnd>> ends;
  for (std::size_t x = 0; x < slots.size(); ++x)
    for (int s = 0; s < 4; ++s) ends[find(slots[x][s])].push_back({static_cast<int>(x), s});
  auto far_end = [&](EdgeEnd at) {
    const auto& e = ends.at(find(slots[static_cast<std::size_t>(at.crossing)][static_cast<std::size_t>(at.slot)]));
    return e[0] == at ? e[1] : e[0];
  };

  // Walk the closed curve, alternating under/over; arrival k comes in on edge k.
  const std::size_t n = slots.size();
  std::vector<EdgeEnd> arrivals;
  EdgeEnd at{0, 0};
  do {
    arrivals.push_back(at);
    at = far_end({at.crossing, opposite(at.slot)});
  } while (!(at == EdgeEnd{0, 0}) && arrivals.size() <= 2 * n);
  if (arrivals.size() != 2 * n) throw Error(ErrorCode::NotAKnot, "closure of the twist sequence has two components");

  const int edges = static_cast<int>(2 * n);
  std::vector<int> under_arrival(n, -1), over_arrival(n, -1);
  for (int k = 0; k < edges; ++k) {
    const auto x = static_cast<std::size_t>(arrivals[static_cast<std::size_t>(k)].crossing);
    (k % 2 == 0 ? under_arrival : over_arrival)[x] = k;
  }
  std::vector<Crossing> crossings(n);
  for (std::size_t x = 0; x < n; ++x) {
    const int ku = under_arrival[x];
    const int ko = over_arrival[x];
    if (ku < 0 || ko < 0) throw Error(ErrorCode::ContractViolation, "alternating assignment failed");
    const int su = arrivals[static_cast<std::size_t>(ku)].slot;
    const int so = arrivals[static_cast<std::size_t>(ko)].slot;
    Crossing& cr = crossings[x];
    cr.edges[0] = ku;
    cr.edges[2] = (ku + 1) % edges;
    cr.positive = (so - su + 4) % 4 == 3;
    cr.edges[static_cast<std::size_t>((so - su + 4) % 4)] = ko;
    cr.edges[static_cast<std::size_t>((so - su + 6) % 4)] = (ko + 1) % edges;
  }
  return KnotDiagram(std::move(crossings));
}

KnotDiagram apply_crossing_changes(const KnotDiagram& d, const CrossingSet& s) {
  if (s.universe() != d.crossing_count())
    throw Error(ErrorCode::UnknownCrossing, "crossing set over " + std::to_string(s.universe()) +
                                                " crossings applied to a diagram with " +
                                                std::to_string(d.crossing_count()));
  std::vector<Crossing> out(d.crossings().begin(), d.crossings().end());
  for (std::size_t x : s.members()) {
    Crossing& cr = out[x];
    // the old over-strand becomes the under-strand; restart at its incoming slot
    const int start = cr.over_in_slot();
    std::array<int, 4> rotated{};
    for (int j = 0; j < 4; ++j) rotated[static_cast<std::size_t>(j)] = cr.edges[static_cast<std::size_t>((start + j) % 4)];
    cr.edges = rotated;
    cr.positive = !cr.positive;
  }
  return KnotDiagram(std::move(out));
}

KnotDiagram add_kink(const KnotDiagram& d, int edge) {
  if (d.crossing_count() == 0) {
    if (edge != 0) throw Error(ErrorCode::ContractViolation, "the round diagram has a single edge 0");
    return KnotDiagram({Crossing{{0, 1, 1, 0}, false}});
  }
  if (edge < 0 || edge >= static_cast<int>(d.edge_count()))
    throw Error(ErrorCode::ContractViolation, "edge " + std::to_string(edge) + " out of range");
  // edge keeps its label up to the curl, the loop is edge+1, and the
  // remainder of the old edge becomes edge+2
  auto shift = [&](int e) { return e > edge ? e + 2 : e; };
  std::vector<Crossing> out;
  out.reserve(d.crossing_count() + 1);
  const EdgeEnd h = d.head(edge);
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    Crossing cr = d.crossing(x);
    for (int s = 0; s < 4; ++s) cr.edges[static_cast<std::size_t>(s)] = shift(cr.edges[static_cast<std::size_t>(s)]);
    if (static_cast<int>(x) == h.crossing) cr.edges[static_cast<std::size_t>(h.slot)] = edge + 2;
    out.push_back(cr);
  }
  out.push_back(Crossing{{edge, edge + 1, edge + 1, edge + 2}, false});
  return KnotDiagram(std::move(out));
}

}  // namespace rcc
