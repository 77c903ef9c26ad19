#include "rcc/boolalg.hpp"

#include <bit>
#include <numeric>
#include <random>

#include "rcc/kernels.hpp"

namespace rcc {
namespace {

// Checks the five Boolean algebra conditions over elements drawn by index.
template <class Ops>
AxiomReport check_axioms(const Ops& ops, const SweepOptions& opts) {
  AxiomReport rep;
  const std::uint64_t n = ops.count();
  const auto top = ops.top();
  const auto bottom = ops.bottom();

  auto fail = [&](bool& flag, const char* what, const auto& a, const auto& b, const auto& c) {
    flag = false;
    if (!rep.first_violation)
      rep.first_violation = std::string(what) + " at a=" + ops.format(a) + " b=" + ops.format(b) + " c=" + ops.format(c);
  };
  auto check = [&](const auto& a, const auto& b, const auto& c) {
    ++rep.triples_checked;
    if (ops.join(a, b) != ops.join(b, a) || ops.meet(a, b) != ops.meet(b, a))
      fail(rep.commutative, "commutativity", a, b, c);
    if (ops.join(a, ops.join(b, c)) != ops.join(ops.join(a, b), c) ||
        ops.meet(a, ops.meet(b, c)) != ops.meet(ops.meet(a, b), c))
      fail(rep.associative, "associativity", a, b, c);
    if (ops.meet(a, ops.join(b, c)) != ops.join(ops.meet(a, b), ops.meet(a, c)) ||
        ops.join(a, ops.meet(b, c)) != ops.meet(ops.join(a, b), ops.join(a, c)))
      fail(rep.distributive, "distributivity", a, b, c);
    if (ops.join(a, bottom) != a || ops.meet(a, top) != a) fail(rep.identities, "identity elements", a, b, c);
    const auto ac = ops.complement(a);
    if (ops.join(a, ac) != top || ops.meet(a, ac) != bottom) fail(rep.complements, "complements", a, b, c);
  };

  if (n <= opts.exhaustive_max_elements) {
    rep.exhaustive = true;
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto a = ops.element(i);
      for (std::uint64_t j = 0; j < n; ++j) {
        const auto b = ops.element(j);
        for (std::uint64_t k = 0; k < n; ++k) check(a, b, ops.element(k));
      }
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (std::uint64_t t = 0; t < opts.samples; ++t) {
      const auto i = pick(rng);
      const auto j = pick(rng);
      const auto k = pick(rng);
      check(ops.element(i), ops.element(j), ops.element(k));
    }
  }
  return rep;
}

struct RestrictedOps {
  const RestrictedAlgebra& alg;
  std::uint64_t count() const { return alg.element_count(); }
  RegionSet element(std::uint64_t i) const { return alg.element(i); }
  RegionSet join(const RegionSet& a, const RegionSet& b) const { return alg.join_r(a, b); }
  RegionSet meet(const RegionSet& a, const RegionSet& b) const { return alg.meet_r(a, b); }
  RegionSet complement(const RegionSet& a) const { return alg.complement_r(a); }
  RegionSet top() const { return alg.top(); }
  RegionSet bottom() const { return alg.bottom(); }
  std::string format(const RegionSet& a) const { return format_regions(a); }
};

struct PowerSetOps {
  std::size_t crossings;
  std::uint64_t count() const { return std::uint64_t{1} << crossings; }
  CrossingSet element(std::uint64_t i) const { return CrossingSet::from_mask(crossings, i); }
  CrossingSet join(const CrossingSet& a, const CrossingSet& b) const { return a | b; }
  CrossingSet meet(const CrossingSet& a, const CrossingSet& b) const { return a & b; }
  CrossingSet complement(const CrossingSet& a) const { return a.complement(); }
  CrossingSet top() const { return CrossingSet::full(crossings); }
  CrossingSet bottom() const { return CrossingSet(crossings); }
  std::string format(const CrossingSet& a) const { return format_crossings(a); }
};

}  // namespace

RestrictedAlgebra build_restricted(const RccMap& map, std::size_t b, std::size_t w) {
  for (std::size_t r : {b, w})
    if (r >= map.region_count())
      throw Error(ErrorCode::UnknownRegion, "region " + std::to_string(r + 1) + " of " + std::to_string(map.region_count()));
  if (!map.irreducible()) throw Error(ErrorCode::ReducibleDiagram, "restricted algebra needs an irreducible projection");
  if (!map.coloring().is_black(b) || map.coloring().is_black(w))
    throw Error(ErrorCode::NotBlackWhitePair,
                "R" + std::to_string(b + 1) + " must be black and R" + std::to_string(w + 1) + " white");

  RestrictedAlgebra alg;
  alg.map_ = &map;
  alg.b_ = b;
  alg.w_ = w;
  for (std::size_t j = 0; j < map.region_count(); ++j)
    if (j != b && j != w) alg.members_.push_back(j);

  const std::array<std::size_t, 2> cols{b, w};
  Gf2Matrix inverse;
  try {
    inverse = invert_square(delete_columns(map.matrix(), cols));
  } catch (const Error& e) {
    throw Error(ErrorCode::ContractViolation, std::string("irreducible projection with ") + e.what());
  }
  const std::size_t n = map.crossing_count();
  alg.inverse_columns_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (inverse.get(k, i)) alg.inverse_columns_[i] |= std::uint64_t{1} << alg.members_[k];
  alg.top_ = alg.phi_inverse(CrossingSet::full(n));
  return alg;
}

RegionSet RestrictedAlgebra::universe() const { return RegionSet::from_indices(map_->region_count(), members_); }

void RestrictedAlgebra::require_in_s(const RegionSet& a) const {
  if (a.universe() != map_->region_count() || a.contains(b_) || a.contains(w_))
    throw Error(ErrorCode::UnknownRegion, format_regions(a) + " is not a subset of S");
}

CrossingSet RestrictedAlgebra::phi(const RegionSet& a) const {
  require_in_s(a);
  return map_->phi(a);
}

RegionSet RestrictedAlgebra::phi_inverse(const CrossingSet& x) const {
  if (x.universe() != map_->crossing_count()) throw Error(ErrorCode::UnknownCrossing, "crossing set of the wrong size");
  std::uint64_t acc = 0;
  for (std::uint64_t m = x.mask(); m != 0; m &= m - 1) acc ^= inverse_columns_[static_cast<std::size_t>(std::countr_zero(m))];
  return RegionSet::from_mask(map_->region_count(), acc);
}

RegionSet RestrictedAlgebra::join_r(const RegionSet& a, const RegionSet& b) const { return phi_inverse(phi(a) | phi(b)); }

RegionSet RestrictedAlgebra::meet_r(const RegionSet& a, const RegionSet& b) const { return phi_inverse(phi(a) & phi(b)); }

RegionSet RestrictedAlgebra::complement_r(const RegionSet& a) const { return phi_inverse(phi(a).complement()); }

bool RestrictedAlgebra::leq_r(const RegionSet& a, const RegionSet& b) const { return meet_r(a, complement_r(b)).empty(); }

RegionSet RestrictedAlgebra::element(std::uint64_t index) const {
  RegionSet s(map_->region_count());
  for (std::size_t j = 0; j < members_.size(); ++j)
    if ((index >> j) & 1U) s.insert(members_[j]);
  return s;
}

AxiomReport verify_axioms(const RestrictedAlgebra& alg, const SweepOptions& opts) {
  return check_axioms(RestrictedOps{alg}, opts);
}

AxiomReport verify_power_set_axioms(std::size_t crossings, const SweepOptions& opts) {
  return check_axioms(PowerSetOps{crossings}, opts);
}

IsomorphismReport verify_isomorphism(const RestrictedAlgebra& alg, const SweepOptions& opts) {
  IsomorphismReport rep;
  const RccMap& map = alg.map();
  const std::size_t c = map.crossing_count();
  const std::uint64_t n = alg.element_count();
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (!rep.first_violation) rep.first_violation = what;
  };

  // Both composites over every element, batched: phi^-1 of all of P(C),
  // then phi of the results.
  {
    std::vector<std::uint64_t> crossing_sets(n);
    std::iota(crossing_sets.begin(), crossing_sets.end(), std::uint64_t{0});
    std::vector<std::uint64_t> pre(n), back(n);
    std::vector<std::uint64_t> inverse_columns(c);
    for (std::size_t i = 0; i < c; ++i) {
      CrossingSet one(c);
      one.insert(i);
      inverse_columns[i] = alg.phi_inverse(one).mask();
    }
    kernels::xor_combine(inverse_columns, crossing_sets, pre);
    map.phi_masks(pre, back);
    const std::uint64_t outside = (std::uint64_t{1} << alg.black_region()) | (std::uint64_t{1} << alg.white_region());
    for (std::uint64_t x = 0; x < n; ++x) {
      if (back[x] != x || (pre[x] & outside) != 0) {
        fail(rep.bijective, "phi(phi^-1(x)) != x for x=" + format_crossings(CrossingSet::from_mask(c, x)));
        break;
      }
    }
    for (std::uint64_t i = 0; i < n; ++i) {
      const RegionSet a = alg.element(i);
      if (alg.phi_inverse(map.phi(a)) != a) {
        fail(rep.bijective, "phi^-1(phi(a)) != a for a=" + format_regions(a));
        break;
      }
    }
  }

  auto check_pair = [&](const RegionSet& a, const RegionSet& b) {
    ++rep.pairs_checked;
    const CrossingSet pa = map.phi(a);
    const CrossingSet pb = map.phi(b);
    if (map.phi(alg.join_r(a, b)) != (pa | pb) || map.phi(alg.meet_r(a, b)) != (pa & pb) ||
        map.phi(alg.complement_r(a)) != pa.complement())
      fail(rep.homomorphism, "phi does not preserve the operations at a=" + format_regions(a) + " b=" + format_regions(b));
    if (alg.leq_r(a, b) != pa.is_subset_of(pb))
      fail(rep.order, "order mismatch at a=" + format_regions(a) + " b=" + format_regions(b));
  };

  if (n <= opts.exhaustive_pair_max_elements) {
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j) check_pair(alg.element(i), alg.element(j));
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (std::uint64_t t = 0; t < opts.samples; ++t) check_pair(alg.element(pick(rng)), alg.element(pick(rng)));
  }

  if (n <= opts.exhaustive_max_elements) {
    rep.exhaustive = true;
    // Hasse diagrams: b covers a when a < b with nothing strictly between.
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    std::vector<std::vector<bool>> sub(n, std::vector<bool>(n));
    std::vector<CrossingSet> image(n);
    for (std::uint64_t i = 0; i < n; ++i) image[i] = map.phi(alg.element(i));
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j) {
        leq[i][j] = alg.leq_r(alg.element(i), alg.element(j));
        sub[i][j] = image[i].is_subset_of(image[j]);
      }
    auto covers = [&](const auto& rel, std::uint64_t i, std::uint64_t j) {
      if (i == j || !rel[i][j]) return false;
      for (std::uint64_t z = 0; z < n; ++z)
        if (z != i && z != j && rel[i][z] && rel[z][j]) return false;
      return true;
    };
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j)
        if (covers(leq, i, j) != covers(sub, i, j))
          fail(rep.hasse, "covering relation differs at a=" + format_regions(alg.element(i)) +
                              " b=" + format_regions(alg.element(j)));
  }
  return rep;
}

}  // namespace rcc
