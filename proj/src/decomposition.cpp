#include "nsg/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>
#include <utility>

namespace nsg {

namespace {

// --- exact minimum cover ----------------------------------------------
//
// Shared by the hitting-set bound h(S) (universe = bpf indices, candidates
// = gap values) and by minimal_decomposition (universe = special gaps,
// candidates = irreducible oversemigroups). Iterative deepening on the
// cover size with a lexicographic depth-first search per level: the first
// cover found at the least feasible size is the lexicographically least
// selection of candidate indices. Pruning: a candidate must cover
// something new; uncovered elements must still be reachable from the
// remaining index range; a packing of pairwise "independent" uncovered
// elements lower-bounds the candidates still needed.

using Mask = GapTable;  // bitset over universe indices

struct CoverInstance {
  Int universe = 0;
  std::vector<Mask> covers;        // per candidate
  std::vector<Mask> element_reach; // per element: union of covers touching it
  std::vector<Int> last_candidate; // per element: max candidate index covering it
};

CoverInstance build_instance(Int universe, std::vector<Mask> covers) {
  CoverInstance inst;
  inst.universe = universe;
  inst.covers = std::move(covers);
  inst.element_reach.assign(universe, Mask(universe));
  inst.last_candidate.assign(universe, -1);
  for (std::size_t c = 0; c < inst.covers.size(); ++c) {
    for (Int e = 0; e < universe; ++e) {
      if (!inst.covers[c].test(e)) continue;
      inst.last_candidate[e] = static_cast<Int>(c);
      for (Int f = 0; f < universe; ++f)
        if (inst.covers[c].test(f)) inst.element_reach[e].set(f);
    }
  }
  return inst;
}

bool intersects(const Mask& a, const Mask& b) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    if (wa[i] & wb[i]) return true;
  return false;
}

Mask subtract(Mask a, const Mask& b) {
  for (Int e = 0; e < a.size(); ++e)
    if (b.test(e)) a.reset(e);
  return a;
}

// Greedy packing of uncovered elements no candidate can cover together.
Int packing_lower_bound(const CoverInstance& inst, const Mask& uncovered) {
  Int bound = 0;
  Mask rest = uncovered;
  for (Int e = rest.next_set(0); e >= 0; e = rest.next_set(e + 1)) {
    ++bound;
    rest = subtract(rest, inst.element_reach[e]);
  }
  return bound;
}

bool cover_dfs(const CoverInstance& inst, std::size_t start, Int budget,
               const Mask& uncovered, std::vector<Int>& chosen) {
  if (uncovered.next_set(0) < 0) return true;
  if (budget == 0) return false;
  if (packing_lower_bound(inst, uncovered) > budget) return false;
  for (Int e = uncovered.next_set(0); e >= 0; e = uncovered.next_set(e + 1))
    if (inst.last_candidate[e] < static_cast<Int>(start)) return false;
  for (std::size_t c = start; c < inst.covers.size(); ++c) {
    if (!intersects(inst.covers[c], uncovered)) continue;
    chosen.push_back(static_cast<Int>(c));
    if (cover_dfs(inst, c + 1, budget - 1, subtract(uncovered, inst.covers[c]),
                  chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

// Lexicographically least minimum cover; upper_bound must be feasible.
std::vector<Int> exact_min_cover(const CoverInstance& inst, Int upper_bound) {
  Mask all(inst.universe);
  for (Int e = 0; e < inst.universe; ++e) all.set(e);
  std::vector<Int> chosen;
  for (Int r = std::max<Int>(1, packing_lower_bound(inst, all));
       r <= upper_bound; ++r) {
    chosen.clear();
    if (cover_dfs(inst, 0, r, all, chosen)) return chosen;
  }
  throw Error(Errc::internal_verification_failed,
              "cover search exhausted its upper bound without a solution");
}

std::vector<Semigroup> sorted_components(std::vector<Semigroup> comps) {
  std::sort(comps.begin(), comps.end(), Semigroup::canonical_less);
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  return comps;
}

} // namespace

XiSet xi(const Semigroup& s, Int a) {
  if (s.is_naturals())
    throw Error(Errc::full_semigroup, "xi sets are undefined for the full semigroup");
  std::vector<Int> b = s.bpf();
  if (!std::binary_search(b.begin(), b.end(), a))
    throw Error(Errc::not_bpf_element,
                std::to_string(a) + " is not a pseudo-Frobenius number above F/2");
  XiSet result;
  result.a = a;
  // Values a + t beyond F are members of every adjoin, so the scan stops
  // at F. adjoin(0) == S, which puts a itself in the set.
  for (Int t = 0; a + t <= s.frobenius(); ++t)
    if (!s.adjoin(t).contains(a + t)) result.members.push_back(a + t);
  return result;
}

BoundsReport bounds(const Semigroup& s) {
  if (s.is_naturals())
    throw Error(Errc::full_semigroup,
                "decomposition bounds are undefined for the full semigroup");
  BoundsReport report;
  std::vector<Int> b = s.bpf();
  report.m = static_cast<Int>(b.size());
  for (Int a : b) report.xi_sets.push_back(xi(s, a));

  // Hitting set over the xi sets: candidates are the distinct values in
  // ascending order, so index-lexicographic least == value-lexicographic
  // least.
  std::vector<Int> values;
  for (const XiSet& x : report.xi_sets)
    values.insert(values.end(), x.members.begin(), x.members.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  Int universe = report.m;
  std::vector<Mask> covers;
  covers.reserve(values.size());
  for (Int v : values) {
    Mask mask(universe);
    for (Int i = 0; i < universe; ++i) {
      const std::vector<Int>& mem = report.xi_sets[i].members;
      if (std::binary_search(mem.begin(), mem.end(), v)) mask.set(i);
    }
    covers.push_back(std::move(mask));
  }
  // Feasible upper bound: each xi(a) contains a, and the a are distinct.
  std::vector<Int> chosen =
      exact_min_cover(build_instance(universe, std::move(covers)), report.m);
  report.h = static_cast<Int>(chosen.size());
  for (Int c : chosen) report.witness_values.push_back(values[c]);
  return report;
}

Decomposition constructive_decomposition(const Semigroup& s) {
  if (s.is_naturals())
    throw Error(Errc::full_semigroup, "the full semigroup has no decomposition");
  Decomposition d;
  d.method = DecompositionMethod::constructive;
  d.exact_minimum = false;
  if (s.is_irreducible()) {
    d.components = {s};
    return d;
  }
  std::vector<Semigroup> comps;
  for (Int a : s.bpf()) comps.push_back(maximal_irreducible_avoiding(s, a));
  d.components = sorted_components(std::move(comps));
  VerifyResult check = verify_decomposition(s, d.components);
  if (!check.ok)
    throw Error(Errc::internal_verification_failed,
                "constructive decomposition failed verification: " + check.reason);
  return d;
}

Decomposition minimal_decomposition(const Semigroup& s, std::uint64_t cap) {
  if (s.is_naturals())
    throw Error(Errc::full_semigroup, "the full semigroup has no decomposition");
  Decomposition d;
  d.method = DecompositionMethod::exact_cover;
  d.exact_minimum = true;
  if (s.is_irreducible()) {
    d.components = {s};
    return d;
  }

  // ∩C = S for irreducible oversemigroups C iff every special gap of S is
  // a gap of some member: minimum decomposition == minimum set cover.
  std::vector<Semigroup> pool =
      enumerate_irreducible_oversemigroups(s, cap).members;
  std::vector<Int> universe = s.special_gaps();
  Int usize = static_cast<Int>(universe.size());

  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Int> coverage(pool.size(), 0);
  std::vector<Mask> masks(pool.size(), Mask(usize));
  for (std::size_t c = 0; c < pool.size(); ++c) {
    for (Int e = 0; e < usize; ++e) {
      if (!pool[c].contains(universe[e])) {
        masks[c].set(e);
        ++coverage[c];
      }
    }
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (coverage[a] != coverage[b]) return coverage[a] > coverage[b];
    if (pool[a].frobenius() != pool[b].frobenius())
      return pool[a].frobenius() > pool[b].frobenius();
    return pool[a].member_table().lex_less(pool[b].member_table());
  });
  std::vector<Mask> covers;
  covers.reserve(order.size());
  for (std::size_t c : order) covers.push_back(std::move(masks[c]));

  Int upper = static_cast<Int>(constructive_decomposition(s).components.size());
  std::vector<Int> chosen =
      exact_min_cover(build_instance(usize, std::move(covers)), upper);

  std::vector<Semigroup> comps;
  for (Int c : chosen) comps.push_back(pool[order[c]]);
  d.components = sorted_components(std::move(comps));
  VerifyResult check = verify_decomposition(s, d.components);
  if (!check.ok)
    throw Error(Errc::internal_verification_failed,
                "minimal decomposition failed verification: " + check.reason);
  return d;
}

VerifyResult verify_decomposition(const Semigroup& s,
                                  const std::vector<Semigroup>& components) {
  if (components.empty()) return {false, "no components supplied"};
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Semigroup& c = components[i];
    if (c.is_naturals() || !c.is_irreducible())
      return {false, "component " + std::to_string(i + 1) + " is not irreducible"};
    if (!c.includes(s)) {
      Int witness = -1;
      for (Int x = 1; x <= c.frobenius(); ++x) {
        if (!c.contains(x) && s.contains(x)) {
          witness = x;
          break;
        }
      }
      return {false, "component " + std::to_string(i + 1) +
                         " does not contain the semigroup (" +
                         std::to_string(witness) + " is missing)"};
    }
  }
  Semigroup meet = components[0];
  for (std::size_t i = 1; i < components.size(); ++i)
    meet = intersect(meet, components[i]);
  if (!(meet == s)) {
    // Every component contains s, so the intersection is strictly larger.
    Int witness = -1;
    for (Int x = 1; x <= s.frobenius(); ++x) {
      if (meet.contains(x) != s.contains(x)) {
        witness = x;
        break;
      }
    }
    return {false, "intersection is strictly larger than the semigroup (" +
                       std::to_string(witness) + " is missing from the gap union)"};
  }
  return {true, ""};
}

} // namespace nsg
