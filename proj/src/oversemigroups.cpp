#include "nsg/oversemigroups.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>

namespace nsg {

namespace {

// Special gaps straight off a membership table, ascending. Avoids
// materializing generators, which the breadth-first walk below cannot
// afford per node: x is special iff x is a gap, 2x is a member, and no
// member s in [1, F-x] has x + s missing.
std::vector<Int> special_gaps_of_table(const GapTable& table) {
  Int frobenius = table.size() - 2;
  std::vector<Int> out;
  for (Int x = 1; x <= frobenius; ++x) {
    if (table.test(x)) continue;
    if (2 * x <= frobenius && !table.test(2 * x)) continue;
    if (first_shift_violation(table, x, 1, frobenius - x) >= 0) continue;
    out.push_back(x);
  }
  return out;
}

// The table of S ∪ {x} for a special gap x of S, re-trimmed to span
// exactly 0..F'+1. Filling a special gap needs no closure pass: x + s is
// already a member for every nonzero member s, and 2x is a member.
GapTable fill_special_gap(const GapTable& table, Int x) {
  GapTable child = table;
  child.set(x);
  if (x == table.size() - 2) {
    Int frobenius = child.last_zero();
    child = child.prefix(frobenius + 2);
  }
  return child;
}

bool table_canonical_less(const GapTable& a, const GapTable& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.lex_less(b);
}

// Breadth-first walk of the oversemigroup lattice over unitary
// extensions, deduplicating via a hash set of indices into the discovery
// arena. Discovery order is deterministic: parents in discovery order,
// children in ascending special-gap order. Returns (tables, truncated).
std::pair<std::vector<GapTable>, bool> walk_oversemigroups(
    const GapTable& start, std::uint64_t cap) {
  std::vector<GapTable> arena;
  arena.reserve(std::min<std::uint64_t>(cap, 4096));
  struct IndexHash {
    const std::vector<GapTable>* arena;
    std::size_t operator()(std::uint32_t i) const { return (*arena)[i].hash(); }
  };
  struct IndexEq {
    const std::vector<GapTable>* arena;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      return (*arena)[a] == (*arena)[b];
    }
  };
  std::unordered_set<std::uint32_t, IndexHash, IndexEq> seen(
      64, IndexHash{&arena}, IndexEq{&arena});

  arena.push_back(start);
  seen.insert(0);
  bool truncated = false;
  for (std::size_t head = 0; head < arena.size() && !truncated; ++head) {
    // arena[head] may reallocate while children are appended; take the
    // special gaps first, then work from a copy-free index.
    std::vector<Int> specials = special_gaps_of_table(arena[head]);
    for (Int x : specials) {
      GapTable child = fill_special_gap(arena[head], x);
      arena.push_back(std::move(child));
      std::uint32_t idx = static_cast<std::uint32_t>(arena.size() - 1);
      if (!seen.insert(idx).second) {
        arena.pop_back();
        continue;
      }
      if (arena.size() > cap) {
        seen.erase(idx);
        arena.pop_back();
        truncated = true;
        break;
      }
    }
  }
  return {std::move(arena), truncated};
}

} // namespace

std::vector<Semigroup> unitary_extensions(const Semigroup& s) {
  if (s.is_naturals()) return {};
  std::vector<Semigroup> out;
  for (Int x : s.special_gaps())
    out.push_back(Semigroup::from_member_table(
        fill_special_gap(s.member_table(), x)));
  return out;
}

OversemigroupSet enumerate_oversemigroups(const Semigroup& s,
                                          std::uint64_t cap, OnCap on_cap) {
  if (cap == 0)
    throw Error(Errc::invalid_input, "enumeration cap must be >= 1");
  auto [tables, truncated] = walk_oversemigroups(s.member_table(), cap);
  if (truncated && on_cap == OnCap::fail)
    throw CapExceeded(tables.size(),
                      "oversemigroup enumeration stopped at " +
                          std::to_string(tables.size()) +
                          " semigroups (cap " + std::to_string(cap) + ")");
  std::sort(tables.begin(), tables.end(), table_canonical_less);
  OversemigroupSet result{s, {}, truncated, cap};
  result.members.reserve(tables.size());
  for (GapTable& t : tables)
    result.members.push_back(Semigroup::from_member_table(std::move(t)));
  return result;
}

OversemigroupSet enumerate_irreducible_oversemigroups(const Semigroup& s,
                                                      std::uint64_t cap,
                                                      OnCap on_cap) {
  OversemigroupSet all = enumerate_oversemigroups(s, cap, on_cap);
  OversemigroupSet result{all.base, {}, all.truncated, all.cap};
  for (Semigroup& m : all.members)
    if (!m.is_naturals() && m.is_irreducible())
      result.members.push_back(std::move(m));
  return result;
}

Semigroup maximal_irreducible_avoiding(const Semigroup& s, Int x) {
  if (x < 1 || s.contains(x))
    throw Error(Errc::not_a_gap,
                std::to_string(x) + " is not a gap of the semigroup");
  Semigroup t = s;
  while (true) {
    std::vector<Int> specials = t.special_gaps();
    assert(!specials.empty());
    if (specials.size() == 1 && specials[0] == x) return t;
    // Largest special gap other than x; adjoining it keeps x a gap.
    Int pick = -1;
    for (std::size_t i = specials.size(); i-- > 0;) {
      if (specials[i] != x) {
        pick = specials[i];
        break;
      }
    }
    assert(pick > 0);
    t = t.adjoin(pick);
    assert(!t.contains(x));
  }
}

} // namespace nsg
