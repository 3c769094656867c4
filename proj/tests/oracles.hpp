#pragma once

// Independent reference algorithms used only by tests. Each deliberately
// recomputes results along a different path than the library: membership
// by dynamic programming over generators, oversemigroups by filtering gap
// subsets, minimal decompositions by trying every r-subset of the pool
// (no set-cover reduction), and h by brute-force product minimization.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "nsg/decomposition.hpp"
#include "nsg/semigroup.hpp"

namespace oracle {

using nsg::Int;

// x is representable as a nonnegative integer combination of gens.
inline std::vector<char> representable_table(const std::vector<Int>& gens,
                                             Int limit) {
  std::vector<char> rep(static_cast<std::size_t>(limit) + 1, 0);
  rep[0] = 1;
  for (Int x = 1; x <= limit; ++x) {
    for (Int g : gens) {
      if (g >= 1 && g <= x && rep[x - g]) {
        rep[x] = 1;
        break;
      }
    }
  }
  return rep;
}

// Is the complement of this gap set closed under addition?
inline bool complement_closed(const std::vector<Int>& gapset) {
  if (gapset.empty()) return true;
  Int f = *std::max_element(gapset.begin(), gapset.end());
  std::vector<char> gap(static_cast<std::size_t>(f) + 1, 0);
  for (Int x : gapset) gap[x] = 1;
  for (Int x = 1; x + x <= f; ++x) {
    if (gap[x]) continue;
    for (Int y = x; x + y <= f; ++y) {
      if (gap[y]) continue;
      if (gap[x + y]) return false;
    }
  }
  return true;
}

// Every oversemigroup of s, as the set of its gap lists: filter all
// subsets of gaps(s) whose complement is closed.
inline std::set<std::vector<Int>> oversemigroup_gapsets(
    const nsg::Semigroup& s) {
  std::vector<Int> gaps = s.gaps();
  std::set<std::vector<Int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps.size());
       ++mask) {
    std::vector<Int> sub;
    for (std::size_t i = 0; i < gaps.size(); ++i)
      if ((mask >> i) & 1) sub.push_back(gaps[i]);
    if (complement_closed(sub)) out.insert(std::move(sub));
  }
  return out;
}

// Pseudo-Frobenius numbers by the definition: gaps x with x + s a member
// for every nonzero member s (members above F are automatic).
inline std::vector<Int> pf_definitional(const nsg::Semigroup& s) {
  std::vector<Int> out;
  for (Int x : s.gaps()) {
    bool ok = true;
    for (Int t = 1; t <= s.frobenius() && ok; ++t)
      if (s.contains(t) && !s.contains(x + t)) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

// Smallest r such that some r-subset of pool intersects to exactly s;
// direct element-by-element intersection, no cover criterion.
inline Int min_decomposition_size_subsets(
    const nsg::Semigroup& s, const std::vector<nsg::Semigroup>& pool) {
  Int f = s.frobenius();
  auto intersects_to_s = [&](const std::vector<std::size_t>& idx) {
    for (Int x = 0; x <= f + 1; ++x) {
      bool in_all = true;
      for (std::size_t i : idx) {
        if (!pool[i].contains(x)) {
          in_all = false;
          break;
        }
      }
      if (in_all != s.contains(x)) return false;
    }
    return true;
  };
  std::vector<std::size_t> idx;
  auto search = [&](auto&& self, std::size_t start, Int budget) -> bool {
    if (budget == 0) return intersects_to_s(idx);
    for (std::size_t c = start; c < pool.size(); ++c) {
      idx.push_back(c);
      if (self(self, c + 1, budget - 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  for (Int r = 1; r <= static_cast<Int>(pool.size()); ++r) {
    idx.clear();
    if (search(search, 0, r)) return r;
  }
  return -1;
}

// h by brute force: minimize |{b_1, ..., b_m}| over all tuples with
// b_i in xi_sets[i]. Returns -1 when the tuple count exceeds the limit.
inline Int min_hitting_bruteforce(const std::vector<nsg::XiSet>& xi_sets,
                                  std::uint64_t product_limit = 1000000) {
  std::uint64_t tuples = 1;
  for (const nsg::XiSet& x : xi_sets) {
    tuples *= x.members.size();
    if (tuples == 0 || tuples > product_limit) return -1;
  }
  std::size_t m = xi_sets.size();
  std::vector<std::size_t> pick(m, 0);
  Int best = static_cast<Int>(m);
  while (true) {
    std::set<Int> distinct;
    for (std::size_t i = 0; i < m; ++i)
      distinct.insert(xi_sets[i].members[pick[i]]);
    best = std::min<Int>(best, static_cast<Int>(distinct.size()));
    std::size_t i = 0;
    while (i < m && ++pick[i] == xi_sets[i].members.size()) pick[i++] = 0;
    if (i == m) break;
  }
  return best;
}

} // namespace oracle
