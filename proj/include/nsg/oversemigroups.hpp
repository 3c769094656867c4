#pragma once

#include <cstdint>
#include <vector>

#include "nsg/semigroup.hpp"
#include "nsg/types.hpp"

namespace nsg {

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

enum class OnCap { fail, truncate };

struct OversemigroupSet {
  Semigroup base;
  // Sorted by (Frobenius number, membership table); N sorts first.
  std::vector<Semigroup> members;
  bool truncated = false;
  std::uint64_t cap = 0;
};

// The semigroups S ∪ {x} for each special gap x of S, in ascending order
// of x. Empty for N. Every strict oversemigroup T of S satisfies
// max(T \ S) ∈ special_gaps(S), so iterating these one-element extensions
// reaches every oversemigroup.
std::vector<Semigroup> unitary_extensions(const Semigroup& s);

// All numerical semigroups containing s (s itself and N included),
// breadth-first over unitary extensions with deduplication. Stops at cap
// distinct semigroups: OnCap::fail raises CapExceeded (carrying the
// partial count), OnCap::truncate returns the first cap discovered, with
// truncated = true. Throws invalid_input if cap == 0.
OversemigroupSet enumerate_oversemigroups(
    const Semigroup& s, std::uint64_t cap = kDefaultEnumerationCap,
    OnCap on_cap = OnCap::fail);

// The irreducible members of enumerate_oversemigroups(s, ...). N is not
// counted as irreducible here (it decomposes nothing). The cap applies to
// the oversemigroup walk, not to the filtered result.
OversemigroupSet enumerate_irreducible_oversemigroups(
    const Semigroup& s, std::uint64_t cap = kDefaultEnumerationCap,
    OnCap on_cap = OnCap::fail);

// A maximal oversemigroup of s among those avoiding the gap x (maximal
// elements need not be unique); it is irreducible with Frobenius number
// x. Greedy and deterministic: repeatedly adjoin the largest special gap
// different from x until x is the only special gap. Throws not_a_gap if
// x is not a gap of s.
Semigroup maximal_irreducible_avoiding(const Semigroup& s, Int x);

} // namespace nsg
