#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsg/oversemigroups.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/types.hpp"

namespace nsg {

// xi(a) = {a + t : t >= 0, a + t not in adjoin(S, t)} for a in bpf(S).
// Always contains a (t = 0), and every member is a gap of S.
struct XiSet {
  Int a = 0;
  std::vector<Int> members;  // ascending
};

// Decomposition-size bounds: the minimal number of irreducible components
// lies in [h, m], where m = |bpf(S)| and h is the least number of values
// hitting every xi set.
struct BoundsReport {
  Int m = 0;
  Int h = 0;
  std::vector<XiSet> xi_sets;        // one per bpf element, ascending a
  std::vector<Int> witness_values;   // lexicographically least hitting set
};

enum class DecompositionMethod { constructive, exact_cover };

struct Decomposition {
  std::vector<Semigroup> components;  // sorted canonically
  bool exact_minimum = false;
  DecompositionMethod method = DecompositionMethod::constructive;
};

struct VerifyResult {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

// Throws not_bpf_element if a is not in bpf(s); full_semigroup for N.
XiSet xi(const Semigroup& s, Int a);

// m, h, the xi sets and the lexicographically least minimum hitting set.
// Throws full_semigroup for N. For irreducible s this is trivially
// m = h = 1.
BoundsReport bounds(const Semigroup& s);

// At most m components: one maximal irreducible oversemigroup avoiding
// each bpf element, deduplicated. Not necessarily minimal.
Decomposition constructive_decomposition(const Semigroup& s);

// Exact minimum-size decomposition into irreducible oversemigroups.
// Candidate pool = enumerate_irreducible_oversemigroups(s, cap) (so this
// throws CapExceeded when the oversemigroup walk overflows; fall back to
// bounds() + constructive_decomposition() in that case). A candidate set C
// with every member containing S satisfies ∩C = S iff every special gap
// of S is a gap of some member, which turns the search into an exact
// minimum set cover over the special gaps. Ties are broken so the result
// is the lexicographically least selection under the candidate ordering
// (coverage count descending, then Frobenius number descending, then
// membership table).
Decomposition minimal_decomposition(
    const Semigroup& s, std::uint64_t cap = kDefaultEnumerationCap);

// Checks that every component is irreducible, contains s, and that the
// intersection of all components equals s exactly. The reason names the
// first offending component or a witness element of the intersection that
// is missing from s.
VerifyResult verify_decomposition(const Semigroup& s,
                                  const std::vector<Semigroup>& components);

} // namespace nsg
