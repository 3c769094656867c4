#pragma once

#include <cstddef>
#include <vector>

#include "nsg/errors.hpp"
#include "nsg/gap_table.hpp"
#include "nsg/types.hpp"

namespace nsg {

struct InvariantBundle {
  std::vector<Int> pseudo_frobenius;
  std::vector<Int> bpf;
  std::vector<Int> special_gaps;
  bool symmetric = false;
  bool pseudo_symmetric = false;
  bool irreducible = false;
};

// A numerical semigroup: a cofinite submonoid of (N, +). Immutable and
// always in canonical form: the minimal generating set, the Frobenius
// number F (-1 for N itself), the multiplicity, and a dense membership
// table over 0..F+1. Equality, hashing and ordering go through (F, table).
class Semigroup {
public:
  // Dense tables above this size (in table entries) are refused.
  static constexpr Int kDefaultCapacity = Int{1} << 20;

  // The numerical semigroup generated by gens. Throws empty_input,
  // gcd_not_one, invalid_input (nonpositive generator), capacity_exceeded.
  static Semigroup from_generators(std::vector<Int> gens,
                                   Int capacity = kDefaultCapacity);

  // The complement of the given gap set. Throws invalid_input (value < 1),
  // not_a_semigroup (complement not closed; the message names a witness
  // pair x, y with x + y a gap), capacity_exceeded.
  static Semigroup from_gaps(const std::vector<Int>& gaps,
                             Int capacity = kDefaultCapacity);

  // The full semigroup N (Frobenius number -1, generated by 1).
  static Semigroup naturals();

  // Canonicalize a membership table that is already known to be closed
  // under addition. The table must span exactly 0..F+1 (that is, its top
  // bit is a member and, unless it is N's one-bit table, bit F is not).
  static Semigroup from_member_table(GapTable table);

  Int frobenius() const { return frobenius_; }
  Int multiplicity() const { return multiplicity_; }
  Int genus() const { return members_.size() - members_.count(); }
  const std::vector<Int>& generators() const { return generators_; }
  const GapTable& member_table() const { return members_; }
  bool is_naturals() const { return frobenius_ == -1; }

  bool contains(Int x) const {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return members_.test(x);
  }

  // Set containment: does this semigroup contain every element of other?
  bool includes(const Semigroup& other) const;

  std::vector<Int> gaps() const;

  // Gaps x with x + s in S for every nonzero s in S. Checked against the
  // minimal generators only, which suffices: if x + g is in S for every
  // generator g, induction on the length of a representation of s extends
  // it to every nonzero s. Throws full_semigroup for N.
  std::vector<Int> pseudo_frobenius() const;

  // Pseudo-Frobenius numbers strictly greater than F/2.
  std::vector<Int> bpf() const;

  // Gaps whose adjunction leaves a semigroup: {x in PF(S) : 2x in S}.
  std::vector<Int> special_gaps() const;

  bool is_symmetric() const;
  bool is_pseudo_symmetric() const;
  // Irreducible == symmetric or pseudo-symmetric (N counts as irreducible).
  bool is_irreducible() const;

  InvariantBundle invariants() const;

  // Smallest semigroup containing S and t (full additive closure, so t
  // need not be a special gap). adjoin(0) and adjoin of a member return
  // the semigroup unchanged.
  Semigroup adjoin(Int t) const;

  friend Semigroup intersect(const Semigroup& a, const Semigroup& b);

  bool operator==(const Semigroup& o) const {
    return frobenius_ == o.frobenius_ && members_ == o.members_;
  }
  std::size_t hash() const { return members_.hash(); }

  // Total order by (Frobenius number, lexicographic membership table).
  static bool canonical_less(const Semigroup& a, const Semigroup& b) {
    if (a.frobenius_ != b.frobenius_) return a.frobenius_ < b.frobenius_;
    return a.members_.lex_less(b.members_);
  }

private:
  Semigroup() = default;

  std::vector<Int> generators_;
  Int frobenius_ = -1;
  Int multiplicity_ = 1;
  GapTable members_;
};

Semigroup intersect(const Semigroup& a, const Semigroup& b);

struct SemigroupHash {
  std::size_t operator()(const Semigroup& s) const { return s.hash(); }
};

} // namespace nsg
