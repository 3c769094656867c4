#include "nsg/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace nsg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_input: return "invalid_input";
    case Errc::empty_input: return "empty_input";
    case Errc::gcd_not_one: return "gcd_not_one";
    case Errc::not_a_semigroup: return "not_a_semigroup";
    case Errc::full_semigroup: return "full_semigroup";
    case Errc::capacity_exceeded: return "capacity_exceeded";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::not_a_gap: return "not_a_gap";
    case Errc::not_bpf_element: return "not_bpf_element";
    case Errc::hypothesis_violated: return "hypothesis_violated";
    case Errc::internal_verification_failed:
      return "internal_verification_failed";
  }
  return "unknown";
}

Int first_shift_violation(const GapTable& t, Int shift, Int lo, Int hi) {
  if (lo > hi) return -1;
  assert(hi + shift < t.size());
  const std::vector<std::uint64_t>& w = t.words();
  auto fetch = [&w](Int pos) -> std::uint64_t {
    std::size_t wi = static_cast<std::size_t>(pos) >> 6;
    unsigned off = static_cast<unsigned>(pos & 63);
    std::uint64_t lo_word = wi < w.size() ? w[wi] : 0;
    if (off == 0) return lo_word;
    std::uint64_t hi_word = wi + 1 < w.size() ? w[wi + 1] : 0;
    return (lo_word >> off) | (hi_word << (64 - off));
  };
  for (Int p = lo; p <= hi; p += 64) {
    std::uint64_t v = fetch(p) & ~fetch(p + shift);
    if (hi - p < 63) v &= (std::uint64_t{1} << (hi - p + 1)) - 1;
    if (v) return p + std::countr_zero(v);
  }
  return -1;
}

namespace {

// Minimal generators straight off a canonical table: the members x in
// [m, F+m] that are not a sum of two nonzero members. Anything above F+m
// splits off a copy of m, so the scan is complete.
std::vector<Int> minimal_generators(const GapTable& table, Int frobenius,
                                    Int multiplicity) {
  if (frobenius == -1) return {1};
  auto member = [&](Int x) {
    return x > frobenius ? true : (x >= 0 && table.test(x));
  };
  std::vector<Int> gens;
  for (Int x = multiplicity; x <= frobenius + multiplicity; ++x) {
    if (!member(x)) continue;
    bool sum = false;
    for (Int u = multiplicity; u + u <= x; ++u) {
      if (member(u) && member(x - u)) {
        sum = true;
        break;
      }
    }
    if (!sum) gens.push_back(x);
  }
  return gens;
}

} // namespace

Semigroup Semigroup::naturals() {
  Semigroup s;
  s.generators_ = {1};
  s.frobenius_ = -1;
  s.multiplicity_ = 1;
  s.members_ = GapTable(1);
  s.members_.set(0);
  return s;
}

Semigroup Semigroup::from_member_table(GapTable table) {
  assert(table.size() >= 1 && table.test(0));
  Int frobenius = table.size() - 2;
  assert(frobenius == -1 || !table.test(frobenius));
  assert(frobenius == -1 || table.test(frobenius + 1));
  if (frobenius == -1) return naturals();
  Semigroup s;
  s.frobenius_ = frobenius;
  s.multiplicity_ = table.next_set(1);
  assert(s.multiplicity_ >= 1);
  s.generators_ = minimal_generators(table, frobenius, s.multiplicity_);
  s.members_ = std::move(table);
  return s;
}

Semigroup Semigroup::from_generators(std::vector<Int> gens, Int capacity) {
  if (gens.empty())
    throw Error(Errc::empty_input, "generator list is empty");
  for (Int g : gens)
    if (g < 1)
      throw Error(Errc::invalid_input,
                  "generators must be >= 1, got " + std::to_string(g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Int g = 0;
  for (Int v : gens) g = std::gcd(g, v);
  if (g != 1)
    throw Error(Errc::gcd_not_one,
                "generators have gcd " + std::to_string(g) +
                    "; a numerical semigroup needs gcd 1");
  if (gens.front() == 1) return naturals();

  const Int m = gens.front();
  const Int sieve_cap = 2 * capacity + 2;
  Int size = std::min<Int>(std::max<Int>(64, 2 * gens.back() + 2), sieve_cap);
  while (true) {
    GapTable table(size);
    table.set(0);
    for (Int x = m; x < size; ++x) {
      for (Int gen : gens) {
        if (gen > x) break;
        if (table.test(x - gen)) {
          table.set(x);
          break;
        }
      }
    }
    Int frobenius = table.last_zero();
    // Everything above the largest unrepresented value is represented, so
    // once m table slots lie above it the tail is certified closed.
    if (frobenius >= 0 && frobenius + m < size) {
      if (frobenius + 2 > capacity)
        throw Error(Errc::capacity_exceeded,
                    "membership table needs " + std::to_string(frobenius + 2) +
                        " entries, capacity is " + std::to_string(capacity));
      return from_member_table(table.prefix(frobenius + 2));
    }
    if (size >= sieve_cap)
      throw Error(Errc::capacity_exceeded,
                  "Frobenius number exceeds the table capacity " +
                      std::to_string(capacity));
    size = std::min<Int>(2 * size, sieve_cap);
  }
}

Semigroup Semigroup::from_gaps(const std::vector<Int>& gaps, Int capacity) {
  if (gaps.empty()) return naturals();
  for (Int x : gaps) {
    if (x == 0)
      throw Error(Errc::not_a_semigroup, "0 cannot be a gap: it is the identity");
    if (x < 0)
      throw Error(Errc::invalid_input,
                  "gaps must be >= 1, got " + std::to_string(x));
  }
  Int frobenius = *std::max_element(gaps.begin(), gaps.end());
  if (frobenius + 2 > capacity)
    throw Error(Errc::capacity_exceeded,
                "membership table needs " + std::to_string(frobenius + 2) +
                    " entries, capacity is " + std::to_string(capacity));
  GapTable table(frobenius + 2, true);
  for (Int x : gaps) table.reset(x);
  // Closed iff no members x, y with x + y a gap; scan each member x for
  // the first y in [x, F-x] with x + y missing.
  for (Int x = 1; x + x <= frobenius; ++x) {
    if (!table.test(x)) continue;
    Int y = first_shift_violation(table, x, x, frobenius - x);
    if (y >= 0)
      throw Error(Errc::not_a_semigroup,
                  "complement is not closed: " + std::to_string(x) + " + " +
                      std::to_string(y) + " = " + std::to_string(x + y) +
                      " is listed as a gap");
  }
  return from_member_table(std::move(table));
}

bool Semigroup::includes(const Semigroup& other) const {
  // this ⊇ other  iff  gaps(this) ⊆ gaps(other)
  for (Int x = 1; x <= frobenius_; ++x)
    if (!members_.test(x) && other.contains(x)) return false;
  return true;
}

std::vector<Int> Semigroup::gaps() const {
  std::vector<Int> out;
  for (Int x = 1; x <= frobenius_; ++x)
    if (!members_.test(x)) out.push_back(x);
  return out;
}

std::vector<Int> Semigroup::pseudo_frobenius() const {
  if (is_naturals())
    throw Error(Errc::full_semigroup,
                "pseudo-Frobenius numbers are undefined for the full semigroup");
  std::vector<Int> out;
  for (Int x = 1; x <= frobenius_; ++x) {
    if (members_.test(x)) continue;
    bool ok = true;
    for (Int g : generators_) {
      if (!contains(x + g)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<Int> Semigroup::bpf() const {
  std::vector<Int> pf = pseudo_frobenius();
  std::vector<Int> out;
  for (Int x : pf)
    if (2 * x > frobenius_) out.push_back(x);
  return out;
}

std::vector<Int> Semigroup::special_gaps() const {
  std::vector<Int> pf = pseudo_frobenius();
  std::vector<Int> out;
  for (Int x : pf)
    if (contains(2 * x)) out.push_back(x);
  return out;
}

bool Semigroup::is_symmetric() const {
  if (is_naturals()) return true;
  if (frobenius_ % 2 == 0) return false;
  for (Int x = 1; x <= frobenius_; ++x)
    if (!members_.test(x) && !contains(frobenius_ - x)) return false;
  return true;
}

bool Semigroup::is_pseudo_symmetric() const {
  if (is_naturals() || frobenius_ % 2 != 0) return false;
  for (Int x = 1; x <= frobenius_; ++x) {
    if (members_.test(x) || 2 * x == frobenius_) continue;
    if (!contains(frobenius_ - x)) return false;
  }
  return true;
}

bool Semigroup::is_irreducible() const {
  return is_symmetric() || is_pseudo_symmetric();
}

InvariantBundle Semigroup::invariants() const {
  InvariantBundle b;
  b.pseudo_frobenius = pseudo_frobenius();
  for (Int x : b.pseudo_frobenius) {
    if (2 * x > frobenius_) b.bpf.push_back(x);
    if (contains(2 * x)) b.special_gaps.push_back(x);
  }
  b.symmetric = is_symmetric();
  b.pseudo_symmetric = is_pseudo_symmetric();
  b.irreducible = b.symmetric || b.pseudo_symmetric;
  return b;
}

Semigroup Semigroup::adjoin(Int t) const {
  if (t < 0)
    throw Error(Errc::invalid_input,
                "cannot adjoin " + std::to_string(t) + ": negative");
  if (t == 0 || contains(t)) return *this;
  if (t == 1) return naturals();
  GapTable table = members_;
  table.set(t);
  // Ascending pass closes under adding t (everything else was closed).
  for (Int x = t + 1; x < table.size(); ++x)
    if (table.test(x - t)) table.set(x);
  Int frobenius = table.last_zero();
  if (frobenius == -1) return naturals();
  return from_member_table(table.prefix(frobenius + 2));
}

Semigroup intersect(const Semigroup& a, const Semigroup& b) {
  if (a.is_naturals()) return b;
  if (b.is_naturals()) return a;
  Int frobenius = std::max(a.frobenius_, b.frobenius_);
  GapTable table(frobenius + 2);
  for (Int x = 0; x <= frobenius + 1; ++x)
    if (a.contains(x) && b.contains(x)) table.set(x);
  assert(!table.test(frobenius));
  return Semigroup::from_member_table(std::move(table));
}

} // namespace nsg
