#pragma once

#include <gmpxx.h>

#include <vector>

#include "nsg/semigroup.hpp"
#include "nsg/types.hpp"

namespace nsg {

// <k, n, n+1, ..., n+k-1> for k >= 2, n >= k*k - 1, k not dividing n - 1.
// Its Frobenius number is n - 1 (asserted after construction). Throws
// hypothesis_violated when the parameters break those constraints.
Semigroup skn(Int k, Int n, Int capacity = Semigroup::kDefaultCapacity);

// {0} ∪ {n+1, n+2, ...} for n >= 1, i.e. <n+1, ..., 2n+1>. Frobenius
// number n; PF = {1, ..., n}; bpf = {floor(n/2)+1, ..., n}.
Semigroup halfline(Int n, Int capacity = Semigroup::kDefaultCapacity);

// Smallest prime factor of k >= 2.
Int smallest_prime_factor(Int k);

struct FamilyWitness {
  enum class Kind { skn, half_line };
  Kind kind = Kind::half_line;
  Int k = 0;
  Int d = 0;                          // smallest prime factor of k (skn only)
  mpz_class n;
  std::vector<mpz_class> a_sequence;  // half_line only: a_1, ..., a_k
  // Whether halfline(n) / skn(k, n) fits the default table capacity.
  bool materializable = false;
};

// Parameters for a half-line semigroup halfline(n) whose decomposition
// needs at least k irreducible components: a_1 = 1, a_{i+1} = a_i! + a_i,
// and n is the least value of the form a_k + m * a_k! with
// n - a_k >= floor(n/2) + 1. The sequence forces xi(n - a_i) = {n - a_i}
// for each i, so h >= k. k = 4 already needs n = 28! + 28; k >= 5 would
// need factorials of 30-digit numbers and raises capacity_exceeded.
FamilyWitness halfline_witness(Int k);

// Witness record for skn(k, n): validates the family hypotheses and
// reports d = smallest_prime_factor(k), the forced lower bound d - 1.
FamilyWitness skn_witness(Int k, Int n);

} // namespace nsg
