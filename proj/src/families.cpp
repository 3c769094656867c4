#include "nsg/families.hpp"

#include <string>

namespace nsg {

namespace {

// Factorials beyond this operand are refused: the half-line witness for
// k = 5 would need (28! + 28)!, i.e. a number with ~10^31 digits.
constexpr unsigned long kFactorialLimit = 200000;

mpz_class factorial_checked(const mpz_class& v, const char* context) {
  if (v < 1 || v > kFactorialLimit)
    throw Error(Errc::capacity_exceeded,
                std::string(context) + ": factorial operand " + v.get_str() +
                    " exceeds the supported limit " +
                    std::to_string(kFactorialLimit));
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), v.get_ui());
  return result;
}

void validate_skn_params(Int k, Int n) {
  if (k < 2)
    throw Error(Errc::hypothesis_violated,
                "skn needs k >= 2, got k = " + std::to_string(k));
  if (k > (Int{1} << 31))
    throw Error(Errc::capacity_exceeded,
                "skn: k = " + std::to_string(k) + " is far beyond any table");
  if (n < k * k - 1)
    throw Error(Errc::hypothesis_violated,
                "skn needs n >= k*k - 1 = " + std::to_string(k * k - 1) +
                    ", got n = " + std::to_string(n));
  if ((n - 1) % k == 0)
    throw Error(Errc::hypothesis_violated,
                "skn needs k not dividing n - 1, but " + std::to_string(k) +
                    " divides " + std::to_string(n - 1));
}

} // namespace

Semigroup skn(Int k, Int n, Int capacity) {
  validate_skn_params(k, n);
  std::vector<Int> gens;
  gens.push_back(k);
  for (Int i = 0; i < k; ++i) gens.push_back(n + i);
  Semigroup s = Semigroup::from_generators(std::move(gens), capacity);
  if (s.frobenius() != n - 1)
    throw Error(Errc::internal_verification_failed,
                "skn(" + std::to_string(k) + ", " + std::to_string(n) +
                    ") computed Frobenius number " +
                    std::to_string(s.frobenius()) + ", expected " +
                    std::to_string(n - 1));
  return s;
}

Semigroup halfline(Int n, Int capacity) {
  if (n < 1)
    throw Error(Errc::invalid_input,
                "halfline needs n >= 1, got " + std::to_string(n));
  if (n + 2 > capacity)
    throw Error(Errc::capacity_exceeded,
                "halfline(" + std::to_string(n) + ") needs a table of " +
                    std::to_string(n + 2) + " entries, capacity is " +
                    std::to_string(capacity));
  GapTable table(n + 2);
  table.set(0);
  table.set(n + 1);
  return Semigroup::from_member_table(std::move(table));
}

Int smallest_prime_factor(Int k) {
  if (k < 2)
    throw Error(Errc::invalid_input,
                "smallest_prime_factor needs k >= 2, got " + std::to_string(k));
  for (Int p = 2; p * p <= k; ++p)
    if (k % p == 0) return p;
  return k;
}

FamilyWitness halfline_witness(Int k) {
  if (k < 1)
    throw Error(Errc::invalid_input,
                "halfline_witness needs k >= 1, got " + std::to_string(k));
  FamilyWitness w;
  w.kind = FamilyWitness::Kind::half_line;
  w.k = k;
  w.a_sequence.push_back(1);
  for (Int i = 1; i < k; ++i) {
    const mpz_class& prev = w.a_sequence.back();
    w.a_sequence.push_back(factorial_checked(prev, "half-line witness") + prev);
  }
  // Least n = a_k + m * a_k! with the top half of the gaps clear of a_k:
  // n - a_k >= floor(n / 2) + 1.
  const mpz_class& a_k = w.a_sequence.back();
  mpz_class step = factorial_checked(a_k, "half-line witness");
  mpz_class n = a_k + step;
  while (n - a_k < n / 2 + 1) n += step;
  w.n = n;
  w.materializable =
      w.n >= 1 && w.n + 2 <= Semigroup::kDefaultCapacity;
  return w;
}

FamilyWitness skn_witness(Int k, Int n) {
  validate_skn_params(k, n);
  FamilyWitness w;
  w.kind = FamilyWitness::Kind::skn;
  w.k = k;
  w.d = smallest_prime_factor(k);
  w.n = static_cast<long>(n);
  w.materializable = n + 2 <= Semigroup::kDefaultCapacity;
  return w;
}

} // namespace nsg
