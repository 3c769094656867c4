#include "nsg/repro.hpp"

#include <chrono>
#include <numeric>
#include <utility>

#include "nsg/decomposition.hpp"
#include "nsg/families.hpp"

namespace nsg::repro {

namespace {

std::string ts(Int v) { return std::to_string(v); }

using Outcome = std::pair<bool, std::string>;

template <typename Fn>
void timed(std::vector<Row>& rows, std::string name, Fn&& fn) {
  Row row;
  row.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = fn();
    row.pass = o.first;
    row.detail = std::move(o.second);
  } catch (const std::exception& e) {
    row.pass = false;
    row.detail = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  row.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  rows.push_back(std::move(row));
}

} // namespace

std::vector<Row> run_rows(std::uint64_t cap) {
  std::vector<Row> rows;

  // skn(p, p^2) for prime p decomposes into exactly p - 1 irreducibles.
  for (Int p : {Int{2}, Int{3}, Int{5}}) {
    timed(rows,
          "prime family p=" + ts(p) + ": exact minimal decomposition size == " +
              ts(p - 1),
          [&]() -> Outcome {
            Semigroup s = skn(p, p * p);
            Decomposition d = minimal_decomposition(s, cap);
            VerifyResult v = verify_decomposition(s, d.components);
            Int size = static_cast<Int>(d.components.size());
            return {v.ok && size == p - 1,
                    "size=" + ts(size) + " verified=" + (v.ok ? "yes" : "no")};
          });
  }

  // Instances whose minimal decomposition provably needs >= d - 1
  // components, d the smallest prime factor of k. Exact size when the
  // oversemigroup walk fits the cap; otherwise the certified lower bound
  // max(h, #{i < d : n - i is a gap}) plus a verified constructive
  // decomposition.
  for (auto [k, n] : {std::pair<Int, Int>{9, 80}, {9, 83}, {15, 224}}) {
    Int d = smallest_prime_factor(k);
    timed(rows,
          "skn(" + ts(k) + "," + ts(n) + "): certified lower bound >= " +
              ts(d - 1) + " components",
          [&, k = k, n = n, d = d]() -> Outcome {
            Semigroup s = skn(k, n);
            try {
              Decomposition dec = minimal_decomposition(s, cap);
              VerifyResult v = verify_decomposition(s, dec.components);
              Int size = static_cast<Int>(dec.components.size());
              return {v.ok && size >= d - 1, "exact size=" + ts(size)};
            } catch (const CapExceeded&) {
              BoundsReport b = bounds(s);
              Int pinned_gaps = 0;
              for (Int i = 1; i <= d - 1; ++i)
                if (!s.contains(n - i)) ++pinned_gaps;
              Decomposition cons = constructive_decomposition(s);
              Int lower = std::max(b.h, pinned_gaps);
              return {lower >= d - 1,
                      "cap exceeded; h=" + ts(b.h) + " pinned_gaps=" +
                          ts(pinned_gaps) + " constructive_size=" +
                          ts(static_cast<Int>(cons.components.size()))};
            }
          });
  }

  // Every irreducible oversemigroup with n - i among its gaps (i < d) has
  // Frobenius number exactly n - i; exhaustive over the full pool.
  for (auto [k, n] : {std::pair<Int, Int>{3, 8}, {4, 16}, {5, 27}}) {
    timed(rows,
          "skn(" + ts(k) + "," + ts(n) +
              "): components hitting n-i are pinned to Frobenius n-i",
          [&, k = k, n = n]() -> Outcome {
            Int d = smallest_prime_factor(k);
            Semigroup s = skn(k, n);
            std::vector<Semigroup> pool =
                enumerate_irreducible_oversemigroups(s, cap).members;
            Int pinned = 0;
            bool ok = !pool.empty();
            for (const Semigroup& c : pool) {
              for (Int i = 1; i <= d - 1; ++i) {
                if (c.contains(n - i)) continue;
                ++pinned;
                if (c.frobenius() != n - i) ok = false;
              }
            }
            return {ok, "pool=" + ts(static_cast<Int>(pool.size())) +
                            " pinned=" + ts(pinned)};
          });
  }

  // Half-line witnesses: the sequence a_1 = 1, a_{i+1} = a_i! + a_i forces
  // xi(n - a_i) = {n - a_i}, so the minimal decomposition needs >= k
  // components.
  for (Int k : {Int{2}, Int{3}}) {
    FamilyWitness w = halfline_witness(k);
    Int n = static_cast<Int>(w.n.get_si());
    timed(rows,
          "half-line witness k=" + ts(k) + " (n=" + ts(n) +
              "): xi singletons force h >= " + ts(k),
          [&, k = k, n = n]() -> Outcome {
            Semigroup s = halfline(n);
            bool singles = true;
            for (const mpz_class& a : w.a_sequence) {
              Int ai = static_cast<Int>(a.get_si());
              XiSet x = xi(s, n - ai);
              singles = singles && x.members == std::vector<Int>{n - ai};
            }
            BoundsReport b = bounds(s);
            return {singles && b.h >= k,
                    "h=" + ts(b.h) + " m=" + ts(b.m) +
                        (singles ? " singletons=yes" : " singletons=no")};
          });
  }

  timed(rows, "half-line n=6: exact minimal decomposition size == 3",
        [&]() -> Outcome {
          Semigroup s = halfline(6);
          Decomposition d = minimal_decomposition(s, cap);
          VerifyResult v = verify_decomposition(s, d.components);
          Int size = static_cast<Int>(d.components.size());
          return {v.ok && size == 3, "size=" + ts(size)};
        });

  timed(rows, "two-generator Frobenius formula for coprime a<b<=25",
        [&]() -> Outcome {
          Int instances = 0;
          bool ok = true;
          for (Int a = 2; a <= 24; ++a) {
            for (Int b = a + 1; b <= 25; ++b) {
              if (std::gcd(a, b) != 1) continue;
              Semigroup s = Semigroup::from_generators({a, b});
              if (s.frobenius() != a * b - a - b) ok = false;
              ++instances;
            }
          }
          return {ok && instances > 0, "instances=" + ts(instances)};
        });

  return rows;
}

} // namespace nsg::repro
