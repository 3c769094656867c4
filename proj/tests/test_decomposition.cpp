#include <algorithm>
#include <functional>
#include <vector>

#include "doctest.h"
#include "nsg/decomposition.hpp"
#include "nsg/families.hpp"
#include "oracles.hpp"

using nsg::BoundsReport;
using nsg::Decomposition;
using nsg::Int;
using nsg::Semigroup;
using nsg::XiSet;
using vec = std::vector<Int>;

namespace {

Semigroup gen(std::initializer_list<Int> g) {
  return Semigroup::from_generators(std::vector<Int>(g));
}

} // namespace

TEST_CASE("xi sets on known inputs") {
  Semigroup h6 = nsg::halfline(6);
  CHECK(nsg::xi(h6, 6).members == vec{6});
  CHECK(nsg::xi(h6, 5).members == vec{5});
  CHECK(nsg::xi(h6, 4).members == vec{4});
  CHECK(nsg::xi(h6, 4).a == 4);

  Semigroup s = gen({3, 10, 11});
  CHECK(nsg::xi(s, 7).members == vec{7});
  CHECK(nsg::xi(s, 8).members == vec{8});

  CHECK(nsg::xi(nsg::halfline(28), 24).members == vec{24});

  // halfline(12), a = 7: t = 1 reaches N (so 8 drops out); t in {2,..,5}
  // leaves 7 + t outside adjoin(S, t).
  CHECK(nsg::xi(nsg::halfline(12), 7).members == vec{7, 9, 10, 11, 12});
}

TEST_CASE("xi errors") {
  Semigroup h6 = nsg::halfline(6);
  // 3 is pseudo-Frobenius but not above F/2.
  try {
    nsg::xi(h6, 3);
    FAIL("expected not_bpf_element");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::Errc::not_bpf_element);
  }
  // 5 is a gap of <3,10,11> but not pseudo-Frobenius.
  try {
    nsg::xi(gen({3, 10, 11}), 5);
    FAIL("expected not_bpf_element");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::Errc::not_bpf_element);
  }
  try {
    nsg::xi(Semigroup::naturals(), 1);
    FAIL("expected full_semigroup");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::Errc::full_semigroup);
  }
}

TEST_CASE("xi members are gaps and contain a") {
  for (const Semigroup& s :
       {gen({3, 10, 11}), nsg::halfline(10), nsg::skn(4, 16), nsg::skn(9, 80)}) {
    for (Int a : s.bpf()) {
      XiSet x = nsg::xi(s, a);
      CHECK(x.a == a);
      CHECK(!x.members.empty());
      CHECK(x.members.front() == a);
      CHECK(std::is_sorted(x.members.begin(), x.members.end()));
      for (Int v : x.members) {
        CHECK(v >= a);
        CHECK(!s.contains(v));
      }
    }
  }
}

TEST_CASE("bounds on known inputs") {
  BoundsReport h6 = nsg::bounds(nsg::halfline(6));
  CHECK(h6.m == 3);
  CHECK(h6.h == 3);
  CHECK(h6.witness_values == vec{4, 5, 6});
  REQUIRE(h6.xi_sets.size() == 3);
  CHECK(h6.xi_sets[0].a == 4);
  CHECK(h6.xi_sets[2].a == 6);

  BoundsReport s = nsg::bounds(gen({3, 10, 11}));
  CHECK(s.m == 2);
  CHECK(s.h == 2);
  CHECK(s.witness_values == vec{7, 8});

  // Irreducible semigroups give the trivial sandwich m = h = 1.
  BoundsReport irr = nsg::bounds(gen({3, 5}));
  CHECK(irr.m == 1);
  CHECK(irr.h == 1);
  CHECK(irr.witness_values == vec{7});

  BoundsReport h28 = nsg::bounds(nsg::halfline(28));
  CHECK(h28.m == 14);
  CHECK(h28.h == 4);
  CHECK(h28.witness_values == vec{24, 26, 27, 28});

  try {
    nsg::bounds(Semigroup::naturals());
    FAIL("expected full_semigroup");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::Errc::full_semigroup);
  }
}

TEST_CASE("h matches brute-force product minimization, all F <= 10") {
  for (const Semigroup& s :
       nsg::enumerate_oversemigroups(nsg::halfline(10)).members) {
    if (s.is_naturals()) continue;
    BoundsReport b = nsg::bounds(s);
    Int brute = oracle::min_hitting_bruteforce(b.xi_sets);
    REQUIRE(brute >= 0);
    CHECK(b.h == brute);
    CHECK(b.h >= 1);
    CHECK(b.h <= b.m);
    CHECK(static_cast<Int>(b.witness_values.size()) == b.h);
  }
}

TEST_CASE("constructive decomposition") {
  Decomposition d = nsg::constructive_decomposition(gen({3, 10, 11}));
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].generators() == vec{3, 5});
  CHECK(d.components[1].generators() == vec{3, 7, 11});
  CHECK(!d.exact_minimum);
  CHECK(d.method == nsg::DecompositionMethod::constructive);
  CHECK(nsg::verify_decomposition(gen({3, 10, 11}), d.components).ok);

  Decomposition h6 = nsg::constructive_decomposition(nsg::halfline(6));
  REQUIRE(h6.components.size() == 3);
  CHECK(h6.components[0].generators() == vec{3, 5, 7});
  CHECK(h6.components[1].generators() == vec{3, 4});
  CHECK(h6.components[2].generators() == vec{4, 5, 7});

  Decomposition self = nsg::constructive_decomposition(gen({3, 5}));
  REQUIRE(self.components.size() == 1);
  CHECK(self.components[0] == gen({3, 5}));

  try {
    nsg::constructive_decomposition(Semigroup::naturals());
    FAIL("expected full_semigroup");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::Errc::full_semigroup);
  }
}

TEST_CASE("constructive decomposition stays within m components, F <= 10") {
  for (const Semigroup& s :
       nsg::enumerate_oversemigroups(nsg::halfline(10)).members) {
    if (s.is_naturals()) continue;
    Decomposition d = nsg::constructive_decomposition(s);
    CHECK(static_cast<Int>(d.components.size()) <= nsg::bounds(s).m);
    CHECK(nsg::verify_decomposition(s, d.components).ok);
  }
}

TEST_CASE("minimal decomposition on known inputs") {
  Decomposition one = nsg::minimal_decomposition(gen({2, 5}));
  REQUIRE(one.components.size() == 1);
  CHECK(one.components[0] == gen({2, 5}));
  CHECK(one.exact_minimum);
  CHECK(one.method == nsg::DecompositionMethod::exact_cover);

  Decomposition two = nsg::minimal_decomposition(gen({3, 10, 11}));
  REQUIRE(two.components.size() == 2);
  CHECK(two.components[0].generators() == vec{3, 5});
  CHECK(two.components[1].generators() == vec{3, 7, 11});
  CHECK(two.exact_minimum);
  CHECK(nsg::verify_decomposition(gen({3, 10, 11}), two.components).ok);

  Decomposition three = nsg::minimal_decomposition(nsg::halfline(6));
  CHECK(three.components.size() == 3);
  CHECK(nsg::verify_decomposition(nsg::halfline(6), three.components).ok);

  try {
    nsg::minimal_decomposition(Semigroup::naturals());
    FAIL("expected full_semigroup");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::Errc::full_semigroup);
  }
}

TEST_CASE("minimal decomposition equals exhaustive subset search, F <= 8") {
  for (const Semigroup& s :
       nsg::enumerate_oversemigroups(nsg::halfline(8)).members) {
    if (s.is_naturals()) continue;
    std::vector<Semigroup> pool =
        nsg::enumerate_irreducible_oversemigroups(s).members;
    Decomposition d = nsg::minimal_decomposition(s);
    CHECK(static_cast<Int>(d.components.size()) ==
          oracle::min_decomposition_size_subsets(s, pool));
  }
}

TEST_CASE("cover criterion agrees with direct intersection, F <= 7") {
  // For every subset C of the irreducible pool: ∩C == S iff every special
  // gap of S is a gap of some member of C.
  for (const Semigroup& s :
       nsg::enumerate_oversemigroups(nsg::halfline(7)).members) {
    if (s.is_naturals()) continue;
    std::vector<Semigroup> pool =
        nsg::enumerate_irreducible_oversemigroups(s).members;
    std::vector<Int> specials = s.special_gaps();
    REQUIRE(pool.size() <= 20);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size());
         ++mask) {
      Semigroup meet = Semigroup::naturals();
      bool covered_all = true;
      for (Int g : specials) {
        bool covered = false;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (((mask >> i) & 1) && !pool[i].contains(g)) covered = true;
        if (!covered) covered_all = false;
      }
      for (std::size_t i = 0; i < pool.size(); ++i)
        if ((mask >> i) & 1) meet = intersect(meet, pool[i]);
      CHECK((meet == s) == covered_all);
    }
  }
}

TEST_CASE("sandwich h <= minimal size <= m, all F <= 9") {
  for (const Semigroup& s :
       nsg::enumerate_oversemigroups(nsg::halfline(9)).members) {
    if (s.is_naturals()) continue;
    BoundsReport b = nsg::bounds(s);
    Decomposition d = nsg::minimal_decomposition(s);
    Int size = static_cast<Int>(d.components.size());
    CHECK(b.h <= size);
    CHECK(size <= b.m);
    CHECK(nsg::verify_decomposition(s, d.components).ok);
  }
}

TEST_CASE("skn instances above the cap fall back to certified bounds") {
  Semigroup s = nsg::skn(9, 80);
  try {
    nsg::minimal_decomposition(s, 1000);
    FAIL("expected CapExceeded");
  } catch (const nsg::CapExceeded& e) {
    CHECK(e.partial_count() == 1000);
  }
  BoundsReport b = nsg::bounds(s);
  CHECK(b.m == 8);
  CHECK(b.h == 4);
  Decomposition cons = nsg::constructive_decomposition(s);
  CHECK(cons.components.size() <= 8);
  CHECK(static_cast<Int>(cons.components.size()) >= b.h);
  CHECK(nsg::verify_decomposition(s, cons.components).ok);
}

TEST_CASE("verify_decomposition failure reasons") {
  Semigroup s = gen({3, 10, 11});

  nsg::VerifyResult missing =
      nsg::verify_decomposition(s, {gen({3, 7, 11})});
  CHECK(!missing.ok);
  CHECK(missing.reason.find("7") != std::string::npos);
  CHECK(missing.reason.find("intersection") != std::string::npos);

  nsg::VerifyResult reducible = nsg::verify_decomposition(s, {s});
  CHECK(!reducible.ok);
  CHECK(reducible.reason.find("not irreducible") != std::string::npos);

  nsg::VerifyResult stranger =
      nsg::verify_decomposition(gen({3, 4, 5}), {gen({2, 5})});
  CHECK(!stranger.ok);
  CHECK(stranger.reason.find("does not contain") != std::string::npos);

  nsg::VerifyResult empty = nsg::verify_decomposition(s, {});
  CHECK(!empty.ok);

  nsg::VerifyResult good =
      nsg::verify_decomposition(s, {gen({3, 5}), gen({3, 7, 11})});
  CHECK(good.ok);
  CHECK(good.reason.empty());
  CHECK(static_cast<bool>(good));
}
