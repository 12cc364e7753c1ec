#include "doctest.h"
#include "oracles.hpp"
#include "retic/corpus.hpp"
#include "retic/reticulation.hpp"
#include "retic/spectrum.hpp"

using namespace retic;

namespace {

Partition theta_mod(const FiniteAlgebra& zn, int d) {
  UnionFind uf(zn.n);
  for (int x = 0; x < zn.n; ++x) uf.unite(x, x % d);
  return uf.canonical();
}

}  // namespace

TEST_CASE("spectrum of z4") {
  Analysis an = analyze(zn_ring(4));
  const auto& s = an.s;
  int theta = an.lat->index_of(theta_mod(*an.alg, 2));
  CHECK(an.spec.primes == std::vector<int>{theta});
  CHECK(an.spec.maximals == std::vector<int>{theta});
  CHECK(an.spec.minimals == std::vector<int>{theta});
  CHECK_FALSE(is_prime(s, s.bottom));
  CHECK_FALSE(is_prime(s, s.top));
  CHECK(an.spec.radical[s.bottom] == theta);
  CHECK_FALSE(an.spec.semiprime);
  CHECK(an.spec.radical[s.top] == s.top);
}

TEST_CASE("spectrum of the simple matrix ring is the zero congruence") {
  Analysis an = analyze(m2_z2());
  CHECK(an.spec.primes == std::vector<int>{an.s.bottom});
  CHECK(an.spec.semiprime);
}

TEST_CASE("spectrum of z12 against the ideal oracle") {
  FiniteAlgebra z12 = zn_ring(12);
  Analysis an = analyze(z12);
  REQUIRE(an.spec.primes.size() == 2);

  // the ideal oracle: prime ideals of z12 are exactly (2) and (3)
  auto ideals = oracles::ideals_by_filter(z12);
  int prime_ideals = 0;
  for (const auto& ideal : ideals)
    if (oracles::ideal_prime_commutative(z12, ideal)) ++prime_ideals;
  CHECK(prime_ideals == 2);

  int t2 = an.lat->index_of(theta_mod(z12, 2));
  int t3 = an.lat->index_of(theta_mod(z12, 3));
  CHECK(an.spec.primes == std::vector<int>{std::min(t2, t3), std::max(t2, t3)});
  CHECK(an.spec.maximals == an.spec.primes);
  CHECK(an.spec.minimals == an.spec.primes);

  int t6 = an.lat->index_of(theta_mod(z12, 6));
  CHECK(an.spec.radical[an.s.bottom] == t6);
  CHECK_FALSE(an.spec.semiprime);
}

TEST_CASE("radical of the total congruence is total, corpus-wide") {
  Corpus c = shipped_corpus();
  for (const auto& a : c.algebras) {
    Analysis an = analyze(a);
    CHECK(an.spec.radical[an.s.top] == an.s.top);
  }
  for (const auto& s : c.structures) {
    Analysis an = analyze(s);
    CHECK(an.spec.radical[an.s.top] == an.s.top);
  }
}

TEST_CASE("zariski topology shapes") {
  // two incomparable primes: discrete two-point space
  Analysis z12 = analyze(zn_ring(12));
  CHECK(z12.zar.top.npoints == 2);
  CHECK(z12.zar.top.opens == std::vector<std::uint64_t>{0, 1, 2, 3});

  // one prime: the singleton space
  Analysis z4 = analyze(zn_ring(4));
  CHECK(z4.zar.top.npoints == 1);
  CHECK(z4.zar.top.opens == std::vector<std::uint64_t>{0, 1});

  // the lax chain: Sierpinski-type space
  Analysis lax = analyze(lax_chain4());
  CHECK(lax.zar.top.npoints == 2);
  CHECK(lax.zar.top.opens == std::vector<std::uint64_t>{0, 1, 3});
}

TEST_CASE("spectral space checks") {
  Corpus c = shipped_corpus();
  for (const auto& a : c.algebras) {
    Analysis an = analyze(a);
    SpectralReport r = spectral_space_check(an.zar.top);
    CAPTURE(a.name);
    CHECK(r.t0);
    CHECK(r.sober);
    CHECK(r.compact);
    CHECK(r.spectral);
  }

  // synthetic negative control: a two-point indiscrete space
  FiniteTopology indiscrete;
  indiscrete.npoints = 2;
  indiscrete.point_labels = {"p", "q"};
  indiscrete.opens = {0, 3};
  indiscrete.basis = {3};
  indiscrete.materialized = true;
  SpectralReport r = spectral_space_check(indiscrete);
  CHECK_FALSE(r.t0);
  CHECK_FALSE(r.spectral);
}

TEST_CASE("nested spectrum of the strict chain") {
  Analysis an = analyze(strict_chain3());
  REQUIRE(an.spec.primes.size() == 2);
  CHECK(an.s.le(an.spec.primes[0], an.spec.primes[1]));
  CHECK(an.spec.maximals == std::vector<int>{an.spec.primes[1]});
  CHECK(an.spec.minimals == std::vector<int>{an.spec.primes[0]});
  CHECK(an.spec.semiprime);
}

TEST_CASE("morphism adjoints for the canonical projection") {
  FiniteAlgebra z4 = zn_ring(4), z2 = zn_ring(2);
  Morphism u = check_morphism("mod2", {0, 1, 0, 1}, z4, z2);
  Partition theta = theta_mod(z4, 2);

  CHECK(morphism_bullet(z4, z2, u, theta) == Partition::identity(2));
  CHECK(morphism_star(z4, u, Partition::all(2)) == Partition::all(4));
  CHECK(morphism_star(z4, u, Partition::identity(2)) == theta);

  CongruenceLattice la = con_lattice(z4), lb = con_lattice(z2);
  CHECK(check_adjunction(z4, z2, u, la, lb));
}

TEST_CASE("identity adjoints are identities") {
  FiniteAlgebra z6 = zn_ring(6);
  std::vector<int> idmap{0, 1, 2, 3, 4, 5};
  Morphism u = check_morphism("id", idmap, z6, z6);
  for (const Partition& p : con_lattice(z6).elems) {
    CHECK(morphism_star(z6, u, p) == p);
    CHECK(morphism_bullet(z6, z6, u, p) == p);
  }
}

TEST_CASE("admissibility of the shipped morphisms") {
  Analysis a12 = analyze(zn_ring(12));
  Analysis a4 = analyze(zn_ring(4));
  Analysis a2 = analyze(zn_ring(2));

  std::vector<int> mod4(12), mod2(4);
  for (int x = 0; x < 12; ++x) mod4[x] = x % 4;
  for (int x = 0; x < 4; ++x) mod2[x] = x % 2;
  Morphism u = check_morphism("mod4", mod4, *a12.alg, *a4.alg);
  Morphism v = check_morphism("mod2", mod2, *a4.alg, *a2.alg);
  CHECK(u.surjective);
  CHECK(is_admissible(*a12.alg, *a12.lat, a12.spec, *a4.lat, a4.spec, u));
  CHECK(is_admissible(*a4.alg, *a4.lat, a4.spec, *a2.lat, a2.spec, v));
}

TEST_CASE("radical laws on corpus rings") {
  for (const FiniteAlgebra& alg : {zn_ring(4), zn_ring(6), zn_ring(12)}) {
    Analysis an = analyze(alg);
    const auto& s = an.s;
    const auto& rad = an.spec.radical;
    for (int x = 0; x < s.size(); ++x) {
      CHECK(s.le(x, rad[x]));
      CHECK(rad[rad[x]] == rad[x]);
      for (int y = 0; y < s.size(); ++y) {
        CHECK(rad[s.meet(x, y)] == s.meet(rad[x], rad[y]));
        CHECK(rad[s.comm(x, y)] == s.meet(rad[x], rad[y]));
        CHECK(rad[s.join(x, y)] == rad[s.join(rad[x], rad[y])]);
        CHECK((s.join(rad[x], rad[y]) == s.top) == (s.join(x, y) == s.top));
      }
    }
  }
}

TEST_CASE("maximal spectra are compact T1 subspaces") {
  Corpus c = shipped_corpus();
  for (const auto& a : c.algebras) {
    Analysis an = analyze(a);
    std::uint64_t max_mask = 0;
    for (size_t i = 0; i < an.spec.primes.size(); ++i)
      if (std::binary_search(an.spec.maximals.begin(), an.spec.maximals.end(),
                             an.spec.primes[i]))
        max_mask |= 1ull << i;
    CHECK(is_t1(subspace(an.zar.top, max_mask)));
  }
}
