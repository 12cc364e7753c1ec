#pragma once

#include <string>
#include <vector>

#include "retic/structure.hpp"
#include "retic/topology.hpp"

namespace retic {

/// Primes, maximal/minimal spectra, the radical map and the radical frame.
struct SpectrumReport {
  std::vector<int> primes;    // element indices, ascending
  std::vector<int> maximals;  // maximal proper elements (subset of primes)
  std::vector<int> minimals;  // minimal primes
  std::vector<int> radical;   // per element: meet of primes above it (top if none)
  bool semiprime = false;     // radical[bottom] == bottom
  std::vector<int> rcon;      // radical elements, ascending
};

/// phi != top and [a,b] <= phi forces a <= phi or b <= phi for a,b in K.
bool is_prime(const CommutatorStructure& s, int phi);

/// Same test quantified over the whole lattice instead of K.
bool is_prime_unreduced(const CommutatorStructure& s, int phi);

SpectrumReport spectrum(const CommutatorStructure& s);

/// Frame join on radical elements: rho(x v y).
int frame_join(const CommutatorStructure& s, const SpectrumReport& r, int x, int y);

/// Zariski topology on the primes: opens generated by D(theta) over all
/// elements, designated basis {D(a) : a in K}. basis_generates is false only
/// when the K-basis fails to cover some open (possible in lax mode only).
struct ZariskiTopology {
  FiniteTopology top;
  std::vector<std::uint64_t> v_of;  // per element: mask of primes above it
  std::vector<std::uint64_t> d_of;  // per element: complement of v_of
  bool basis_generates = true;
};
ZariskiTopology zariski(const CommutatorStructure& s, const SpectrumReport& r);

/// u^*: preimage congruence of the target algebra; always a congruence.
Partition morphism_star(const FiniteAlgebra& a, const Morphism& u, const Partition& beta);

/// u^bullet: congruence of the target generated by the image pairs.
Partition morphism_bullet(const FiniteAlgebra& a, const FiniteAlgebra& b, const Morphism& u,
                          const Partition& alpha);

/// Exhaustive adjunction audit: u^bullet(alpha) <= beta iff alpha <= u^*(beta).
bool check_adjunction(const FiniteAlgebra& a, const FiniteAlgebra& b, const Morphism& u,
                      const CongruenceLattice& la, const CongruenceLattice& lb);

/// u is admissible iff u^* maps primes of B to primes of A.
bool is_admissible(const FiniteAlgebra& a, const CongruenceLattice& la,
                   const SpectrumReport& ra, const CongruenceLattice& lb,
                   const SpectrumReport& rb, const Morphism& u);

}  // namespace retic
