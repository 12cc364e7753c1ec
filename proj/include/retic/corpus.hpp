#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "retic/algebra.hpp"
#include "retic/structure.hpp"

namespace retic {

/// Ring of integers mod n with operations add/neg/mul/zero/one.
FiniteAlgebra zn_ring(int n);

/// Upper-triangular 2x2 matrices over Z2 (8 elements, nilpotent radical).
FiniteAlgebra t2_z2();

/// Full 2x2 matrix ring over Z2 (16 elements, simple).
FiniteAlgebra m2_z2();

/// Bounded chain 0 < 1 < ... < k-1 with meet/join/bot/top.
FiniteAlgebra chain_lattice(int k);

/// Diamond: bottom, three incomparable atoms, top.
FiniteAlgebra diamond_m3();

/// Pentagon: bottom, a < b, c incomparable to both, top.
FiniteAlgebra pentagon_n5();

/// Four-element set with no operations (negative control for modularity;
/// not a corpus member).
FiniteAlgebra bare_set(int n);

/// Strict 3-chain bottom < a < top with commutator = meet; its spectrum is
/// the nested pair {bottom, a}, which no finite commutative ring exhibits.
CommutatorStructure strict_chain3();

/// Lax 4-chain bottom < a < b < top, commutator = meet except [b,b] = a,
/// K = {bottom, b, top}: the desk-scale witness for K properly inside C.
CommutatorStructure lax_chain4();

/// The shipped corpus: ring-tagged Zn (n = 2..12), T2(Z2), M2(Z2),
/// bounded-lattice chains C2..C5, diamond, pentagon, plus the two abstract
/// structures above.
struct Corpus {
  std::vector<FiniteAlgebra> algebras;
  std::vector<CommutatorStructure> structures;
};
Corpus shipped_corpus();

/// Deterministic generator of validated lax structures: random bounded
/// distributive carriers (closure of random cube subsets) with randomly
/// perturbed commutator tables, filtered through validate_structure.
/// Retries until exactly `count` structures validate.
std::vector<CommutatorStructure> random_lax_structures(int count, int max_size,
                                                       std::uint32_t seed);

/// Named morphisms shipped with the corpus: x mod 4 from z12 to z4 and
/// x mod 2 from z4 to z2.
struct NamedMorphism {
  std::string source;
  std::string target;
  std::vector<int> map;
};
std::vector<NamedMorphism> shipped_morphisms();

}  // namespace retic
