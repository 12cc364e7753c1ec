#pragma once

#include <optional>
#include <string>
#include <vector>

#include "retic/algebra.hpp"
#include "retic/congruence.hpp"

namespace retic {

/// Binary commutator of two congruences, computed over the pair subalgebra:
/// D = Cg_{A(alpha)} of the diagonal beta-pairs, result {(x,y) : (x,x) D (x,y)}.
/// Both argument orders are evaluated; a disagreement (a symptom of leaving
/// the congruence-modular setting) throws error{commutator_axiom} with the
/// witnessing pair.
Partition commutator(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta);

/// One orientation only, no cross-check. Exposed for diagnostics.
Partition commutator_oriented(const FiniteAlgebra& a, const Partition& alpha,
                              const Partition& beta);

/// Full table over a congruence lattice: comm[i][j] = index of [c_i, c_j].
struct CommutatorTable {
  std::vector<std::vector<int>> comm;
  int at(int i, int j) const { return comm[i][j]; }
  int size() const { return static_cast<int>(comm.size()); }
};
CommutatorTable commutator_table(const FiniteAlgebra& a, const CongruenceLattice& lat);

/// Diagonal iterate: [alpha,alpha]^1 = [alpha,alpha],
/// [alpha,alpha]^{k+1} = [g,g] for g = [alpha,alpha]^k.
Partition iterated_commutator(const FiniteAlgebra& a, const Partition& alpha, int n);

/// Named ring operations for "unital-ring"-tagged algebras.
struct RingOps {
  const Operation* add;
  const Operation* neg;
  const Operation* mul;
  int zero;
  int one;
};

/// Resolves the tagged ring structure and checks the ring axioms by
/// exhaustion; throws error{not_a_ring} naming the first failure.
RingOps ring_ops(const FiniteAlgebra& a);

/// Independent commutator oracle for unital rings: maps both congruences to
/// their zero-class ideals I, J and returns the congruence of IJ + JI.
Partition ring_ideal_oracle(const FiniteAlgebra& a, const Partition& alpha,
                            const Partition& beta);

/// Zero-class of a congruence of a ring-tagged algebra, as a sorted list.
std::vector<int> zero_class(const FiniteAlgebra& a, const Partition& theta);

/// Two-sided ideal generated by a set of elements, as an indicator vector.
std::vector<bool> ideal_generated_by(const FiniteAlgebra& a, const std::vector<int>& gens);

/// Congruence x ~ y iff x - y lies in the given ideal.
Partition ideal_congruence(const FiniteAlgebra& a, const std::vector<bool>& ideal);

/// Checks that the named meet/join/bot/top operations of a
/// "bounded-lattice"-tagged algebra satisfy the bounded-lattice axioms.
void check_bounded_lattice_tags(const FiniteAlgebra& a);

}  // namespace retic
