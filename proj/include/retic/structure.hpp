#pragma once

#include <optional>
#include <string>
#include <vector>

#include "retic/algebra.hpp"
#include "retic/commutator.hpp"
#include "retic/congruence.hpp"

namespace retic {

/// Backend-independent carrier: a finite bounded lattice with a commutator
/// table, a designated compact set K and a generator set P inside K.
/// Strict mode additionally demands join-density of K (every element is the
/// join of the K elements below it); in a finite lattice that forces
/// K to be the whole lattice, which is why lax mode exists at all.
struct CommutatorStructure {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> join_tab;
  std::vector<std::vector<int>> meet_tab;
  std::vector<std::vector<int>> comm_tab;
  int bottom = -1;
  int top = -1;
  std::vector<bool> in_k;
  std::vector<bool> in_p;
  bool strict = true;
  bool from_algebra = false;

  int size() const { return static_cast<int>(labels.size()); }
  bool le(int x, int y) const { return leq[x][y]; }
  int join(int x, int y) const { return join_tab[x][y]; }
  int meet(int x, int y) const { return meet_tab[x][y]; }
  int comm(int x, int y) const { return comm_tab[x][y]; }

  std::vector<int> k_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (in_k[i]) out.push_back(i);
    return out;
  }
  std::vector<int> p_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (in_p[i]) out.push_back(i);
    return out;
  }

  int join_of(const std::vector<int>& xs) const {
    int acc = bottom;
    for (int x : xs) acc = join_tab[acc][x];
    return acc;
  }
  int meet_of(const std::vector<int>& xs) const {
    int acc = top;
    for (int x : xs) acc = meet_tab[acc][x];
    return acc;
  }
};

/// Checks every structural invariant for the requested mode; throws
/// error{lattice_law|commutator_axiom|compact_set|join_density} with a
/// witness tuple on the first failure.
void validate_structure(const CommutatorStructure& s);

/// Builds the order/join/meet tables from a bare reflexive-transitive leq
/// matrix; throws error{lattice_law} if some pair lacks a lub or glb.
void complete_lattice_tables(CommutatorStructure& s);

/// Strict structure of a finite algebra: all congruences are compact,
/// P = principal congruences plus the identity.
CommutatorStructure structure_of(const FiniteAlgebra& a, const CongruenceLattice& lat,
                                 const CommutatorTable& tab);

/// Residuation: join of {c : [a,c] <= b}, by scanning the finite lattice.
int residuum(const CommutatorStructure& s, int a, int b);

/// Annihilator a -> bottom.
int annihilator(const CommutatorStructure& s, int a);

/// Diagonal commutator iterate on the structure.
int iterated_comm(const CommutatorStructure& s, int a, int n);

/// Complemented elements {a : a v a^perp = top}; each member also satisfies
/// [a, a^perp] = bottom.
std::vector<int> boolean_center(const CommutatorStructure& s);

/// Per-K-element minimal n with [a,a]^n complemented, or -1 if the iterate
/// stabilizes outside the center.
struct HyperarchReport {
  bool hyperarchimedean = true;
  std::vector<int> element;  // the K elements probed
  std::vector<int> min_n;    // parallel to element
};
HyperarchReport hyperarchimedean(const CommutatorStructure& s);

}  // namespace retic
