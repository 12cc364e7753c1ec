#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "retic/algebra.hpp"
#include "retic/partition.hpp"

namespace retic {

/// Least congruence of a containing all given pairs: union-find merging to
/// fixpoint under one-position substitution into every operation.
Partition cg(const FiniteAlgebra& a, std::span<const std::pair<int, int>> pairs);
Partition cg(const FiniteAlgebra& a, std::initializer_list<std::pair<int, int>> pairs);

/// Join in Con(A): cg of the union of the two partitions.
Partition cg_join(const FiniteAlgebra& a, const Partition& x, const Partition& y);

/// All congruences of a finite algebra with order/join/meet tables.
/// Canonical element order: class count descending, then representative
/// array lexicographically (so index 0 is the identity congruence and the
/// last index is the total one).
struct CongruenceLattice {
  std::vector<Partition> elems;
  int bottom = -1;  // delta
  int top = -1;     // nabla
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<int>> meet;
  std::vector<int> principal;  // indices of PCon(A), sorted
  // In a finite algebra every congruence is finitely generated, so the
  // compact elements are the whole lattice.
  bool all_compact = true;

  int size() const { return static_cast<int>(elems.size()); }
  int index_of(const Partition& p) const;
  bool le(int x, int y) const { return leq[x][y]; }
};

/// Enumerates PCon(A) and closes under binary join (worklist), then builds
/// the order, join and meet tables.
CongruenceLattice con_lattice(const FiniteAlgebra& a);

/// Pentagon (N5) report: modular iff no modular-law violation; on failure
/// carries five witnessing congruence indices {u, p, q, x, v} with
/// u < p < q < v, x incomparable, x^p = x^q = u, x v p = x v q = v.
struct ModularityReport {
  bool modular = true;
  std::array<int, 5> pentagon{-1, -1, -1, -1, -1};
};
ModularityReport is_modular(const CongruenceLattice& lat);

}  // namespace retic
