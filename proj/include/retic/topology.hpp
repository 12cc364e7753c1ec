#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "retic/error.hpp"

namespace retic {

/// Finite point set with an open-set family over at most 63 points,
/// represented as bitmasks. The full open family is materialized only up to
/// 16 points; above that only the basis is stored and openness is decided
/// lazily as "union of the basis members it contains".
struct FiniteTopology {
  int npoints = 0;
  std::vector<std::string> point_labels;
  std::vector<std::uint64_t> basis;  // designated basis, deduplicated, sorted
  std::vector<std::uint64_t> opens;  // sorted; empty when not materialized
  bool materialized = false;

  std::uint64_t full() const {
    return npoints == 0 ? 0 : (npoints == 64 ? ~0ull : ((1ull << npoints) - 1));
  }
  bool is_open(std::uint64_t set) const;
  bool is_closed(std::uint64_t set) const { return is_open(full() & ~set); }
  std::vector<std::uint64_t> closed_sets() const;
  std::uint64_t closure(std::uint64_t set) const;
};

/// Builds a topology from a subbasis: closes under finite intersection and
/// arbitrary union, always including the empty set and the full set.
FiniteTopology topology_from_subbasis(int npoints, std::vector<std::string> labels,
                                      const std::vector<std::uint64_t>& subbasis,
                                      const std::vector<std::uint64_t>& designated_basis);

/// Spectral-space checklist for a finite space. Compactness of a finite
/// space (and of each of its subsets) is automatic and recorded as such.
struct SpectralReport {
  bool t0 = false;
  bool sober = false;
  bool compact = true;
  bool basis_intersection_closed = false;
  bool basis_generates = false;
  bool spectral = false;  // compact + t0 + sober (finite case)
  std::string witness;    // first failure, if any
};
SpectralReport spectral_space_check(const FiniteTopology& t);

/// True iff every singleton is closed in the space (finite T1 = discrete).
bool is_t1(const FiniteTopology& t);

/// Subspace topology on the points selected by the mask.
FiniteTopology subspace(const FiniteTopology& t, std::uint64_t pts);

}  // namespace retic
