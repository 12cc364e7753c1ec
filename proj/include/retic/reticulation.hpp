#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "retic/spectrum.hpp"
#include "retic/structure.hpp"
#include "retic/topology.hpp"

namespace retic {

/// Closure of K under binary join and commutator, with a provenance trace
/// per member (how it first entered).
struct CSet {
  std::vector<bool> in_c;
  std::vector<std::string> trace;  // "compact", "join(x,y)", "comm(x,y)", "" outside

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(in_c.size()); ++i)
      if (in_c[i]) out.push_back(i);
    return out;
  }
};
CSet c_closure(const CommutatorStructure& s);

/// Quotient of the C-set by equal radical. Classes are ordered by least
/// member element index; the order relation is radical containment.
/// Join and meet descend from join and commutator; both are checked for
/// well-definedness over all member pairs (a failure throws
/// error{not_well_defined} and can only happen in lax mode).
struct ReticulationLattice {
  int nclasses = 0;
  std::vector<std::vector<int>> members;   // class -> sorted member elements
  std::vector<int> lam;                    // element -> class id, -1 outside C
  std::vector<int> class_radical;          // class -> common radical element
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> join_tab;
  std::vector<std::vector<int>> meet_tab;
  int zero = -1;
  int one = -1;
  bool distributive = true;
  std::string distributivity_witness;

  int size() const { return nclasses; }
  bool le(int x, int y) const { return leq[x][y]; }
  int join(int x, int y) const { return join_tab[x][y]; }
  int meet(int x, int y) const { return meet_tab[x][y]; }
};
ReticulationLattice reticulate(const CommutatorStructure& s, const SpectrumReport& r,
                               const CSet& c);

/// Ideals of the reticulation lattice as bitmasks over classes.
struct IdealInfo {
  std::uint64_t mask = 0;
  bool proper = false;
  bool prime = false;
  bool maximal = false;
  bool minimal_prime = false;
};

/// All ideals (nonempty join-closed downsets) of L plus the Stone topology
/// on its prime ideals with basis D_Id(x).
struct IdealFamily {
  std::vector<IdealInfo> ideals;           // sorted by mask
  std::vector<int> primes;                 // indices into ideals
  std::vector<int> maximals;
  std::vector<int> min_primes;
  FiniteTopology stone;                    // points = primes (in order)
  std::vector<std::uint64_t> d_id;         // per class x: mask of primes not containing x

  int index_of(std::uint64_t mask) const;
};
IdealFamily ideal_spectrum(const ReticulationLattice& l);

/// Everything the verification suites need for one instance, computed
/// eagerly (all corpus objects are desk-scale).
struct Analysis {
  CommutatorStructure s;
  SpectrumReport spec;
  ZariskiTopology zar;
  CSet cset;
  ReticulationLattice l;       // meaningful iff retic_ok
  IdealFamily ideals;          // ditto
  bool retic_ok = true;        // false when quotient meet was ill-defined (lax only)
  std::string retic_error;
  std::optional<FiniteAlgebra> alg;
  std::optional<CongruenceLattice> lat;
  ModularityReport modularity;  // of the element lattice
};
Analysis analyze(const FiniteAlgebra& a);
Analysis analyze(CommutatorStructure s);

enum class StarVariant { K, C };

/// theta^* = {lambda(alpha) : alpha in K (resp. C), alpha <= theta}.
/// The K variant may fail to be down-closed; it is completed downward and
/// the flag records whether completion was needed. The C variant is always
/// an ideal as computed.
struct StarResult {
  std::uint64_t mask = 0;
  bool completed = false;
};
StarResult star(const Analysis& an, int theta, StarVariant v);

/// I_* = join of the K elements whose class lies in I. Also audits the
/// compact-membership law (alpha <= I_* iff lambda(alpha) in I for alpha in
/// K); the flag reports it.
struct LowerStarResult {
  int element = -1;
  bool membership_law = true;
};
LowerStarResult lower_star(const Analysis& an, std::uint64_t ideal_mask);

/// Fixedpoint audit: I = (I_*)^* for every ideal (C-variant stars) and the
/// equivalent prime-descent form P_* prime for every prime ideal.
struct FixedpointReport {
  bool ideals_fixed = true;
  bool primes_descend = true;
  std::uint64_t failing_ideal = 0;
  bool has_failure = false;
  std::string witness;
};
FixedpointReport check_fixedpoint(const Analysis& an);

/// Spec_Z(S) <-> Spec_Id(L) correspondence: u(phi) = phi^*, v(P) = P_*.
struct HomeomorphismReport {
  bool precondition = false;    // fixedpoint held
  bool u_into_primes = true;    // u lands in Spec_Id
  bool mutually_inverse = true;
  bool opens_match = true;      // extensional image comparison both ways
  bool max_bijective = true;
  bool min_bijective = true;
  bool max_t1 = true;
  bool min_discrete = true;
  std::string witness;
};
HomeomorphismReport homeomorphism(const Analysis& an);

/// K-criterion: every commutator of K elements contains a K element with
/// the same radical. Also evaluates the generator-pair form over P x P and
/// (on success) the C-witness law and star-variant agreement.
struct QuasiCommutativeReport {
  bool quasi_commutative = true;
  bool p_form_agrees = true;
  bool c_witness = true;        // every theta in C has a K witness below it
  bool star_variants_agree = true;
  int witness_a = -1, witness_b = -1;  // failing K pair, if any
};
QuasiCommutativeReport is_quasi_commutative(const Analysis& an);

/// Spectral-algebra checklist plus the three-way verdict triple.
struct SpectralAlgebraReport {
  SpectralReport space;          // on Spec_Z(S)
  bool compact_d_basis = true;   // automatic for finite spaces; recorded
  bool spectral = false;
  bool quasi_commutative = false;
  bool ideal_fixedpoint = false;
  bool verdicts_agree = false;
};
SpectralAlgebraReport is_spectral_algebra(const Analysis& an);

/// lambda restricted to the complemented congruences vs the Boolean center
/// of L.
struct BooleanCenterReport {
  std::vector<int> center_elements;  // complemented elements of S
  std::vector<int> center_classes;   // complemented classes of L
  bool center_in_k = true;           // B(Con) inside K
  bool lambda_into_center = true;
  bool injective = true;
  bool boolean_morphism = true;
  bool surjective = false;
  bool semiprime = false;
  std::string witness;
};
BooleanCenterReport boolean_center_iso(const Analysis& an);

/// Ann(theta^*) = (theta^perp)^* per element and (Ann(I))_* = (I_*)^perp
/// per ideal, C-variant stars. Runs in observe-only mode when not semiprime.
struct AnnihilatorTransferReport {
  bool semiprime = false;
  bool star_transfer = true;      // per-element identity
  bool lower_transfer = true;     // per-ideal identity
  bool membership_law = true;     // lambda(alpha) in phi^* iff alpha <= phi
  std::string witness;
};
AnnihilatorTransferReport annihilator_transfer(const Analysis& an);

/// The five minimality conditions for a prime, plus their agreement.
struct MinPrimeReport {
  bool applicable = false;  // semiprime and quasi-commutative
  bool in_min = false;                        // (1)
  bool c_implies = false, c_iff = false;      // (2), (3) over C
  bool k_implies = false, k_iff = false;      // (4), (5) over K
  bool agree = false;
};
MinPrimeReport min_prime_check(const Analysis& an, int phi);

/// Annihilator ideal of an ideal of L: elements meeting every member at 0.
std::uint64_t l_annihilator(const ReticulationLattice& l, std::uint64_t ideal_mask);

/// Lattice map L(u) defined by the commuting square from the congruence
/// image map; well-definedness is checked, not assumed.
struct FunctorReport {
  bool well_defined = true;
  bool lattice_morphism = true;
  bool square_commutes = true;
  std::vector<int> class_map;  // L(A) class -> L(B) class
  std::string witness;
};
FunctorReport retic_functor(const Analysis& a, const Analysis& b, const Morphism& u);

}  // namespace retic
