#pragma once

#include <stdexcept>
#include <string>

namespace retic {

enum class errc {
  parse,
  arity_mismatch,
  range_violation,
  signature_mismatch,
  not_a_congruence,
  not_a_morphism,
  not_a_ring,
  not_a_lattice,
  lattice_law,
  commutator_axiom,
  compact_set,
  join_density,
  distributivity,
  basis,
  not_well_defined,
  invalid_input,
};

/// All validation failures carry a kind plus a witness message naming the
/// first violated invariant.
class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

inline const char* errc_name(errc k) {
  switch (k) {
    case errc::parse: return "ParseError";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::range_violation: return "RangeViolation";
    case errc::signature_mismatch: return "SignatureMismatch";
    case errc::not_a_congruence: return "NotACongruence";
    case errc::not_a_morphism: return "NotAMorphism";
    case errc::not_a_ring: return "NotARing";
    case errc::not_a_lattice: return "NotALattice";
    case errc::lattice_law: return "LatticeLawViolation";
    case errc::commutator_axiom: return "CommutatorAxiomViolation";
    case errc::compact_set: return "CompactSetViolation";
    case errc::join_density: return "JoinDensityViolation";
    case errc::distributivity: return "DistributivityViolation";
    case errc::basis: return "BasisViolation";
    case errc::not_well_defined: return "NotWellDefined";
    case errc::invalid_input: return "InvalidInput";
  }
  return "Error";
}

}  // namespace retic
