#pragma once

#include <string>
#include <variant>
#include <vector>

#include "retic/algebra.hpp"
#include "retic/partition.hpp"
#include "retic/structure.hpp"

namespace retic {

/// Algebra file (.alg): {"kind":"algebra","name":...,"size":n,
///   "ops":[{"name","arity","table"}...],"tags":[...]}
/// with a k-ary table as a depth-k nested array and an arity-0 table as a
/// bare element index. Element indices are decimal integers.
FiniteAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const FiniteAlgebra& a);

/// Structure file (.cms): {"kind":"commutator-structure","name":...,
///   "elements":[names...],"leq":[[x,y]...],"commutator":{"x,y":z,...},
///   "compact":[names...],"principal":[names...],"mode":"strict"|"lax"}
/// leq is closed reflexively and transitively; the commutator map is sparse
/// with default meet and is completed symmetrically. Elements are reordered
/// into a topological sort of the lattice order, ties broken by name.
CommutatorStructure parse_structure(const std::string& text);
std::string serialize_structure(const CommutatorStructure& s);

/// Loads either kind from a file path, validating on the way.
using Loaded = std::variant<FiniteAlgebra, CommutatorStructure>;
Loaded load_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Sorted-classes form, e.g. [[0,2],[1,3]]. All listings ascending.
std::string partition_to_string(const Partition& p);

/// Hasse diagram of a finite order, in dot format.
std::string dot_lattice(const std::vector<std::string>& labels,
                        const std::vector<std::vector<bool>>& leq, const std::string& name);

/// Specialization order of a finite T0 space (edge x -> y when y lies in
/// the closure of x), transitively reduced, in dot format.
std::string dot_specialization(const std::vector<std::string>& labels,
                               const std::vector<std::vector<bool>>& closure_leq,
                               const std::string& name);

}  // namespace retic
