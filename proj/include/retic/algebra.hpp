#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "retic/error.hpp"
#include "retic/partition.hpp"

namespace retic {

struct OpSymbol {
  std::string name;
  int arity = 0;
  bool operator==(const OpSymbol&) const = default;
};

/// Finite signature; names unique, arities >= 0 (arity 0 = constant).
struct Signature {
  std::vector<OpSymbol> symbols;
  bool operator==(const Signature&) const = default;
};

/// Total operation table over universe {0..n-1}. Flat row-major layout:
/// entry for (a1,..,ak) sits at ((a1*n + a2)*n + ...)*n + ak.
struct Operation {
  std::string name;
  int arity = 0;
  std::vector<int> table;
};

/// Finite algebra: universe {0..n-1} plus one total table per symbol.
/// Immutable after validation; all downstream structures reference elements
/// by index.
struct FiniteAlgebra {
  std::string name;
  int n = 0;
  std::vector<Operation> ops;
  std::vector<std::string> tags;  // semantic tags, e.g. "unital-ring", "bounded-lattice"

  Signature signature() const {
    Signature s;
    s.symbols.reserve(ops.size());
    for (const auto& op : ops) s.symbols.push_back({op.name, op.arity});
    return s;
  }

  const Operation* find_op(const std::string& opname) const {
    for (const auto& op : ops)
      if (op.name == opname) return &op;
    return nullptr;
  }

  bool has_tag(const std::string& t) const {
    for (const auto& x : tags)
      if (x == t) return true;
    return false;
  }

  int apply(const Operation& op, std::span<const int> args) const {
    int idx = 0;
    for (int i = 0; i < op.arity; ++i) idx = idx * n + args[i];
    return op.table[idx];
  }

  int apply1(const Operation& op, int a) const { return op.table[a]; }
  int apply2(const Operation& op, int a, int b) const { return op.table[a * n + b]; }
};

/// Map between algebras of the same signature. Stored by value so corpus
/// entries stay relocatable; source/target are identified by name.
struct Morphism {
  std::string name;
  std::string source;
  std::string target;
  std::vector<int> map;
  bool surjective = false;
};

/// Checks universe bounds, table totality and arity/shape agreement.
/// Throws error{arity_mismatch|range_violation} naming the first violation.
void validate_algebra(const FiniteAlgebra& a);

/// Direct product; universe size |a|*|b|, element encoding (x*|b| + y).
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// True iff p is compatible with every operation of a (exhaustive).
/// On failure returns the witnessing operation name and argument pair.
struct CompatibilityWitness {
  std::string op;
  std::vector<int> lhs_args;
  std::vector<int> rhs_args;
};
std::optional<CompatibilityWitness> compatibility_violation(const FiniteAlgebra& a,
                                                            const Partition& p);
bool is_congruence(const FiniteAlgebra& a, const Partition& p);

/// Quotient algebra A/theta plus the canonical projection. Classes are
/// indexed by their least representatives in increasing order.
struct Quotient {
  FiniteAlgebra alg;
  Morphism proj;
  std::vector<int> class_index;  // element of A -> index in A/theta
};
Quotient quotient(const FiniteAlgebra& a, const Partition& theta);

/// Subalgebra of A x A with universe {(x,y) : x theta y}, componentwise
/// operations, plus both index maps.
struct PairAlgebra {
  FiniteAlgebra alg;
  std::vector<std::pair<int, int>> pair_of;  // new index -> (x, y)
  std::vector<int> index_of;                 // x*n + y -> new index, -1 outside
};
PairAlgebra pair_subalgebra(const FiniteAlgebra& a, const Partition& alpha);

/// Accepts iff the map commutes with every shared operation (exhaustive);
/// throws error{not_a_morphism} with the first witnessing op and tuple.
Morphism check_morphism(const std::string& name, const std::vector<int>& map,
                        const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace retic
