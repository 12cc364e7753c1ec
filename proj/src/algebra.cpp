#include "retic/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace retic {

namespace {

long long pow_ll(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string tuple_str(std::span<const int> args) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i];
  os << ")";
  return os.str();
}

/// Advances a mixed-radix counter over {0..n-1}^k; returns false on wrap.
bool next_tuple(std::vector<int>& t, int n) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

void validate_algebra(const FiniteAlgebra& a) {
  if (a.n <= 0) throw error(errc::range_violation, a.name + ": size must be positive");
  std::set<std::string> seen;
  for (const auto& op : a.ops) {
    if (!seen.insert(op.name).second)
      throw error(errc::signature_mismatch, a.name + ": duplicate operation name " + op.name);
    if (op.arity < 0)
      throw error(errc::arity_mismatch, a.name + ": negative arity for " + op.name);
    long long want = pow_ll(a.n, op.arity);
    if (static_cast<long long>(op.table.size()) != want) {
      std::ostringstream os;
      os << a.name << ": table for " << op.name << " has " << op.table.size()
         << " entries, expected " << want << " for arity " << op.arity;
      throw error(errc::arity_mismatch, os.str());
    }
    for (size_t i = 0; i < op.table.size(); ++i) {
      if (op.table[i] < 0 || op.table[i] >= a.n) {
        std::ostringstream os;
        os << a.name << ": entry " << op.table[i] << " of " << op.name
           << " at flat index " << i << " is outside {0.." << a.n - 1 << "}";
        throw error(errc::range_violation, os.str());
      }
    }
  }
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.signature() == b.signature()))
    throw error(errc::signature_mismatch,
                "product(" + a.name + ", " + b.name + "): signatures differ");
  FiniteAlgebra p;
  p.name = a.name + "x" + b.name;
  p.n = a.n * b.n;
  for (size_t oi = 0; oi < a.ops.size(); ++oi) {
    const Operation& fa = a.ops[oi];
    const Operation& fb = b.ops[oi];
    Operation op{fa.name, fa.arity, {}};
    op.table.resize(static_cast<size_t>(pow_ll(p.n, fa.arity)));
    std::vector<int> t(fa.arity, 0), ta(fa.arity), tb(fa.arity);
    size_t flat = 0;
    if (fa.arity == 0) {
      op.table[0] = fa.table[0] * b.n + fb.table[0];
    } else {
      do {
        for (int i = 0; i < fa.arity; ++i) {
          ta[i] = t[i] / b.n;
          tb[i] = t[i] % b.n;
        }
        op.table[flat++] = a.apply(fa, ta) * b.n + b.apply(fb, tb);
      } while (next_tuple(t, p.n));
    }
    p.ops.push_back(std::move(op));
  }
  return p;
}

std::optional<CompatibilityWitness> compatibility_violation(const FiniteAlgebra& a,
                                                            const Partition& p) {
  // For each op and each position, substituting a related pair must give
  // related results; by transitivity this suffices for full compatibility.
  for (const auto& op : a.ops) {
    if (op.arity == 0) continue;
    std::vector<int> t(op.arity, 0);
    do {
      int base = a.apply(op, t);
      for (int pos = 0; pos < op.arity; ++pos) {
        int orig = t[pos];
        for (int y = 0; y < a.n; ++y) {
          if (!p.same(orig, y)) continue;
          t[pos] = y;
          int other = a.apply(op, t);
          if (!p.same(base, other)) {
            std::vector<int> rhs = t;
            t[pos] = orig;
            return CompatibilityWitness{op.name, t, rhs};
          }
        }
        t[pos] = orig;
      }
    } while (next_tuple(t, a.n));
  }
  return std::nullopt;
}

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  return !compatibility_violation(a, p).has_value();
}

Quotient quotient(const FiniteAlgebra& a, const Partition& theta) {
  if (!is_congruence(a, theta))
    throw error(errc::not_a_congruence, a.name + ": quotient by a non-congruence");
  std::vector<int> reps;
  std::vector<int> class_index(a.n, -1);
  for (int i = 0; i < a.n; ++i)
    if (theta.rep[i] == i) {
      class_index[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  for (int i = 0; i < a.n; ++i) class_index[i] = class_index[theta.rep[i]];

  Quotient q;
  q.alg.name = a.name + "/theta";
  q.alg.n = static_cast<int>(reps.size());
  q.alg.tags = a.tags;
  q.class_index = class_index;
  for (const auto& op : a.ops) {
    Operation nop{op.name, op.arity, {}};
    nop.table.resize(static_cast<size_t>(pow_ll(q.alg.n, op.arity)));
    std::vector<int> t(op.arity, 0), lifted(op.arity);
    size_t flat = 0;
    if (op.arity == 0) {
      nop.table[0] = class_index[op.table[0]];
    } else {
      do {
        for (int i = 0; i < op.arity; ++i) lifted[i] = reps[t[i]];
        nop.table[flat++] = class_index[a.apply(op, lifted)];
      } while (next_tuple(t, q.alg.n));
    }
    q.alg.ops.push_back(std::move(nop));
  }
  q.proj.name = "p_theta";
  q.proj.source = a.name;
  q.proj.target = q.alg.name;
  q.proj.map = class_index;
  q.proj.surjective = true;
  return q;
}

PairAlgebra pair_subalgebra(const FiniteAlgebra& a, const Partition& alpha) {
  if (!is_congruence(a, alpha))
    throw error(errc::not_a_congruence, a.name + ": pair subalgebra over a non-congruence");
  PairAlgebra pa;
  pa.index_of.assign(static_cast<size_t>(a.n) * a.n, -1);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (alpha.same(x, y)) {
        pa.index_of[x * a.n + y] = static_cast<int>(pa.pair_of.size());
        pa.pair_of.emplace_back(x, y);
      }
  pa.alg.name = a.name + "(alpha)";
  pa.alg.n = static_cast<int>(pa.pair_of.size());
  for (const auto& op : a.ops) {
    Operation nop{op.name, op.arity, {}};
    nop.table.resize(static_cast<size_t>(pow_ll(pa.alg.n, op.arity)));
    std::vector<int> t(op.arity, 0), xs(op.arity), ys(op.arity);
    size_t flat = 0;
    if (op.arity == 0) {
      nop.table[0] = pa.index_of[op.table[0] * a.n + op.table[0]];
    } else {
      do {
        for (int i = 0; i < op.arity; ++i) {
          xs[i] = pa.pair_of[t[i]].first;
          ys[i] = pa.pair_of[t[i]].second;
        }
        int rx = a.apply(op, xs);
        int ry = a.apply(op, ys);
        nop.table[flat++] = pa.index_of[rx * a.n + ry];
      } while (next_tuple(t, pa.alg.n));
    }
    pa.alg.ops.push_back(std::move(nop));
  }
  return pa;
}

Morphism check_morphism(const std::string& name, const std::vector<int>& map,
                        const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (static_cast<int>(map.size()) != a.n)
    throw error(errc::not_a_morphism, name + ": map not total on the source universe");
  for (int v : map)
    if (v < 0 || v >= b.n)
      throw error(errc::range_violation, name + ": map value outside target universe");
  if (!(a.signature() == b.signature()))
    throw error(errc::signature_mismatch, name + ": source and target signatures differ");

  for (size_t oi = 0; oi < a.ops.size(); ++oi) {
    const Operation& fa = a.ops[oi];
    const Operation* fb = b.find_op(fa.name);
    std::vector<int> t(fa.arity, 0), mapped(fa.arity);
    if (fa.arity == 0) {
      if (map[fa.table[0]] != fb->table[0])
        throw error(errc::not_a_morphism,
                    name + ": constant " + fa.name + " not preserved");
      continue;
    }
    do {
      for (int i = 0; i < fa.arity; ++i) mapped[i] = map[t[i]];
      if (map[a.apply(fa, t)] != b.apply(*fb, mapped))
        throw error(errc::not_a_morphism,
                    name + ": operation " + fa.name + " not preserved at " + tuple_str(t));
    } while (next_tuple(t, a.n));
  }

  Morphism m;
  m.name = name;
  m.source = a.name;
  m.target = b.name;
  m.map = map;
  std::vector<bool> hit(b.n, false);
  for (int v : map) hit[v] = true;
  m.surjective = std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
  return m;
}

}  // namespace retic
