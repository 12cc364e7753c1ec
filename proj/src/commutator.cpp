#include "retic/commutator.hpp"

#include <algorithm>
#include <sstream>

namespace retic {

Partition commutator_oriented(const FiniteAlgebra& a, const Partition& alpha,
                              const Partition& beta) {
  PairAlgebra pa = pair_subalgebra(a, alpha);
  std::vector<std::pair<int, int>> diag;
  for (int c = 0; c < a.n; ++c)
    for (int d = 0; d < a.n; ++d)
      if (beta.same(c, d))
        diag.emplace_back(pa.index_of[c * a.n + c], pa.index_of[d * a.n + d]);
  Partition dcong = cg(pa.alg, diag);

  UnionFind uf(a.n);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      if (!alpha.same(x, y)) continue;
      int xx = pa.index_of[x * a.n + x];
      int xy = pa.index_of[x * a.n + y];
      if (dcong.same(xx, xy)) uf.unite(x, y);
    }
  return uf.canonical();
}

Partition commutator(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta) {
  Partition lr = commutator_oriented(a, alpha, beta);
  Partition rl = commutator_oriented(a, beta, alpha);
  if (!(lr == rl)) {
    std::ostringstream os;
    os << a.name << ": the two orientations of the commutator construction disagree; "
       << "the algebra is outside the congruence-modular setting";
    throw error(errc::commutator_axiom, os.str());
  }
  return lr;
}

CommutatorTable commutator_table(const FiniteAlgebra& a, const CongruenceLattice& lat) {
  int k = lat.size();
  CommutatorTable t;
  t.comm.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= i; ++j) {
      Partition c = commutator(a, lat.elems[i], lat.elems[j]);
      int idx = lat.index_of(c);
      if (idx < 0)
        throw error(errc::not_a_congruence,
                    a.name + ": commutator landed outside the congruence lattice");
      t.comm[i][j] = t.comm[j][i] = idx;
    }
  return t;
}

Partition iterated_commutator(const FiniteAlgebra& a, const Partition& alpha, int n) {
  Partition g = commutator(a, alpha, alpha);
  for (int k = 1; k < n; ++k) {
    Partition next = commutator(a, g, g);
    if (next == g) return g;  // descending chain stabilized
    g = std::move(next);
  }
  return g;
}

RingOps ring_ops(const FiniteAlgebra& a) {
  RingOps r{};
  const Operation* zero = a.find_op("zero");
  const Operation* one = a.find_op("one");
  r.add = a.find_op("add");
  r.neg = a.find_op("neg");
  r.mul = a.find_op("mul");
  if (!r.add || !r.neg || !r.mul || !zero || !one)
    throw error(errc::not_a_ring,
                a.name + ": ring tags require operations add/neg/mul/zero/one");
  if (r.add->arity != 2 || r.neg->arity != 1 || r.mul->arity != 2 || zero->arity != 0 ||
      one->arity != 0)
    throw error(errc::not_a_ring, a.name + ": ring operation arities are wrong");
  r.zero = zero->table[0];
  r.one = one->table[0];

  const int n = a.n;
  auto add = [&](int x, int y) { return a.apply2(*r.add, x, y); };
  auto mul = [&](int x, int y) { return a.apply2(*r.mul, x, y); };
  for (int x = 0; x < n; ++x) {
    if (add(x, r.zero) != x || add(r.zero, x) != x)
      throw error(errc::not_a_ring, a.name + ": zero is not an additive identity");
    if (add(x, a.apply1(*r.neg, x)) != r.zero)
      throw error(errc::not_a_ring, a.name + ": neg is not an additive inverse");
    if (mul(x, r.one) != x || mul(r.one, x) != x)
      throw error(errc::not_a_ring, a.name + ": one is not a multiplicative identity");
    for (int y = 0; y < n; ++y) {
      if (add(x, y) != add(y, x))
        throw error(errc::not_a_ring, a.name + ": addition is not commutative");
      for (int z = 0; z < n; ++z) {
        if (add(add(x, y), z) != add(x, add(y, z)))
          throw error(errc::not_a_ring, a.name + ": addition is not associative");
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw error(errc::not_a_ring, a.name + ": multiplication is not associative");
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z)) ||
            mul(add(x, y), z) != add(mul(x, z), mul(y, z)))
          throw error(errc::not_a_ring, a.name + ": distributivity fails");
      }
    }
  }
  return r;
}

std::vector<int> zero_class(const FiniteAlgebra& a, const Partition& theta) {
  RingOps r = ring_ops(a);
  std::vector<int> out;
  for (int x = 0; x < a.n; ++x)
    if (theta.same(x, r.zero)) out.push_back(x);
  return out;
}

std::vector<bool> ideal_generated_by(const FiniteAlgebra& a, const std::vector<int>& gens) {
  RingOps r = ring_ops(a);
  std::vector<bool> in(a.n, false);
  in[r.zero] = true;
  std::vector<int> work;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  for (int g : gens) push(g);
  // every member is popped once; a pair (u,v) is seen when the later pop
  // happens, so additive closure completes without a second pass
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    push(a.apply1(*r.neg, x));
    for (int y = 0; y < a.n; ++y) {
      if (in[y]) push(a.apply2(*r.add, x, y));
      push(a.apply2(*r.mul, x, y));
      push(a.apply2(*r.mul, y, x));
    }
  }
  return in;
}

Partition ideal_congruence(const FiniteAlgebra& a, const std::vector<bool>& ideal) {
  RingOps r = ring_ops(a);
  UnionFind uf(a.n);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (ideal[a.apply2(*r.add, x, a.apply1(*r.neg, y))]) uf.unite(x, y);
  return uf.canonical();
}

Partition ring_ideal_oracle(const FiniteAlgebra& a, const Partition& alpha,
                            const Partition& beta) {
  RingOps r = ring_ops(a);
  std::vector<int> ia = zero_class(a, alpha);
  std::vector<int> ib = zero_class(a, beta);
  std::vector<int> gens;
  for (int i : ia)
    for (int j : ib) {
      gens.push_back(a.apply2(*r.mul, i, j));
      gens.push_back(a.apply2(*r.mul, j, i));
    }
  return ideal_congruence(a, ideal_generated_by(a, gens));
}

void check_bounded_lattice_tags(const FiniteAlgebra& a) {
  const Operation* meet = a.find_op("meet");
  const Operation* join = a.find_op("join");
  const Operation* bot = a.find_op("bot");
  const Operation* top = a.find_op("top");
  if (!meet || !join || !bot || !top || meet->arity != 2 || join->arity != 2 ||
      bot->arity != 0 || top->arity != 0)
    throw error(errc::not_a_lattice,
                a.name + ": lattice tags require meet/join binary and bot/top constants");
  auto mt = [&](int x, int y) { return a.apply2(*meet, x, y); };
  auto jn = [&](int x, int y) { return a.apply2(*join, x, y); };
  int b = bot->table[0], t = top->table[0];
  for (int x = 0; x < a.n; ++x) {
    if (mt(x, x) != x || jn(x, x) != x)
      throw error(errc::not_a_lattice, a.name + ": idempotence fails");
    if (jn(x, b) != x || mt(x, t) != x || mt(x, b) != b || jn(x, t) != t)
      throw error(errc::not_a_lattice, a.name + ": bounds are not neutral/absorbing");
    for (int y = 0; y < a.n; ++y) {
      if (mt(x, y) != mt(y, x) || jn(x, y) != jn(y, x))
        throw error(errc::not_a_lattice, a.name + ": commutativity fails");
      if (mt(x, jn(x, y)) != x || jn(x, mt(x, y)) != x)
        throw error(errc::not_a_lattice, a.name + ": absorption fails");
      for (int z = 0; z < a.n; ++z)
        if (mt(mt(x, y), z) != mt(x, mt(y, z)) || jn(jn(x, y), z) != jn(x, jn(y, z)))
          throw error(errc::not_a_lattice, a.name + ": associativity fails");
    }
  }
}

}  // namespace retic
