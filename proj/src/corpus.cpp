#include "retic/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace retic {

namespace {

Operation binary_table(const std::string& name, int n, int (*f)(int, int, int)) {
  Operation op{name, 2, {}};
  op.table.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) op.table[x * n + y] = f(x, y, n);
  return op;
}

FiniteAlgebra bounded_lattice_algebra(const std::string& name, int n,
                                      const std::vector<std::vector<int>>& meet,
                                      const std::vector<std::vector<int>>& join, int bot,
                                      int top) {
  FiniteAlgebra a;
  a.name = name;
  a.n = n;
  Operation mt{"meet", 2, {}}, jn{"join", 2, {}};
  mt.table.resize(static_cast<size_t>(n) * n);
  jn.table.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      mt.table[x * n + y] = meet[x][y];
      jn.table[x * n + y] = join[x][y];
    }
  a.ops.push_back(std::move(mt));
  a.ops.push_back(std::move(jn));
  a.ops.push_back(Operation{"bot", 0, {bot}});
  a.ops.push_back(Operation{"top", 0, {top}});
  a.tags = {"bounded-lattice"};
  validate_algebra(a);
  return a;
}

}  // namespace

FiniteAlgebra zn_ring(int n) {
  FiniteAlgebra a;
  a.name = "z" + std::to_string(n);
  a.n = n;
  a.ops.push_back(binary_table("add", n, [](int x, int y, int m) { return (x + y) % m; }));
  Operation neg{"neg", 1, {}};
  neg.table.resize(n);
  for (int x = 0; x < n; ++x) neg.table[x] = (n - x) % n;
  a.ops.push_back(std::move(neg));
  a.ops.push_back(binary_table("mul", n, [](int x, int y, int m) { return (x * y) % m; }));
  a.ops.push_back(Operation{"zero", 0, {0}});
  a.ops.push_back(Operation{"one", 0, {1 % n}});
  a.tags = {"unital-ring"};
  validate_algebra(a);
  return a;
}

FiniteAlgebra t2_z2() {
  // element (a,b,c) encodes [[a,b],[0,c]], packed as a*4 + b*2 + c
  FiniteAlgebra alg;
  alg.name = "t2z2";
  alg.n = 8;
  auto pack = [](int a, int b, int c) { return a * 4 + b * 2 + c; };
  Operation add{"add", 2, std::vector<int>(64)}, mul{"mul", 2, std::vector<int>(64)},
      neg{"neg", 1, std::vector<int>(8)};
  for (int x = 0; x < 8; ++x) {
    int xa = x / 4, xb = (x / 2) % 2, xc = x % 2;
    neg.table[x] = x;  // characteristic 2
    for (int y = 0; y < 8; ++y) {
      int ya = y / 4, yb = (y / 2) % 2, yc = y % 2;
      add.table[x * 8 + y] = pack(xa ^ ya, xb ^ yb, xc ^ yc);
      mul.table[x * 8 + y] = pack(xa & ya, (xa & yb) ^ (xb & yc), xc & yc);
    }
  }
  alg.ops = {add, neg, mul, Operation{"zero", 0, {0}}, Operation{"one", 0, {pack(1, 0, 1)}}};
  alg.tags = {"unital-ring"};
  validate_algebra(alg);
  return alg;
}

FiniteAlgebra m2_z2() {
  // element (a,b,c,d) encodes [[a,b],[c,d]], packed as a*8 + b*4 + c*2 + d
  FiniteAlgebra alg;
  alg.name = "m2z2";
  alg.n = 16;
  auto pack = [](int a, int b, int c, int d) { return a * 8 + b * 4 + c * 2 + d; };
  Operation add{"add", 2, std::vector<int>(256)}, mul{"mul", 2, std::vector<int>(256)},
      neg{"neg", 1, std::vector<int>(16)};
  for (int x = 0; x < 16; ++x) {
    int xa = x / 8, xb = (x / 4) % 2, xc = (x / 2) % 2, xd = x % 2;
    neg.table[x] = x;
    for (int y = 0; y < 16; ++y) {
      int ya = y / 8, yb = (y / 4) % 2, yc = (y / 2) % 2, yd = y % 2;
      add.table[x * 16 + y] = pack(xa ^ ya, xb ^ yb, xc ^ yc, xd ^ yd);
      mul.table[x * 16 + y] = pack((xa & ya) ^ (xb & yc), (xa & yb) ^ (xb & yd),
                                   (xc & ya) ^ (xd & yc), (xc & yb) ^ (xd & yd));
    }
  }
  alg.ops = {add, neg, mul, Operation{"zero", 0, {0}},
             Operation{"one", 0, {pack(1, 0, 0, 1)}}};
  alg.tags = {"unital-ring"};
  validate_algebra(alg);
  return alg;
}

FiniteAlgebra chain_lattice(int k) {
  std::vector<std::vector<int>> meet(k, std::vector<int>(k)), join(k, std::vector<int>(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      meet[x][y] = std::min(x, y);
      join[x][y] = std::max(x, y);
    }
  return bounded_lattice_algebra("c" + std::to_string(k), k, meet, join, 0, k - 1);
}

namespace {

FiniteAlgebra lattice_from_order(const std::string& name,
                                 const std::vector<std::vector<bool>>& leq) {
  int n = static_cast<int>(leq.size());
  std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1)),
      join(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (leq[x][z] && leq[y][z]) {
          bool least = true;
          for (int w = 0; w < n; ++w)
            if (leq[x][w] && leq[y][w] && !leq[z][w]) least = false;
          if (least) join[x][y] = z;
        }
        if (leq[z][x] && leq[z][y]) {
          bool greatest = true;
          for (int w = 0; w < n; ++w)
            if (leq[w][x] && leq[w][y] && !leq[w][z]) greatest = false;
          if (greatest) meet[x][y] = z;
        }
      }
  int bot = 0, top = 0;
  for (int x = 0; x < n; ++x) {
    if (std::all_of(leq[x].begin(), leq[x].end(), [](bool b) { return b; })) bot = x;
    bool is_top = true;
    for (int y = 0; y < n; ++y)
      if (!leq[y][x]) is_top = false;
    if (is_top) top = x;
  }
  return bounded_lattice_algebra(name, n, meet, join, bot, top);
}

}  // namespace

FiniteAlgebra diamond_m3() {
  // 0 < {1,2,3} < 4
  int n = 5;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    leq[x][x] = true;
    leq[0][x] = true;
    leq[x][4] = true;
  }
  FiniteAlgebra a = lattice_from_order("m3", leq);
  return a;
}

FiniteAlgebra pentagon_n5() {
  // 0 < 1 < 2 < 4, 0 < 3 < 4, 3 incomparable to 1 and 2
  int n = 5;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    leq[x][x] = true;
    leq[0][x] = true;
    leq[x][4] = true;
  }
  leq[1][2] = true;
  FiniteAlgebra a = lattice_from_order("n5", leq);
  return a;
}

FiniteAlgebra bare_set(int n) {
  FiniteAlgebra a;
  a.name = "bare" + std::to_string(n);
  a.n = n;
  validate_algebra(a);
  return a;
}

namespace {

CommutatorStructure chain_structure(const std::string& name,
                                    const std::vector<std::string>& labels) {
  CommutatorStructure s;
  s.name = name;
  s.labels = labels;
  int m = static_cast<int>(labels.size());
  s.leq.assign(m, std::vector<bool>(m, false));
  for (int x = 0; x < m; ++x)
    for (int y = x; y < m; ++y) s.leq[x][y] = true;
  s.bottom = 0;
  s.top = m - 1;
  complete_lattice_tables(s);
  s.comm_tab = s.meet_tab;
  s.in_k.assign(m, true);
  s.in_p.assign(m, true);
  s.strict = true;
  return s;
}

}  // namespace

CommutatorStructure strict_chain3() {
  CommutatorStructure s = chain_structure("chain3", {"bot", "a", "top"});
  validate_structure(s);
  return s;
}

CommutatorStructure lax_chain4() {
  CommutatorStructure s = chain_structure("lax-chain4", {"bot", "a", "b", "top"});
  s.comm_tab[2][2] = 1;  // [b,b] = a
  s.in_k = {true, false, true, true};
  s.in_p = s.in_k;
  s.strict = false;
  validate_structure(s);
  return s;
}

Corpus shipped_corpus() {
  Corpus c;
  for (int n = 2; n <= 12; ++n) c.algebras.push_back(zn_ring(n));
  c.algebras.push_back(t2_z2());
  c.algebras.push_back(m2_z2());
  for (int k = 2; k <= 5; ++k) c.algebras.push_back(chain_lattice(k));
  c.algebras.push_back(diamond_m3());
  c.algebras.push_back(pentagon_n5());
  c.structures.push_back(strict_chain3());
  c.structures.push_back(lax_chain4());
  return c;
}

std::vector<NamedMorphism> shipped_morphisms() {
  std::vector<NamedMorphism> ms;
  {
    NamedMorphism m{"z12", "z4", {}};
    for (int x = 0; x < 12; ++x) m.map.push_back(x % 4);
    ms.push_back(std::move(m));
  }
  {
    NamedMorphism m{"z4", "z2", {}};
    for (int x = 0; x < 4; ++x) m.map.push_back(x % 2);
    ms.push_back(std::move(m));
  }
  return ms;
}

namespace {

/// Random sublattice of the k-cube: closure of random masks under & and |.
std::vector<std::uint32_t> random_cube_sublattice(std::mt19937& rng, int cube_bits,
                                                  int max_size) {
  std::uint32_t full = (1u << cube_bits) - 1;
  std::set<std::uint32_t> elems{0u, full};
  int picks = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < picks; ++i) elems.insert(static_cast<std::uint32_t>(rng()) & full);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint32_t> cur(elems.begin(), elems.end());
    for (size_t i = 0; i < cur.size() && !grew; ++i)
      for (size_t j = 0; j < i && !grew; ++j) {
        if (elems.insert(cur[i] | cur[j]).second) grew = true;
        if (elems.insert(cur[i] & cur[j]).second) grew = true;
      }
    if (static_cast<int>(elems.size()) > max_size) return {};
  }
  return {elems.begin(), elems.end()};
}

}  // namespace

std::vector<CommutatorStructure> random_lax_structures(int count, int max_size,
                                                       std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<CommutatorStructure> out;
  while (static_cast<int>(out.size()) < count) {
    int cube_bits = 2 + static_cast<int>(rng() % 3);  // 2..4
    auto masks = random_cube_sublattice(rng, cube_bits, max_size);
    if (masks.size() < 2) continue;
    int m = static_cast<int>(masks.size());

    CommutatorStructure s;
    s.name = "fuzz-s" + std::to_string(seed) + "-" + std::to_string(out.size());
    for (int i = 0; i < m; ++i) s.labels.push_back("e" + std::to_string(i));
    s.leq.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) s.leq[i][j] = (masks[i] & masks[j]) == masks[i];
    s.bottom = 0;
    s.top = m - 1;  // masks are sorted; 0 first, full last
    complete_lattice_tables(s);

    // K: random join-closed set containing the bounds
    s.in_k.assign(m, false);
    s.in_k[s.bottom] = s.in_k[s.top] = true;
    for (int i = 0; i < m; ++i)
      if (rng() % 2) s.in_k[i] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (s.in_k[i] && s.in_k[j] && !s.in_k[s.join(i, j)]) {
            s.in_k[s.join(i, j)] = true;
            grew = true;
          }
    }
    s.in_p = s.in_k;
    s.strict = false;

    // commutator: meet, with a few random downward perturbations kept only
    // if the axioms survive
    s.comm_tab = s.meet_tab;
    int tries = static_cast<int>(rng() % 4);
    for (int t = 0; t < tries; ++t) {
      auto backup = s.comm_tab;
      int x = static_cast<int>(rng() % m);
      int y = static_cast<int>(rng() % m);
      std::vector<int> below;
      for (int z = 0; z < m; ++z)
        if (s.le(z, s.meet(x, y))) below.push_back(z);
      int v = below[rng() % below.size()];
      s.comm_tab[x][y] = s.comm_tab[y][x] = v;
      try {
        validate_structure(s);
      } catch (const error&) {
        s.comm_tab = backup;
      }
    }
    try {
      validate_structure(s);
    } catch (const error&) {
      continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace retic
