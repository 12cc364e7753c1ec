#include "retic/spectrum.hpp"

#include <algorithm>

namespace retic {

bool is_prime(const CommutatorStructure& s, int phi) {
  if (phi == s.top) return false;
  for (int a = 0; a < s.size(); ++a) {
    if (!s.in_k[a]) continue;
    for (int b = 0; b < s.size(); ++b) {
      if (!s.in_k[b]) continue;
      if (s.le(s.comm(a, b), phi) && !s.le(a, phi) && !s.le(b, phi)) return false;
    }
  }
  return true;
}

bool is_prime_unreduced(const CommutatorStructure& s, int phi) {
  if (phi == s.top) return false;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (s.le(s.comm(a, b), phi) && !s.le(a, phi) && !s.le(b, phi)) return false;
  return true;
}

SpectrumReport spectrum(const CommutatorStructure& s) {
  SpectrumReport r;
  int m = s.size();
  for (int x = 0; x < m; ++x)
    if (is_prime(s, x)) r.primes.push_back(x);

  for (int x = 0; x < m; ++x) {
    if (x == s.top) continue;
    bool maximal = true;
    for (int y = 0; y < m; ++y)
      if (y != x && y != s.top && s.le(x, y)) {
        maximal = false;
        break;
      }
    if (maximal) r.maximals.push_back(x);
  }

  for (int p : r.primes) {
    bool minimal = true;
    for (int q : r.primes)
      if (q != p && s.le(q, p)) {
        minimal = false;
        break;
      }
    if (minimal) r.minimals.push_back(p);
  }

  r.radical.assign(m, s.top);  // empty meet of primes = top
  for (int x = 0; x < m; ++x) {
    int acc = s.top;
    for (int p : r.primes)
      if (s.le(x, p)) acc = s.meet(acc, p);
    r.radical[x] = acc;
  }
  r.semiprime = (r.radical[s.bottom] == s.bottom);
  for (int x = 0; x < m; ++x)
    if (r.radical[x] == x) r.rcon.push_back(x);
  return r;
}

int frame_join(const CommutatorStructure& s, const SpectrumReport& r, int x, int y) {
  return r.radical[s.join(x, y)];
}

ZariskiTopology zariski(const CommutatorStructure& s, const SpectrumReport& r) {
  ZariskiTopology z;
  int np = static_cast<int>(r.primes.size());
  std::vector<std::string> labels;
  for (int p : r.primes) labels.push_back(s.labels[p]);

  int m = s.size();
  z.v_of.assign(m, 0);
  z.d_of.assign(m, 0);
  std::uint64_t full = np == 0 ? 0 : ((1ull << np) - 1);
  for (int x = 0; x < m; ++x) {
    for (int i = 0; i < np; ++i)
      if (s.le(x, r.primes[i])) z.v_of[x] |= 1ull << i;
    z.d_of[x] = full & ~z.v_of[x];
  }

  std::vector<std::uint64_t> subbasis(z.d_of);
  std::vector<std::uint64_t> designated;
  for (int x = 0; x < m; ++x)
    if (s.in_k[x]) designated.push_back(z.d_of[x]);
  z.top = topology_from_subbasis(np, std::move(labels), subbasis, designated);

  if (z.top.materialized) {
    for (std::uint64_t o : z.top.opens) {
      std::uint64_t u = 0;
      for (std::uint64_t b : z.top.basis)
        if ((b & o) == b) u |= b;
      if (u != o) {
        z.basis_generates = false;
        break;
      }
    }
  }
  return z;
}

Partition morphism_star(const FiniteAlgebra& a, const Morphism& u, const Partition& beta) {
  UnionFind uf(a.n);
  for (int x = 0; x < a.n; ++x)
    for (int y = x + 1; y < a.n; ++y)
      if (beta.same(u.map[x], u.map[y])) uf.unite(x, y);
  return uf.canonical();
}

Partition morphism_bullet(const FiniteAlgebra& a, const FiniteAlgebra& b, const Morphism& u,
                          const Partition& alpha) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < a.n; ++x)
    for (int y = x + 1; y < a.n; ++y)
      if (alpha.same(x, y)) pairs.emplace_back(u.map[x], u.map[y]);
  return cg(b, pairs);
}

bool check_adjunction(const FiniteAlgebra& a, const FiniteAlgebra& b, const Morphism& u,
                      const CongruenceLattice& la, const CongruenceLattice& lb) {
  for (const Partition& alpha : la.elems) {
    Partition up = morphism_bullet(a, b, u, alpha);
    for (const Partition& beta : lb.elems) {
      bool lhs = up.refines(beta);
      bool rhs = alpha.refines(morphism_star(a, u, beta));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_admissible(const FiniteAlgebra& a, const CongruenceLattice& la,
                   const SpectrumReport& ra, const CongruenceLattice& lb,
                   const SpectrumReport& rb, const Morphism& u) {
  for (int psi : rb.primes) {
    Partition pre = morphism_star(a, u, lb.elems[psi]);
    int idx = la.index_of(pre);
    if (idx < 0) return false;
    if (!std::binary_search(ra.primes.begin(), ra.primes.end(), idx)) return false;
  }
  return true;
}

}  // namespace retic
