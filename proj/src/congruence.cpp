#include "retic/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace retic {

namespace {

/// Closes the union-find under compatibility: whenever x ~ y got merged,
/// substituting x and y at each position of each operation must merge the
/// results too. Worklist over merged pairs.
void close_under_operations(const FiniteAlgebra& a, UnionFind& uf,
                            std::deque<std::pair<int, int>> work) {
  std::vector<int> t;
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (const auto& op : a.ops) {
      if (op.arity == 0) continue;
      t.assign(op.arity, 0);
      // iterate over all assignments of the remaining positions
      for (int pos = 0; pos < op.arity; ++pos) {
        std::fill(t.begin(), t.end(), 0);
        bool more = true;
        while (more) {
          t[pos] = x;
          int rx = a.apply(op, t);
          t[pos] = y;
          int ry = a.apply(op, t);
          if (uf.unite(rx, ry)) work.emplace_back(rx, ry);
          // advance the counter, skipping position pos
          more = false;
          for (int i = op.arity - 1; i >= 0; --i) {
            if (i == pos) continue;
            if (++t[i] < a.n) {
              more = true;
              break;
            }
            t[i] = 0;
          }
        }
      }
    }
  }
}

}  // namespace

Partition cg(const FiniteAlgebra& a, std::span<const std::pair<int, int>> pairs) {
  UnionFind uf(a.n);
  std::deque<std::pair<int, int>> work;
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= a.n || y < 0 || y >= a.n)
      throw error(errc::range_violation, a.name + ": generator pair outside universe");
    if (uf.unite(x, y)) work.emplace_back(x, y);
  }
  close_under_operations(a, uf, std::move(work));
  return uf.canonical();
}

Partition cg(const FiniteAlgebra& a, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<std::pair<int, int>> v(pairs);
  return cg(a, std::span<const std::pair<int, int>>(v));
}

Partition cg_join(const FiniteAlgebra& a, const Partition& x, const Partition& y) {
  UnionFind uf(a.n);
  std::deque<std::pair<int, int>> work;
  for (int i = 0; i < a.n; ++i) {
    if (uf.unite(i, x.rep[i])) work.emplace_back(i, x.rep[i]);
    if (uf.unite(i, y.rep[i])) work.emplace_back(i, y.rep[i]);
  }
  close_under_operations(a, uf, std::move(work));
  return uf.canonical();
}

int CongruenceLattice::index_of(const Partition& p) const {
  for (int i = 0; i < size(); ++i)
    if (elems[i] == p) return i;
  return -1;
}

CongruenceLattice con_lattice(const FiniteAlgebra& a) {
  std::vector<Partition> found;
  auto add = [&found](const Partition& p) {
    if (std::find(found.begin(), found.end(), p) == found.end()) {
      found.push_back(p);
      return true;
    }
    return false;
  };

  add(Partition::identity(a.n));
  std::vector<Partition> principal_parts;
  for (int x = 0; x < a.n; ++x)
    for (int y = x + 1; y < a.n; ++y) {
      std::pair<int, int> pr{x, y};
      Partition p = cg(a, std::span<const std::pair<int, int>>(&pr, 1));
      if (std::find(principal_parts.begin(), principal_parts.end(), p) ==
          principal_parts.end())
        principal_parts.push_back(p);
      add(p);
    }

  // close under binary join; found grows while iterating, re-run until stable
  for (bool grew = true; grew;) {
    grew = false;
    size_t sz = found.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = 0; j < i; ++j)
        if (add(cg_join(a, found[i], found[j]))) grew = true;
  }

  CongruenceLattice lat;
  lat.elems = std::move(found);
  std::sort(lat.elems.begin(), lat.elems.end(), [](const Partition& p, const Partition& q) {
    int cp = p.num_classes(), cq = q.num_classes();
    if (cp != cq) return cp > cq;
    return p.rep < q.rep;
  });

  int k = lat.size();
  lat.bottom = lat.index_of(Partition::identity(a.n));
  lat.top = lat.index_of(Partition::all(a.n));
  lat.leq.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) lat.leq[i][j] = lat.elems[i].refines(lat.elems[j]);
  lat.join.assign(k, std::vector<int>(k, -1));
  lat.meet.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= i; ++j) {
      int jn = lat.index_of(cg_join(a, lat.elems[i], lat.elems[j]));
      int mt = lat.index_of(lat.elems[i].meet(lat.elems[j]));
      lat.join[i][j] = lat.join[j][i] = jn;
      lat.meet[i][j] = lat.meet[j][i] = mt;
    }
  for (const auto& p : principal_parts) lat.principal.push_back(lat.index_of(p));
  std::sort(lat.principal.begin(), lat.principal.end());
  lat.principal.erase(std::unique(lat.principal.begin(), lat.principal.end()),
                      lat.principal.end());
  return lat;
}

ModularityReport is_modular(const CongruenceLattice& lat) {
  int k = lat.size();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (!lat.le(a, b)) continue;
      for (int x = 0; x < k; ++x) {
        int lhs = lat.join[a][lat.meet[x][b]];
        int rhs = lat.meet[lat.join[a][x]][b];
        if (lhs != rhs) {
          // a <= b, a v (x ^ b) < (a v x) ^ b: extract the pentagon
          ModularityReport r;
          r.modular = false;
          int u = lat.meet[x][b];
          int v = lat.join[a][x];
          r.pentagon = {u, lhs, rhs, x, v};
          return r;
        }
      }
    }
  return ModularityReport{};
}

}  // namespace retic
