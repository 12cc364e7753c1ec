#include "retic/structure.hpp"

#include <algorithm>
#include <sstream>

namespace retic {

namespace {

std::string at(const CommutatorStructure& s, int x) { return s.labels[x]; }

}  // namespace

void complete_lattice_tables(CommutatorStructure& s) {
  int m = s.size();
  s.join_tab.assign(m, std::vector<int>(m, -1));
  s.meet_tab.assign(m, std::vector<int>(m, -1));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      std::vector<int> ub, lb;
      for (int z = 0; z < m; ++z) {
        if (s.le(x, z) && s.le(y, z)) ub.push_back(z);
        if (s.le(z, x) && s.le(z, y)) lb.push_back(z);
      }
      for (int u : ub)
        if (std::all_of(ub.begin(), ub.end(), [&](int w) { return s.le(u, w); }))
          s.join_tab[x][y] = u;
      for (int u : lb)
        if (std::all_of(lb.begin(), lb.end(), [&](int w) { return s.le(w, u); }))
          s.meet_tab[x][y] = u;
      if (s.join_tab[x][y] < 0)
        throw error(errc::lattice_law,
                    s.name + ": no least upper bound for {" + at(s, x) + "," + at(s, y) + "}");
      if (s.meet_tab[x][y] < 0)
        throw error(errc::lattice_law,
                    s.name + ": no greatest lower bound for {" + at(s, x) + "," + at(s, y) + "}");
    }
}

void validate_structure(const CommutatorStructure& s) {
  int m = s.size();
  if (m == 0) throw error(errc::lattice_law, s.name + ": empty element set");

  // order axioms
  for (int x = 0; x < m; ++x) {
    if (!s.le(x, x)) throw error(errc::lattice_law, s.name + ": order not reflexive at " + at(s, x));
    for (int y = 0; y < m; ++y) {
      if (x != y && s.le(x, y) && s.le(y, x))
        throw error(errc::lattice_law,
                    s.name + ": order not antisymmetric on {" + at(s, x) + "," + at(s, y) + "}");
      for (int z = 0; z < m; ++z)
        if (s.le(x, y) && s.le(y, z) && !s.le(x, z))
          throw error(errc::lattice_law, s.name + ": order not transitive through " + at(s, y));
    }
  }
  if (s.bottom < 0 || s.top < 0)
    throw error(errc::lattice_law, s.name + ": bottom/top not designated");
  for (int x = 0; x < m; ++x)
    if (!s.le(s.bottom, x) || !s.le(x, s.top))
      throw error(errc::lattice_law, s.name + ": " + at(s, x) + " violates the bounds");

  // join/meet tables must be the actual lub/glb
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int j = s.join(x, y), w = s.meet(x, y);
      if (!s.le(x, j) || !s.le(y, j) || !s.le(w, x) || !s.le(w, y))
        throw error(errc::lattice_law, s.name + ": join/meet tables disagree with the order");
      for (int z = 0; z < m; ++z) {
        if (s.le(x, z) && s.le(y, z) && !s.le(j, z))
          throw error(errc::lattice_law,
                      s.name + ": join(" + at(s, x) + "," + at(s, y) + ") is not least");
        if (s.le(z, x) && s.le(z, y) && !s.le(z, w))
          throw error(errc::lattice_law,
                      s.name + ": meet(" + at(s, x) + "," + at(s, y) + ") is not greatest");
      }
    }

  // commutator axioms
  if (s.comm(s.top, s.top) != s.top)
    throw error(errc::commutator_axiom, s.name + ": [top,top] must be top");
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (s.comm(x, y) != s.comm(y, x))
        throw error(errc::commutator_axiom,
                    s.name + ": commutator not symmetric at {" + at(s, x) + "," + at(s, y) + "}");
      if (!s.le(s.comm(x, y), s.meet(x, y)))
        throw error(errc::commutator_axiom,
                    s.name + ": [" + at(s, x) + "," + at(s, y) + "] exceeds the meet");
      for (int z = 0; z < m; ++z) {
        if (s.le(y, z) && !s.le(s.comm(x, y), s.comm(x, z)))
          throw error(errc::commutator_axiom,
                      s.name + ": commutator not monotone at {" + at(s, x) + "," + at(s, y) +
                          "<=" + at(s, z) + "}");
        if (s.comm(x, s.join(y, z)) != s.join(s.comm(x, y), s.comm(x, z)))
          throw error(errc::commutator_axiom,
                      s.name + ": commutator does not distribute over " + at(s, y) + " v " +
                          at(s, z));
      }
    }

  // compact set
  if (static_cast<int>(s.in_k.size()) != m || static_cast<int>(s.in_p.size()) != m)
    throw error(errc::compact_set, s.name + ": K/P indicator size mismatch");
  if (!s.in_k[s.bottom] || !s.in_k[s.top])
    throw error(errc::compact_set, s.name + ": K must contain bottom and top");
  for (int x = 0; x < m; ++x) {
    if (s.in_p[x] && !s.in_k[x])
      throw error(errc::compact_set, s.name + ": P member " + at(s, x) + " outside K");
    for (int y = 0; y < m; ++y)
      if (s.in_k[x] && s.in_k[y] && !s.in_k[s.join(x, y)])
        throw error(errc::compact_set,
                    s.name + ": K not closed under join at {" + at(s, x) + "," + at(s, y) + "}");
  }
  for (int x = 0; x < m; ++x) {
    if (!s.in_k[x]) continue;
    int acc = s.bottom;
    for (int p = 0; p < m; ++p)
      if (s.in_p[p] && s.le(p, x)) acc = s.join(acc, p);
    if (acc != x)
      throw error(errc::compact_set,
                  s.name + ": K element " + at(s, x) + " is not a join of P elements");
  }

  if (s.strict) {
    for (int x = 0; x < m; ++x) {
      int acc = s.bottom;
      for (int k = 0; k < m; ++k)
        if (s.in_k[k] && s.le(k, x)) acc = s.join(acc, k);
      if (acc != x)
        throw error(errc::join_density,
                    s.name + ": element " + at(s, x) + " is not a join of K elements below it");
    }
    // join-density plus join-closure exhausts a finite lattice; this is the
    // reason lax mode exists at all
    for (int x = 0; x < m; ++x)
      if (!s.in_k[x])
        throw error(errc::join_density,
                    s.name + ": strict mode left " + at(s, x) + " outside K");
  }
}

CommutatorStructure structure_of(const FiniteAlgebra& a, const CongruenceLattice& lat,
                                 const CommutatorTable& tab) {
  CommutatorStructure s;
  s.name = a.name;
  int k = lat.size();
  s.labels.resize(k);
  for (int i = 0; i < k; ++i) s.labels[i] = "c" + std::to_string(i);
  s.leq.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s.leq[i][j] = lat.leq[i][j];
  s.join_tab = lat.join;
  s.meet_tab = lat.meet;
  s.comm_tab = tab.comm;
  s.bottom = lat.bottom;
  s.top = lat.top;
  s.in_k.assign(k, true);  // finite algebra: every congruence is compact
  s.in_p.assign(k, false);
  s.in_p[lat.bottom] = true;
  for (int i : lat.principal) s.in_p[i] = true;
  s.strict = true;
  s.from_algebra = true;
  validate_structure(s);
  return s;
}

int residuum(const CommutatorStructure& s, int a, int b) {
  int acc = s.bottom;
  for (int c = 0; c < s.size(); ++c)
    if (s.le(s.comm(a, c), b)) acc = s.join(acc, c);
  return acc;
}

int annihilator(const CommutatorStructure& s, int a) { return residuum(s, a, s.bottom); }

int iterated_comm(const CommutatorStructure& s, int a, int n) {
  int g = s.comm(a, a);
  for (int k = 1; k < n; ++k) {
    int next = s.comm(g, g);
    if (next == g) return g;
    g = next;
  }
  return g;
}

std::vector<int> boolean_center(const CommutatorStructure& s) {
  std::vector<int> out;
  for (int a = 0; a < s.size(); ++a) {
    int perp = annihilator(s, a);
    if (s.join(a, perp) == s.top) {
      // join-distributivity makes [a, a^perp] = bottom automatic; keep the
      // sanity check as a structural invariant
      if (s.comm(a, perp) != s.bottom)
        throw error(errc::commutator_axiom,
                    s.name + ": annihilator of " + s.labels[a] + " fails [a,a^perp]=bottom");
      out.push_back(a);
    }
  }
  return out;
}

HyperarchReport hyperarchimedean(const CommutatorStructure& s) {
  HyperarchReport r;
  std::vector<int> center = boolean_center(s);
  auto in_center = [&center](int x) {
    return std::find(center.begin(), center.end(), x) != center.end();
  };
  for (int a = 0; a < s.size(); ++a) {
    if (!s.in_k[a]) continue;
    r.element.push_back(a);
    int g = s.comm(a, a);
    int n = 1;
    int found = -1;
    for (;; ++n) {
      if (in_center(g)) {
        found = n;
        break;
      }
      int next = s.comm(g, g);
      if (next == g) break;  // stabilized outside the center
      g = next;
      if (n > s.size() + 1) break;
    }
    r.min_n.push_back(found);
    if (found < 0) r.hyperarchimedean = false;
  }
  return r;
}

}  // namespace retic
