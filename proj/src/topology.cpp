#include "retic/topology.hpp"

#include <algorithm>
#include <set>

namespace retic {

namespace {

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool FiniteTopology::is_open(std::uint64_t set) const {
  if (materialized) return std::binary_search(opens.begin(), opens.end(), set);
  std::uint64_t u = 0;
  for (std::uint64_t b : basis)
    if ((b & set) == b) u |= b;
  return u == set;
}

std::vector<std::uint64_t> FiniteTopology::closed_sets() const {
  std::vector<std::uint64_t> out;
  if (materialized) {
    out.reserve(opens.size());
    for (std::uint64_t o : opens) out.push_back(full() & ~o);
    return sorted_unique(std::move(out));
  }
  // lazy form: enumerate unions of basis members
  std::set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> work{0};
  while (!work.empty()) {
    std::uint64_t cur = work.back();
    work.pop_back();
    for (std::uint64_t b : basis) {
      std::uint64_t nx = cur | b;
      if (seen.insert(nx).second) work.push_back(nx);
    }
  }
  for (std::uint64_t o : seen) out.push_back(full() & ~o);
  return sorted_unique(std::move(out));
}

std::uint64_t FiniteTopology::closure(std::uint64_t set) const {
  // closed sets are intersection-closed, so the intersection below is closed
  std::uint64_t acc = full();
  for (std::uint64_t c : closed_sets())
    if ((set & c) == set) acc &= c;
  return acc;
}

FiniteTopology topology_from_subbasis(int npoints, std::vector<std::string> labels,
                                      const std::vector<std::uint64_t>& subbasis,
                                      const std::vector<std::uint64_t>& designated_basis) {
  if (npoints > 63)
    throw error(errc::invalid_input, "topology over more than 63 points is unsupported");
  FiniteTopology t;
  t.npoints = npoints;
  t.point_labels = std::move(labels);
  t.basis = sorted_unique(designated_basis);

  if (npoints <= 16) {
    std::set<std::uint64_t> fam(subbasis.begin(), subbasis.end());
    fam.insert(0);
    fam.insert(t.full());
    // close under pairwise union and intersection to a fixpoint
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<std::uint64_t> cur(fam.begin(), fam.end());
      for (size_t i = 0; i < cur.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
          if (fam.insert(cur[i] | cur[j]).second) grew = true;
          if (fam.insert(cur[i] & cur[j]).second) grew = true;
        }
    }
    t.opens.assign(fam.begin(), fam.end());
    t.materialized = true;
  } else {
    t.materialized = false;
  }
  return t;
}

SpectralReport spectral_space_check(const FiniteTopology& t) {
  SpectralReport r;
  auto closed = t.closed_sets();
  auto close_of = [&closed, &t](std::uint64_t set) {
    std::uint64_t acc = t.full();
    for (std::uint64_t c : closed)
      if ((set & c) == set) acc &= c;
    return acc;
  };
  std::vector<std::uint64_t> point_closure(t.npoints);
  for (int p = 0; p < t.npoints; ++p) point_closure[p] = close_of(1ull << p);

  // T0: distinct points have distinct closures
  r.t0 = true;
  for (int p = 0; p < t.npoints && r.t0; ++p)
    for (int q = p + 1; q < t.npoints && r.t0; ++q)
      if (point_closure[p] == point_closure[q]) {
        r.t0 = false;
        r.witness = "points " + t.point_labels[p] + " and " + t.point_labels[q] +
                    " are topologically indistinguishable";
      }

  // sobriety: every irreducible closed set has a unique generic point
  r.sober = true;
  for (std::uint64_t c : closed) {
    if (c == 0) continue;
    bool irreducible = true;
    for (std::uint64_t f1 : closed) {
      if (!irreducible) break;
      if ((c & f1) == c) continue;  // c inside f1: the split is trivial
      for (std::uint64_t f2 : closed) {
        if ((c & f2) == c) continue;
        if ((c & (f1 | f2)) == c) {
          irreducible = false;
          break;
        }
      }
    }
    if (!irreducible) continue;
    int generic = 0;
    for (int p = 0; p < t.npoints; ++p)
      if ((c >> p) & 1)
        if (point_closure[p] == c) ++generic;
    if (generic != 1) {
      r.sober = false;
      r.witness = "irreducible closed set with " + std::to_string(generic) + " generic points";
      break;
    }
  }

  r.basis_intersection_closed = true;
  for (std::uint64_t b1 : t.basis) {
    for (std::uint64_t b2 : t.basis)
      if (!std::binary_search(t.basis.begin(), t.basis.end(), b1 & b2)) {
        r.basis_intersection_closed = false;
        break;
      }
    if (!r.basis_intersection_closed) break;
  }

  r.basis_generates = true;
  if (t.materialized) {
    for (std::uint64_t o : t.opens) {
      std::uint64_t u = 0;
      for (std::uint64_t b : t.basis)
        if ((b & o) == b) u |= b;
      if (u != o) {
        r.basis_generates = false;
        break;
      }
    }
  }

  r.compact = true;  // finite space
  r.spectral = r.t0 && r.sober && r.compact;
  return r;
}

bool is_t1(const FiniteTopology& t) {
  for (int p = 0; p < t.npoints; ++p)
    if (t.closure(1ull << p) != (1ull << p)) return false;
  return true;
}

FiniteTopology subspace(const FiniteTopology& t, std::uint64_t pts) {
  std::vector<int> sel;
  for (int p = 0; p < t.npoints; ++p)
    if ((pts >> p) & 1) sel.push_back(p);
  auto restrict_mask = [&sel](std::uint64_t s) {
    std::uint64_t out = 0;
    for (size_t i = 0; i < sel.size(); ++i)
      if ((s >> sel[i]) & 1) out |= 1ull << i;
    return out;
  };
  FiniteTopology sub;
  sub.npoints = static_cast<int>(sel.size());
  for (int p : sel) sub.point_labels.push_back(t.point_labels[p]);
  std::vector<std::uint64_t> b;
  for (std::uint64_t x : t.basis) b.push_back(restrict_mask(x));
  sub.basis = sorted_unique(std::move(b));
  if (t.materialized) {
    std::vector<std::uint64_t> o;
    for (std::uint64_t x : t.opens) o.push_back(restrict_mask(x));
    sub.opens = sorted_unique(std::move(o));
    sub.materialized = true;
  }
  return sub;
}

}  // namespace retic
