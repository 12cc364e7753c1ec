#include "retic/reticulation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "retic/commutator.hpp"
#include "retic/congruence.hpp"

namespace retic {

CSet c_closure(const CommutatorStructure& s) {
  int m = s.size();
  CSet c;
  c.in_c.assign(m, false);
  c.trace.assign(m, "");
  std::vector<int> work;
  auto push = [&](int x, const std::string& how) {
    if (!c.in_c[x]) {
      c.in_c[x] = true;
      c.trace[x] = how;
      work.push_back(x);
    }
  };
  for (int x = 0; x < m; ++x)
    if (s.in_k[x]) push(x, "compact");
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int y = 0; y < m; ++y) {
      if (!c.in_c[y]) continue;
      push(s.join(x, y), "join(" + s.labels[x] + "," + s.labels[y] + ")");
      push(s.comm(x, y), "comm(" + s.labels[x] + "," + s.labels[y] + ")");
    }
  }
  return c;
}

ReticulationLattice reticulate(const CommutatorStructure& s, const SpectrumReport& r,
                               const CSet& c) {
  ReticulationLattice l;
  int m = s.size();
  l.lam.assign(m, -1);

  // group C members by radical, classes ordered by least member
  std::vector<int> celems = c.elements();
  std::map<int, std::vector<int>> by_radical;  // radical element -> members
  for (int x : celems) by_radical[r.radical[x]].push_back(x);
  std::vector<std::pair<int, int>> order;  // (least member, radical)
  for (auto& [rad, mem] : by_radical) {
    std::sort(mem.begin(), mem.end());
    order.emplace_back(mem.front(), rad);
  }
  std::sort(order.begin(), order.end());
  l.nclasses = static_cast<int>(order.size());
  for (auto& [least, rad] : order) {
    l.members.push_back(by_radical[rad]);
    l.class_radical.push_back(rad);
    for (int x : by_radical[rad]) l.lam[x] = static_cast<int>(l.members.size()) - 1;
  }
  l.zero = l.lam[s.bottom];
  l.one = l.lam[s.top];

  int k = l.nclasses;
  l.leq.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      l.leq[i][j] = s.le(l.class_radical[i], l.class_radical[j]);

  // join and meet descend from v and [.,.]; verify over all member pairs
  l.join_tab.assign(k, std::vector<int>(k, -1));
  l.meet_tab.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int jn = -1, mt = -1;
      for (int x : l.members[i])
        for (int y : l.members[j]) {
          int cj = l.lam[s.join(x, y)];
          int cm = l.lam[s.comm(x, y)];
          if (cj < 0 || cm < 0)
            throw error(errc::not_well_defined,
                        s.name + ": quotient image of " + s.labels[x] + "," + s.labels[y] +
                            " left C");
          if (jn == -1) jn = cj;
          if (mt == -1) mt = cm;
          if (cj != jn)
            throw error(errc::not_well_defined,
                        s.name + ": quotient join ill-defined at " + s.labels[x] + " v " +
                            s.labels[y]);
          if (cm != mt)
            throw error(errc::not_well_defined,
                        s.name + ": quotient meet ill-defined at [" + s.labels[x] + "," +
                            s.labels[y] + "]");
        }
      l.join_tab[i][j] = jn;
      l.meet_tab[i][j] = mt;
    }

  // the descended operations must be the lub/glb of the descended order
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int jn = l.join_tab[i][j], mt = l.meet_tab[i][j];
      if (!l.le(i, jn) || !l.le(j, jn) || !l.le(mt, i) || !l.le(mt, j))
        throw error(errc::not_well_defined, s.name + ": quotient operations violate the order");
      for (int z = 0; z < k; ++z) {
        if (l.le(i, z) && l.le(j, z) && !l.le(jn, z))
          throw error(errc::not_well_defined, s.name + ": quotient join is not least");
        if (l.le(z, i) && l.le(z, j) && !l.le(z, mt))
          throw error(errc::not_well_defined, s.name + ": quotient meet is not greatest");
      }
    }

  l.distributive = true;
  for (int x = 0; x < k && l.distributive; ++x)
    for (int y = 0; y < k && l.distributive; ++y)
      for (int z = 0; z < k; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          l.distributive = false;
          std::ostringstream os;
          os << "distributivity fails at classes " << x << "," << y << "," << z;
          l.distributivity_witness = os.str();
          break;
        }
  return l;
}

int IdealFamily::index_of(std::uint64_t mask) const {
  for (int i = 0; i < static_cast<int>(ideals.size()); ++i)
    if (ideals[i].mask == mask) return i;
  return -1;
}

IdealFamily ideal_spectrum(const ReticulationLattice& l) {
  int k = l.size();
  if (k > 20)
    throw error(errc::invalid_input,
                "ideal enumeration over " + std::to_string(k) + " classes is unsupported");
  IdealFamily fam;
  std::uint64_t all = (k == 0) ? 0 : ((1ull << k) - 1);
  for (std::uint64_t mask = 1; mask <= all; ++mask) {
    bool ok = (mask >> l.zero) & 1;
    for (int x = 0; x < k && ok; ++x) {
      if (!((mask >> x) & 1)) continue;
      for (int y = 0; y < k && ok; ++y) {
        if (l.le(y, x) && !((mask >> y) & 1)) ok = false;        // downward closed
        if (((mask >> y) & 1) && !((mask >> l.join(x, y)) & 1)) ok = false;  // join closed
      }
    }
    if (!ok) continue;
    IdealInfo info;
    info.mask = mask;
    info.proper = mask != all;
    fam.ideals.push_back(info);
  }

  // classify
  for (auto& info : fam.ideals) {
    if (info.proper) {
      info.prime = true;
      for (int x = 0; x < k && info.prime; ++x)
        for (int y = 0; y < k; ++y)
          if (((info.mask >> l.meet(x, y)) & 1) && !((info.mask >> x) & 1) &&
              !((info.mask >> y) & 1)) {
            info.prime = false;
            break;
          }
      info.maximal = true;
      for (const auto& other : fam.ideals)
        if (other.proper && other.mask != info.mask && (other.mask & info.mask) == info.mask) {
          info.maximal = false;
          break;
        }
    }
  }
  for (int i = 0; i < static_cast<int>(fam.ideals.size()); ++i) {
    auto& info = fam.ideals[i];
    if (!info.prime) continue;
    fam.primes.push_back(i);
    if (info.maximal) fam.maximals.push_back(i);
    info.minimal_prime = true;
    for (const auto& other : fam.ideals)
      if (other.prime && other.mask != info.mask && (other.mask & info.mask) == other.mask) {
        info.minimal_prime = false;
        break;
      }
    if (info.minimal_prime) fam.min_primes.push_back(i);
  }

  // Stone topology: D_Id(x) = primes not containing x
  int np = static_cast<int>(fam.primes.size());
  fam.d_id.assign(k, 0);
  for (int x = 0; x < k; ++x)
    for (int i = 0; i < np; ++i)
      if (!((fam.ideals[fam.primes[i]].mask >> x) & 1)) fam.d_id[x] |= 1ull << i;
  std::vector<std::string> labels;
  for (int i : fam.primes) {
    std::ostringstream os;
    os << "P" << i;
    labels.push_back(os.str());
  }
  fam.stone = topology_from_subbasis(np, std::move(labels), fam.d_id, fam.d_id);
  return fam;
}

Analysis analyze(CommutatorStructure s) {
  Analysis an;
  an.s = std::move(s);
  an.spec = spectrum(an.s);
  an.zar = zariski(an.s, an.spec);
  an.cset = c_closure(an.s);
  try {
    an.l = reticulate(an.s, an.spec, an.cset);
    an.ideals = ideal_spectrum(an.l);
  } catch (const error& e) {
    an.retic_ok = false;
    an.retic_error = e.what();
  }
  {
    // modularity of the carrier lattice, via the modular law
    an.modularity.modular = true;
    int m = an.s.size();
    for (int a = 0; a < m && an.modularity.modular; ++a)
      for (int b = 0; b < m && an.modularity.modular; ++b) {
        if (!an.s.le(a, b)) continue;
        for (int x = 0; x < m; ++x) {
          int lhs = an.s.join(a, an.s.meet(x, b));
          int rhs = an.s.meet(an.s.join(a, x), b);
          if (lhs != rhs) {
            an.modularity.modular = false;
            an.modularity.pentagon = {an.s.meet(x, b), lhs, rhs, x, an.s.join(a, x)};
            break;
          }
        }
      }
  }
  return an;
}

Analysis analyze(const FiniteAlgebra& a) {
  validate_algebra(a);
  CongruenceLattice lat = con_lattice(a);
  CommutatorTable tab = commutator_table(a, lat);
  Analysis an = analyze(structure_of(a, lat, tab));
  an.alg = a;
  an.lat = std::move(lat);
  return an;
}

StarResult star(const Analysis& an, int theta, StarVariant v) {
  const auto& s = an.s;
  const auto& l = an.l;
  StarResult out;
  for (int x = 0; x < s.size(); ++x) {
    bool eligible = (v == StarVariant::K) ? s.in_k[x] : an.cset.in_c[x];
    if (eligible && s.le(x, theta)) out.mask |= 1ull << l.lam[x];
  }
  // complete downward to an ideal if needed (K variant in lax mode)
  std::uint64_t completed = out.mask;
  for (int x = 0; x < l.size(); ++x)
    if ((out.mask >> x) & 1)
      for (int y = 0; y < l.size(); ++y)
        if (l.le(y, x)) completed |= 1ull << y;
  out.completed = completed != out.mask;
  out.mask = completed;
  return out;
}

LowerStarResult lower_star(const Analysis& an, std::uint64_t ideal_mask) {
  const auto& s = an.s;
  LowerStarResult out;
  int acc = s.bottom;
  for (int x = 0; x < s.size(); ++x)
    if (s.in_k[x] && ((ideal_mask >> an.l.lam[x]) & 1)) acc = s.join(acc, x);
  out.element = acc;
  for (int x = 0; x < s.size(); ++x)
    if (s.in_k[x]) {
      bool lhs = s.le(x, acc);
      bool rhs = (ideal_mask >> an.l.lam[x]) & 1;
      if (lhs != rhs) out.membership_law = false;
    }
  return out;
}

FixedpointReport check_fixedpoint(const Analysis& an) {
  FixedpointReport r;
  for (const auto& info : an.ideals.ideals) {
    int down = lower_star(an, info.mask).element;
    std::uint64_t back = star(an, down, StarVariant::C).mask;
    if (back != info.mask) {
      r.ideals_fixed = false;
      r.failing_ideal = info.mask;
      r.has_failure = true;
      r.witness = "ideal mask " + std::to_string(info.mask) + " reopens to " +
                  std::to_string(back);
      break;
    }
  }
  for (int pi : an.ideals.primes) {
    int down = lower_star(an, an.ideals.ideals[pi].mask).element;
    if (!is_prime(an.s, down)) {
      r.primes_descend = false;
      if (!r.has_failure) {
        r.has_failure = true;
        r.witness = "prime ideal descends to non-prime " + an.s.labels[down];
      }
      break;
    }
  }
  return r;
}

HomeomorphismReport homeomorphism(const Analysis& an) {
  HomeomorphismReport r;
  FixedpointReport fp = check_fixedpoint(an);
  r.precondition = fp.ideals_fixed && fp.primes_descend;
  if (!r.precondition) {
    r.witness = "fixedpoint precondition failed";
    return r;
  }
  const auto& s = an.s;
  int np = static_cast<int>(an.spec.primes.size());

  // u: primes of S -> prime ideals; v: back
  std::vector<int> u_img(np, -1);  // index into ideals.primes
  for (int i = 0; i < np; ++i) {
    std::uint64_t m = star(an, an.spec.primes[i], StarVariant::C).mask;
    int idx = an.ideals.index_of(m);
    int pos = -1;
    for (int j = 0; j < static_cast<int>(an.ideals.primes.size()); ++j)
      if (an.ideals.primes[j] == idx) pos = j;
    if (idx < 0 || !an.ideals.ideals[idx].prime || pos < 0) {
      r.u_into_primes = false;
      r.witness = "star of " + s.labels[an.spec.primes[i]] + " is not a prime ideal";
      return r;
    }
    u_img[i] = pos;
  }
  // bijective + mutually inverse
  if (static_cast<int>(an.ideals.primes.size()) != np) {
    r.mutually_inverse = false;
    r.witness = "prime counts differ";
    return r;
  }
  std::vector<bool> hit(np, false);
  for (int i = 0; i < np; ++i) {
    hit[u_img[i]] = true;
    int down = lower_star(an, an.ideals.ideals[an.ideals.primes[u_img[i]]].mask).element;
    if (down != an.spec.primes[i]) {
      r.mutually_inverse = false;
      r.witness = "v(u(" + s.labels[an.spec.primes[i]] + ")) = " + s.labels[down];
      return r;
    }
  }
  for (int j = 0; j < np; ++j) {
    if (!hit[j]) {
      r.mutually_inverse = false;
      r.witness = "a prime ideal is outside the image";
      return r;
    }
    std::uint64_t m = an.ideals.ideals[an.ideals.primes[j]].mask;
    int down = lower_star(an, m).element;
    std::uint64_t back = star(an, down, StarVariant::C).mask;
    if (back != m) {
      r.mutually_inverse = false;
      r.witness = "u(v(P)) != P for a prime ideal";
      return r;
    }
  }

  // open-set correspondence, extensionally through the bijection
  auto transport = [&u_img, np](std::uint64_t zar_open) {
    std::uint64_t out = 0;
    for (int i = 0; i < np; ++i)
      if ((zar_open >> i) & 1) out |= 1ull << u_img[i];
    return out;
  };
  if (an.zar.top.materialized && an.ideals.stone.materialized) {
    std::vector<std::uint64_t> lhs, rhs(an.ideals.stone.opens);
    for (std::uint64_t o : an.zar.top.opens) lhs.push_back(transport(o));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) {
      r.opens_match = false;
      r.witness = "topologies differ extensionally";
    }
  }

  // Max and Min restrictions
  std::vector<int> max_img, min_img;
  for (int i = 0; i < np; ++i) {
    bool is_max = std::binary_search(an.spec.maximals.begin(), an.spec.maximals.end(),
                                     an.spec.primes[i]);
    bool is_min = std::binary_search(an.spec.minimals.begin(), an.spec.minimals.end(),
                                     an.spec.primes[i]);
    int ideal_idx = an.ideals.primes[u_img[i]];
    if (is_max != an.ideals.ideals[ideal_idx].maximal) r.max_bijective = false;
    if (is_min != an.ideals.ideals[ideal_idx].minimal_prime) r.min_bijective = false;
  }

  // Max_Z compact T1; Min_Z zero-dimensional Hausdorff = discrete (finite)
  std::uint64_t max_mask = 0, min_mask = 0;
  for (int i = 0; i < np; ++i) {
    if (std::binary_search(an.spec.maximals.begin(), an.spec.maximals.end(),
                           an.spec.primes[i]))
      max_mask |= 1ull << i;
    if (std::binary_search(an.spec.minimals.begin(), an.spec.minimals.end(),
                           an.spec.primes[i]))
      min_mask |= 1ull << i;
  }
  FiniteTopology max_sub = subspace(an.zar.top, max_mask);
  FiniteTopology min_sub = subspace(an.zar.top, min_mask);
  r.max_t1 = is_t1(max_sub);
  std::uint64_t min_full = min_sub.npoints == 0 ? 0 : ((1ull << min_sub.npoints) - 1);
  r.min_discrete = true;
  for (std::uint64_t m = 0; m <= min_full; ++m)
    if (!min_sub.is_open(m)) {
      r.min_discrete = false;
      break;
    }
  return r;
}

QuasiCommutativeReport is_quasi_commutative(const Analysis& an) {
  const auto& s = an.s;
  QuasiCommutativeReport r;
  auto has_witness = [&s, &an](int a, int b) {
    int target = s.comm(a, b);
    for (int g = 0; g < s.size(); ++g)
      if (s.in_k[g] && s.le(g, target) && an.spec.radical[g] == an.spec.radical[target])
        return true;
    return false;
  };
  for (int a = 0; a < s.size() && r.quasi_commutative; ++a) {
    if (!s.in_k[a]) continue;
    for (int b = 0; b < s.size(); ++b) {
      if (!s.in_k[b]) continue;
      if (!has_witness(a, b)) {
        r.quasi_commutative = false;
        r.witness_a = a;
        r.witness_b = b;
        break;
      }
    }
  }
  // generator-pair form over P x P must agree with the K criterion
  bool p_form = true;
  for (int a = 0; a < s.size() && p_form; ++a) {
    if (!s.in_p[a]) continue;
    for (int b = 0; b < s.size(); ++b) {
      if (!s.in_p[b]) continue;
      if (!has_witness(a, b)) {
        p_form = false;
        break;
      }
    }
  }
  r.p_form_agrees = (p_form == r.quasi_commutative);

  if (r.quasi_commutative) {
    for (int t = 0; t < s.size() && r.c_witness; ++t) {
      if (!an.cset.in_c[t]) continue;
      bool found = false;
      for (int g = 0; g < s.size(); ++g)
        if (s.in_k[g] && s.le(g, t) && an.spec.radical[g] == an.spec.radical[t]) {
          found = true;
          break;
        }
      if (!found) r.c_witness = false;
    }
    if (an.retic_ok)
      for (int t = 0; t < s.size() && r.star_variants_agree; ++t) {
        if (!an.cset.in_c[t]) continue;
        if (star(an, t, StarVariant::K).mask != star(an, t, StarVariant::C).mask)
          r.star_variants_agree = false;
      }
  }
  return r;
}

SpectralAlgebraReport is_spectral_algebra(const Analysis& an) {
  SpectralAlgebraReport r;
  r.space = spectral_space_check(an.zar.top);
  r.compact_d_basis = true;  // every subset of a finite space is compact
  r.spectral = r.space.spectral;
  r.quasi_commutative = is_quasi_commutative(an).quasi_commutative;
  if (an.retic_ok) {
    FixedpointReport fp = check_fixedpoint(an);
    r.ideal_fixedpoint = fp.ideals_fixed && fp.primes_descend;
  } else {
    r.ideal_fixedpoint = false;
  }
  r.verdicts_agree = (r.spectral == r.quasi_commutative) &&
                     (r.quasi_commutative == r.ideal_fixedpoint);
  return r;
}

BooleanCenterReport boolean_center_iso(const Analysis& an) {
  const auto& s = an.s;
  const auto& l = an.l;
  BooleanCenterReport r;
  r.semiprime = an.spec.semiprime;
  r.center_elements = boolean_center(s);
  for (int a : r.center_elements)
    if (!s.in_k[a]) r.center_in_k = false;

  auto complemented_class = [&l](int x) {
    for (int y = 0; y < l.size(); ++y)
      if (l.join(x, y) == l.one && l.meet(x, y) == l.zero) return true;
    return false;
  };
  for (int x = 0; x < l.size(); ++x)
    if (complemented_class(x)) r.center_classes.push_back(x);

  std::vector<int> image;
  for (int a : r.center_elements) {
    if (l.lam[a] < 0) {
      r.lambda_into_center = false;
      r.witness = "center element " + s.labels[a] + " outside C";
      continue;
    }
    int cls = l.lam[a];
    if (!complemented_class(cls)) {
      r.lambda_into_center = false;
      r.witness = "lambda(" + s.labels[a] + ") is not complemented";
    }
    image.push_back(cls);
  }
  std::vector<int> sorted_image(image);
  std::sort(sorted_image.begin(), sorted_image.end());
  r.injective = std::adjacent_find(sorted_image.begin(), sorted_image.end()) ==
                sorted_image.end();

  // Boolean morphism: join and meet preserved on the center, bounds fixed
  r.boolean_morphism = true;
  for (size_t i = 0; i < r.center_elements.size(); ++i)
    for (size_t j = 0; j < r.center_elements.size(); ++j) {
      int a = r.center_elements[i], b = r.center_elements[j];
      if (l.lam[a] < 0 || l.lam[b] < 0 || l.lam[s.join(a, b)] < 0 ||
          l.lam[s.comm(a, b)] < 0)
        continue;
      if (l.lam[s.join(a, b)] != l.join(l.lam[a], l.lam[b])) r.boolean_morphism = false;
      if (l.lam[s.comm(a, b)] != l.meet(l.lam[a], l.lam[b])) r.boolean_morphism = false;
    }

  sorted_image.erase(std::unique(sorted_image.begin(), sorted_image.end()),
                     sorted_image.end());
  r.surjective = sorted_image == r.center_classes;
  return r;
}

std::uint64_t l_annihilator(const ReticulationLattice& l, std::uint64_t ideal_mask) {
  std::uint64_t out = 0;
  for (int x = 0; x < l.size(); ++x) {
    bool kills = true;
    for (int y = 0; y < l.size() && kills; ++y)
      if ((ideal_mask >> y) & 1)
        if (l.meet(x, y) != l.zero) kills = false;
    if (kills) out |= 1ull << x;
  }
  return out;
}

AnnihilatorTransferReport annihilator_transfer(const Analysis& an) {
  const auto& s = an.s;
  AnnihilatorTransferReport r;
  r.semiprime = an.spec.semiprime;

  for (int theta = 0; theta < s.size(); ++theta) {
    std::uint64_t lhs = l_annihilator(an.l, star(an, theta, StarVariant::C).mask);
    std::uint64_t rhs = star(an, annihilator(s, theta), StarVariant::C).mask;
    if (lhs != rhs) {
      r.star_transfer = false;
      r.witness = "Ann(star(" + s.labels[theta] + ")) != star(annihilator)";
      break;
    }
  }
  for (const auto& info : an.ideals.ideals) {
    int lhs = lower_star(an, l_annihilator(an.l, info.mask)).element;
    int rhs = annihilator(s, lower_star(an, info.mask).element);
    if (lhs != rhs) {
      r.lower_transfer = false;
      if (r.witness.empty())
        r.witness = "lower star of Ann(I) mismatch at ideal mask " +
                    std::to_string(info.mask);
      break;
    }
  }
  // membership law: lambda(alpha) in phi^* iff alpha <= phi, alpha in C
  for (int phi : an.spec.primes) {
    std::uint64_t st = star(an, phi, StarVariant::C).mask;
    for (int a = 0; a < s.size(); ++a) {
      if (!an.cset.in_c[a]) continue;
      bool lhs = (st >> an.l.lam[a]) & 1;
      bool rhs = s.le(a, phi);
      if (lhs != rhs) {
        r.membership_law = false;
        if (r.witness.empty())
          r.witness = "membership law fails at " + s.labels[a] + ", " + s.labels[phi];
      }
    }
  }
  return r;
}

MinPrimeReport min_prime_check(const Analysis& an, int phi) {
  const auto& s = an.s;
  MinPrimeReport r;
  r.applicable = an.spec.semiprime && is_quasi_commutative(an).quasi_commutative;
  r.in_min = std::binary_search(an.spec.minimals.begin(), an.spec.minimals.end(), phi);

  auto implies_form = [&s, phi](const std::vector<bool>& universe) {
    for (int a = 0; a < s.size(); ++a)
      if (universe[a] && s.le(a, phi) && s.le(annihilator(s, a), phi)) return false;
    return true;
  };
  auto iff_form = [&s, phi](const std::vector<bool>& universe) {
    for (int a = 0; a < s.size(); ++a) {
      if (!universe[a]) continue;
      bool in = s.le(a, phi);
      bool ann_out = !s.le(annihilator(s, a), phi);
      if (in != ann_out) return false;
    }
    return true;
  };
  std::vector<bool> k_univ(s.in_k);
  r.c_implies = implies_form(an.cset.in_c);
  r.c_iff = iff_form(an.cset.in_c);
  r.k_implies = implies_form(k_univ);
  r.k_iff = iff_form(k_univ);
  r.agree = (r.in_min == r.c_implies) && (r.c_implies == r.c_iff) &&
            (r.c_iff == r.k_implies) && (r.k_implies == r.k_iff);
  return r;
}

FunctorReport retic_functor(const Analysis& a, const Analysis& b, const Morphism& u) {
  FunctorReport r;
  if (!a.alg || !b.alg || !a.lat || !b.lat)
    throw error(errc::invalid_input, "the functor square needs algebra-backed instances");
  const auto& la = *a.lat;
  const auto& lb = *b.lat;

  // image classes: lambda_B(u_bullet(alpha)) per element of C(A) = Con(A)
  std::vector<int> img(la.size(), -1);
  for (int i = 0; i < la.size(); ++i) {
    Partition pushed = morphism_bullet(*a.alg, *b.alg, u, la.elems[i]);
    int j = lb.index_of(pushed);
    if (j < 0) throw error(errc::not_a_congruence, "image left the target lattice");
    img[i] = b.l.lam[j];
  }
  // well-definedness: equal classes must push to equal classes
  r.class_map.assign(a.l.size(), -1);
  for (int i = 0; i < la.size(); ++i) {
    int cls = a.l.lam[i];
    if (r.class_map[cls] == -1) {
      r.class_map[cls] = img[i];
    } else if (r.class_map[cls] != img[i]) {
      r.well_defined = false;
      r.witness = "elements of one radical class push to different classes (element " +
                  a.s.labels[i] + ")";
      return r;
    }
  }
  // bounded-lattice morphism
  const auto& L = a.l;
  const auto& M = b.l;
  if (r.class_map[L.zero] != M.zero || r.class_map[L.one] != M.one)
    r.lattice_morphism = false;
  for (int x = 0; x < L.size() && r.lattice_morphism; ++x)
    for (int y = 0; y < L.size(); ++y) {
      if (r.class_map[L.join(x, y)] != M.join(r.class_map[x], r.class_map[y]) ||
          r.class_map[L.meet(x, y)] != M.meet(r.class_map[x], r.class_map[y])) {
        r.lattice_morphism = false;
        r.witness = "descended map is not a lattice morphism";
        break;
      }
    }
  // the square: L(u)(lambda_A(alpha)) = lambda_B(u_bullet(alpha))
  for (int i = 0; i < la.size(); ++i)
    if (r.class_map[a.l.lam[i]] != img[i]) {
      r.square_commutes = false;
      r.witness = "square fails at " + a.s.labels[i];
      break;
    }
  return r;
}

}  // namespace retic
