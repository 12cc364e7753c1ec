#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace retic {

/// Partition of {0..n-1} in canonical form: rep[i] is the least element of
/// the class containing i. rep[rep[i]] == rep[i] and rep[i] <= i always hold.
struct Partition {
  std::vector<int> rep;

  Partition() = default;
  explicit Partition(std::vector<int> r) : rep(std::move(r)) {}

  static Partition identity(int n) {
    std::vector<int> r(n);
    std::iota(r.begin(), r.end(), 0);
    return Partition(std::move(r));
  }

  static Partition all(int n) { return Partition(std::vector<int>(n, 0)); }

  int size() const { return static_cast<int>(rep.size()); }

  bool same(int a, int b) const { return rep[a] == rep[b]; }

  int num_classes() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
      if (rep[i] == i) ++c;
    return c;
  }

  /// this refines other, i.e. this <= other in the partition lattice.
  bool refines(const Partition& other) const {
    for (int i = 0; i < size(); ++i)
      if (other.rep[i] != other.rep[rep[i]]) return false;
    return true;
  }

  /// Common refinement: the meet in the partition lattice.
  Partition meet(const Partition& other) const {
    std::map<std::pair<int, int>, int> first_seen;
    std::vector<int> r(rep.size());
    for (int i = 0; i < size(); ++i) {
      auto key = std::make_pair(rep[i], other.rep[i]);
      auto [it, fresh] = first_seen.try_emplace(key, i);
      r[i] = it->second;
    }
    return Partition(std::move(r));
  }

  /// Classes as sorted lists, ordered by least element.
  std::vector<std::vector<int>> classes() const {
    std::vector<std::vector<int>> out;
    std::vector<int> where(rep.size(), -1);
    for (int i = 0; i < size(); ++i) {
      if (rep[i] == i) {
        where[i] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[where[rep[i]]].push_back(i);
    }
    return out;
  }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

/// Union-find over {0..n-1}; canonical() flattens to least-representative form.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true if the classes were distinct (a merge happened).
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the least element as root
    parent_[b] = a;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }

  int size() const { return static_cast<int>(parent_.size()); }

  Partition canonical() {
    std::vector<int> r(parent_.size());
    for (int i = 0; i < size(); ++i) r[i] = find(i);
    return Partition(std::move(r));
  }

 private:
  std::vector<int> parent_;
};

}  // namespace retic
