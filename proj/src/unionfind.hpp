#ifndef AEGG_UNIONFIND_HPP
#define AEGG_UNIONFIND_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace aegg {

// Union-find over indices 0..n-1 with minimal-index representatives, so the
// induced quotients are deterministic.
class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller index as representative.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::size_t size() const { return parent_.size(); }

private:
  mutable std::vector<std::size_t> parent_;
};

}  // namespace aegg

#endif
