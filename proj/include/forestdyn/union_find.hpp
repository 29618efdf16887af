#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace forestdyn {

// Disjoint sets with union by size and no path compression, so merges can
// be undone in LIFO order.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool connected(std::size_t a, std::size_t b) const { return find(a) == find(b); }

  // Returns false when already joined; nothing is recorded then.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const std::size_t b = history_.back();
    history_.pop_back();
    const std::size_t a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

}  // namespace forestdyn
