#pragma once

#include <utility>
#include <vector>

#include "nmcd/segcost.hpp"

namespace nmcd {

// A segmentation of 1..n. change_points holds the first index of each new
// segment, strictly increasing, each in [2, n]; empty means one segment.
struct Segmentation {
  int n = 0;
  std::vector<int> change_points;

  int segments() const { return static_cast<int>(change_points.size()) + 1; }

  // 1, change points..., n+1
  std::vector<int> boundaries() const {
    std::vector<int> b;
    b.reserve(change_points.size() + 2);
    b.push_back(1);
    b.insert(b.end(), change_points.begin(), change_points.end());
    b.push_back(n + 1);
    return b;
  }
};

bool operator==(const Segmentation& a, const Segmentation& b);

// Bellman table over the boundary grid: value(L, j) is the best total cost
// of segmenting [1, grid[j]) with exactly L change points taken from the
// interior grid entries below j.
class DpTable {
public:
  DpTable(std::vector<int> boundaries, int l_max);

  const std::vector<int>& boundaries() const { return boundaries_; }
  int l_max() const { return l_max_; }

  // best total for exactly L change points over the whole sequence
  double best_value(int L) const;
  double value(int L, int j) const { return best_[slot(L, j)]; }
  int arg(int L, int j) const { return arg_[slot(L, j)]; }

  void set(int L, int j, double v, int a) {
    best_[slot(L, j)] = v;
    arg_[slot(L, j)] = a;
  }

private:
  std::size_t slot(int L, int j) const {
    return static_cast<std::size_t>(L) * boundaries_.size() + j;
  }

  std::vector<int> boundaries_;
  int l_max_;
  std::vector<double> best_;
  std::vector<int> arg_;
};

// Exact maximization over segmentations with grid change points. Value ties
// are broken toward the smallest rightmost change point, recursively.
// `solve_dp` parallelizes across right boundaries within each layer;
// `solve_dp_serial` is the reference. Identical output.
DpTable solve_dp(const PairCosts& costs, int l_max);
DpTable solve_dp_serial(const PairCosts& costs, int l_max);

// Optimal segmentation with exactly L change points.
Segmentation reconstruct(const DpTable& table, int L);

// Exhaustive enumeration with the same accumulation order and tie rule.
// Refuses instances with more than a million candidate combinations.
std::pair<double, Segmentation> brute_force_dp(const PairCosts& costs, int L);

}  // namespace nmcd
