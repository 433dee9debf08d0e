#pragma once

#include <vector>

namespace nmcd {

// Immutable data sequence with precomputed ranks and order statistics.
// Indices and ranks are 1-based in the public interface. Ties are ranked in
// input order (stable), so everything derived from ranks is deterministic.
class Sample {
public:
  int n() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }
  // ranks()[i-1] is the rank of observation i among all n values
  const std::vector<int>& ranks() const { return ranks_; }
  // sorted_values()[r-1] is the r-th order statistic
  const std::vector<double>& sorted_values() const { return sorted_; }

  // Ascending ranks of the observations in [i, j), 1 <= i < j <= n+1.
  std::vector<int> segment_rank_multiset(int i, int j) const;

private:
  friend Sample build_sample(std::vector<double> values);
  Sample(std::vector<double> values, std::vector<int> ranks, std::vector<double> sorted)
      : values_(std::move(values)), ranks_(std::move(ranks)), sorted_(std::move(sorted)) {}

  std::vector<double> values_;
  std::vector<int> ranks_;
  std::vector<double> sorted_;
};

// Requires n >= 2 and finite values.
Sample build_sample(std::vector<double> values);

enum class WeightVariant { Zhang, Uniform };

// Per-order-statistic weights for the integrated segment cost, plus prefix
// sums so a cost can be accumulated over runs of consecutive ranks.
//
//   Zhang:   point_weight(l) = n / (l * (n - l)) for 2 <= l <= n-1, else 0
//   Uniform: point_weight(l) = 1 / n             for 1 <= l <= n-1, else 0
struct WeightTable {
  WeightVariant variant = WeightVariant::Zhang;
  int n = 0;
  std::vector<double> point_weights;  // index l in 1..n; slot 0 unused
  std::vector<double> prefix;         // prefix[l] = sum of point_weights[1..l]

  double point_weight(int l) const { return point_weights[l]; }
  double total_weight() const { return prefix[n]; }
};

// Requires n >= 2.
WeightTable build_weight_table(int n, WeightVariant variant);

}  // namespace nmcd
