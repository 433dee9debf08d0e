#pragma once

#include <span>
#include <vector>

#include "nmcd/empirical.hpp"

namespace nmcd {

// x*log(x) + (1-x)*log(1-x) with the limit value 0 at x in {0, 1}.
// Throws std::domain_error outside [0, 1]. Always <= 0.
double bernoulli_entropy(double x);

// Segment empirical CDF value for `count` of `m` points at or below an
// evaluation point, evaluated as (2*count - 1) / (2*m) when the continuity
// correction is on. count == 0 maps to 0 in both modes.
double corrected_fraction(int count, int m, bool correction = true);

// Integrated rank log-likelihood of single segments. The cost of [i, j) is
//
//   m * sum over l of point_weight(l) * bernoulli_entropy(F(l))
//
// where m = j - i and F(l) is the (corrected) fraction of segment points
// with rank <= l. Costs are accumulated over runs of consecutive ranks in
// ascending-l order. All costs are <= 0 and depend on the data only
// through ranks.
class CostModel {
public:
  CostModel(Sample sample, WeightVariant variant, bool correction = true);

  const Sample& sample() const { return sample_; }
  const WeightTable& weights() const { return weights_; }
  bool correction() const { return correction_; }

  // Cost of the segment [i, j), 1 <= i < j <= n+1.
  double segment_cost(int i, int j) const;

  // Same cost evaluated from the segment's ascending rank multiset.
  double cost_from_sorted_ranks(std::span<const int> sorted_ranks) const;

private:
  std::span<const double> entropy_row(int m) const;

  Sample sample_;
  WeightTable weights_;
  bool correction_;
  // entropy_cache_[m - 1][t - 1] = bernoulli_entropy(corrected_fraction(t, m))
  // for every segment length m <= n; built eagerly for small n, empty (and
  // entropies evaluated on the fly) when the table would be large.
  std::vector<std::vector<double>> entropy_cache_;
};

// Dense triangular store of segment costs over a boundary grid. The grid
// must be strictly increasing and start at 1 and end at n+1; interior
// entries are the admissible change-point positions.
class PairCosts {
public:
  PairCosts(std::vector<int> boundaries, int n);

  const std::vector<int>& boundaries() const { return boundaries_; }
  int interior_count() const { return static_cast<int>(boundaries_.size()) - 2; }
  int last_index() const { return static_cast<int>(boundaries_.size()) - 1; }

  // Cost of [boundaries()[ai], boundaries()[bi]) for grid indices ai < bi.
  double at(int ai, int bi) const { return values_[tri_index(ai, bi)]; }
  void set(int ai, int bi, double v) { values_[tri_index(ai, bi)] = v; }

private:
  std::size_t tri_index(int ai, int bi) const {
    return static_cast<std::size_t>(bi) * (bi - 1) / 2 + ai;
  }

  std::vector<int> boundaries_;
  std::vector<double> values_;
};

// All pair costs over the grid. `pair_costs` sweeps right boundaries per
// left boundary with an incremental rank merge and parallelizes across left
// boundaries; `pair_costs_serial` is the straightforward reference. Both
// produce bitwise-identical tables.
PairCosts pair_costs(const CostModel& model, const std::vector<int>& boundaries);
PairCosts pair_costs_serial(const CostModel& model, const std::vector<int>& boundaries);

// Pair costs from an arbitrary cost function fn(a, b) over boundary values.
template <typename CostFn>
PairCosts compute_pair_costs(const std::vector<int>& boundaries, int n, CostFn fn) {
  PairCosts out(boundaries, n);
  const int last = out.last_index();
#pragma omp parallel for schedule(dynamic)
  for (int ai = 0; ai < last; ++ai) {
    for (int bi = ai + 1; bi <= last; ++bi) {
      out.set(ai, bi, fn(boundaries[ai], boundaries[bi]));
    }
  }
  return out;
}

}  // namespace nmcd
