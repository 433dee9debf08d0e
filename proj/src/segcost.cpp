#include "nmcd/segcost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nmcd {

double bernoulli_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("entropy argument outside [0, 1]");
  const double a = x > 0.0 ? x * std::log(x) : 0.0;
  const double b = x < 1.0 ? (1.0 - x) * std::log1p(-x) : 0.0;
  return a + b;
}

double corrected_fraction(int count, int m, bool correction) {
  if (m < 1 || count < 0 || count > m) throw std::invalid_argument("count outside [0, m]");
  if (count == 0) return 0.0;
  if (!correction) return static_cast<double>(count) / m;
  return (2.0 * count - 1.0) / (2.0 * m);
}

namespace {

constexpr int kEntropyCacheMaxN = 2048;  // full table is n(n+1)/2 doubles

}  // namespace

CostModel::CostModel(Sample sample, WeightVariant variant, bool correction)
    : sample_(std::move(sample)),
      weights_(build_weight_table(sample_.n(), variant)),
      correction_(correction) {
  const int n = sample_.n();
  if (n <= kEntropyCacheMaxN) {
    entropy_cache_.resize(n);
    for (int m = 1; m <= n; ++m) {
      std::vector<double>& row = entropy_cache_[m - 1];
      row.resize(m);
      for (int t = 1; t <= m; ++t) row[t - 1] = bernoulli_entropy(corrected_fraction(t, m, correction_));
    }
  }
}

std::span<const double> CostModel::entropy_row(int m) const {
  if (!entropy_cache_.empty()) return entropy_cache_[m - 1];
  return {};
}

double CostModel::cost_from_sorted_ranks(std::span<const int> sorted_ranks) const {
  const int m = static_cast<int>(sorted_ranks.size());
  const int n = sample_.n();
  const std::vector<double>& prefix = weights_.prefix;
  const std::span<const double> row = entropy_row(m);
  double acc = 0.0;
  for (int t = 1; t <= m; ++t) {
    const int lo = sorted_ranks[t - 1];
    const int hi = t < m ? sorted_ranks[t] : n + 1;
    const double mass = prefix[hi - 1] - prefix[lo - 1];
    if (mass > 0.0) {
      const double h = row.empty() ? bernoulli_entropy(corrected_fraction(t, m, correction_)) : row[t - 1];
      acc += mass * h;
    }
  }
  return m * acc;
}

double CostModel::segment_cost(int i, int j) const {
  const std::vector<int> ranks = sample_.segment_rank_multiset(i, j);
  return cost_from_sorted_ranks(ranks);
}

PairCosts::PairCosts(std::vector<int> boundaries, int n) : boundaries_(std::move(boundaries)) {
  if (boundaries_.size() < 2 || boundaries_.front() != 1 || boundaries_.back() != n + 1) {
    throw std::invalid_argument("boundary grid must run from 1 to n+1");
  }
  for (std::size_t k = 1; k < boundaries_.size(); ++k) {
    if (boundaries_[k] <= boundaries_[k - 1]) {
      throw std::invalid_argument("boundary grid must be strictly increasing");
    }
  }
  const std::size_t count = boundaries_.size();
  values_.assign(count * (count - 1) / 2, 0.0);
}

namespace {

// Sweep right boundaries for one fixed left boundary, keeping the segment's
// ascending rank multiset via merge with each newly covered block.
void sweep_left_boundary(const CostModel& model, const std::vector<int>& b, int ai,
                         PairCosts& out, std::vector<int>& cur, std::vector<int>& add,
                         std::vector<int>& merged) {
  const std::vector<int>& ranks = model.sample().ranks();
  const int last = static_cast<int>(b.size()) - 1;
  cur.clear();
  for (int bi = ai + 1; bi <= last; ++bi) {
    add.clear();
    for (int p = b[bi - 1]; p < b[bi]; ++p) add.push_back(ranks[p - 1]);
    std::sort(add.begin(), add.end());
    merged.resize(cur.size() + add.size());
    std::merge(cur.begin(), cur.end(), add.begin(), add.end(), merged.begin());
    cur.swap(merged);
    out.set(ai, bi, model.cost_from_sorted_ranks(cur));
  }
}

}  // namespace

PairCosts pair_costs(const CostModel& model, const std::vector<int>& boundaries) {
  PairCosts out(boundaries, model.sample().n());
  const int last = out.last_index();
#pragma omp parallel
  {
    std::vector<int> cur, add, merged;
#pragma omp for schedule(dynamic)
    for (int ai = 0; ai < last; ++ai) {
      sweep_left_boundary(model, out.boundaries(), ai, out, cur, add, merged);
    }
  }
  return out;
}

PairCosts pair_costs_serial(const CostModel& model, const std::vector<int>& boundaries) {
  PairCosts out(boundaries, model.sample().n());
  const int last = out.last_index();
  for (int ai = 0; ai < last; ++ai) {
    for (int bi = ai + 1; bi <= last; ++bi) {
      out.set(ai, bi, model.segment_cost(boundaries[ai], boundaries[bi]));
    }
  }
  return out;
}

}  // namespace nmcd
