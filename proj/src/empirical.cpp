#include "nmcd/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nmcd {

Sample build_sample(std::vector<double> values) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw std::invalid_argument("sample needs at least 2 observations");
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("sample contains a non-finite value");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&values](int a, int b) { return values[a] < values[b]; });

  std::vector<int> ranks(n);
  std::vector<double> sorted(n);
  for (int k = 0; k < n; ++k) {
    ranks[order[k]] = k + 1;
    sorted[k] = values[order[k]];
  }
  return Sample(std::move(values), std::move(ranks), std::move(sorted));
}

std::vector<int> Sample::segment_rank_multiset(int i, int j) const {
  if (i < 1 || j <= i || j > n() + 1) throw std::out_of_range("segment bounds outside [1, n+1]");
  std::vector<int> out(ranks_.begin() + (i - 1), ranks_.begin() + (j - 1));
  std::sort(out.begin(), out.end());
  return out;
}

WeightTable build_weight_table(int n, WeightVariant variant) {
  if (n < 2) throw std::invalid_argument("weight table needs n >= 2");
  WeightTable t;
  t.variant = variant;
  t.n = n;
  t.point_weights.assign(n + 1, 0.0);
  if (variant == WeightVariant::Zhang) {
    for (int l = 2; l <= n - 1; ++l) {
      t.point_weights[l] = static_cast<double>(n) / (static_cast<double>(l) * (n - l));
    }
  } else {
    for (int l = 1; l <= n - 1; ++l) {
      t.point_weights[l] = 1.0 / n;
    }
  }
  t.prefix.assign(n + 1, 0.0);
  for (int l = 1; l <= n; ++l) {
    t.prefix[l] = t.prefix[l - 1] + t.point_weights[l];
  }
  return t;
}

}  // namespace nmcd
