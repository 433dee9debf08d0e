#include "nmcd/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nmcd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_bounds(const Sample& sample, int i, int j) {
  if (i < 1 || j <= i || j > sample.n() + 1) throw std::out_of_range("segment bounds outside [1, n+1]");
}

// two-pass sum of squared deviations
double squared_deviation(const Sample& sample, int i, int j) {
  const std::vector<double>& x = sample.values();
  const int m = j - i;
  double sum = 0.0;
  for (int p = i; p < j; ++p) sum += x[p - 1];
  const double mean = sum / m;
  double ss = 0.0;
  for (int p = i; p < j; ++p) {
    const double d = x[p - 1] - mean;
    ss += d * d;
  }
  return ss;
}

// O(1) segment costs from prefix sums of x and x^2
struct PrefixCosts {
  std::vector<double> s1, s2;

  explicit PrefixCosts(const std::vector<double>& x) : s1(x.size() + 1, 0.0), s2(x.size() + 1, 0.0) {
    for (std::size_t p = 0; p < x.size(); ++p) {
      s1[p + 1] = s1[p] + x[p];
      s2[p + 1] = s2[p] + x[p] * x[p];
    }
  }

  double sse(int i, int j) const {
    const double m = j - i;
    const double d1 = s1[j - 1] - s1[i - 1];
    const double d2 = s2[j - 1] - s2[i - 1];
    return std::max(d2 - d1 * d1 / m, 0.0);
  }
};

}  // namespace

double ls_mean_cost(const Sample& sample, int i, int j) {
  check_bounds(sample, i, j);
  return squared_deviation(sample, i, j);
}

double ls_var_cost(const Sample& sample, int i, int j) {
  check_bounds(sample, i, j);
  const int m = j - i;
  if (m < 2) return kInf;
  const double var = squared_deviation(sample, i, j) / m;
  if (!(var > 0.0)) return kInf;
  return m * std::log(var);
}

DetectionResult pl_detect(const std::vector<double>& values, const PlConfig& config) {
  const auto t_start = std::chrono::steady_clock::now();
  const int n = static_cast<int>(values.size());
  if (n < 3) throw std::invalid_argument("need at least 3 observations");
  if (config.k_bar && *config.k_bar < 1) throw std::invalid_argument("k_bar must be at least 1");
  if (config.known_k && *config.known_k < 1) throw std::invalid_argument("known_k must be at least 1");
  if (config.zeta && !(*config.zeta > 0.0)) throw std::invalid_argument("zeta must be positive");

  const Sample sample = build_sample(values);
  const PrefixCosts prefix(sample.values());

  DetectionResult result;
  result.grid.resize(n + 1);
  std::iota(result.grid.begin(), result.grid.end(), 1);

  const bool mean_only = config.criterion == PlCriterion::Mean;
  const auto t_cost = std::chrono::steady_clock::now();
  const PairCosts costs = compute_pair_costs(result.grid, n, [&](int a, int b) {
    if (mean_only) return -prefix.sse(a, b);
    const int m = b - a;
    if (m < 2) return -kInf;
    const double var = prefix.sse(a, b) / m;
    if (!(var > 0.0)) return -kInf;
    return -(m * std::log(var));
  });
  result.timing.cost_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_cost).count();

  const int interior = costs.interior_count();
  // every segment needs at least two points under the variance criterion
  const int feasible_max = mean_only ? interior : std::min(interior, n / 2 - 1);

  const auto t_dp = std::chrono::steady_clock::now();
  if (config.known_k) {
    const int k = *config.known_k;
    if (k > feasible_max) throw std::invalid_argument("known_k exceeds grid capacity");
    const DpTable table = solve_dp(costs, k);
    result.k_hat = k;
    result.segmentation = reconstruct(table, k);
    result.loglik = table.best_value(k);
    for (int l = 0; l <= k && std::isfinite(table.best_value(l)); ++l) {
      result.per_l.push_back(reconstruct(table, l));
    }
  } else {
    int k_bar = config.k_bar ? *config.k_bar : std::min(30, feasible_max);
    if (k_bar > feasible_max) {
      result.warnings.push_back("k_bar capped to the feasible maximum");
      k_bar = feasible_max;
    }
    const int l_min = config.allow_zero ? 0 : 1;
    const DpTable table = solve_dp(costs, k_bar);
    std::map<int, double> dp_values;
    for (int l = l_min; l <= k_bar; ++l) dp_values[l] = table.best_value(l);
    const double zeta = config.zeta ? *config.zeta : std::log(static_cast<double>(n));
    result.bic = select_bic(dp_values, zeta, l_min, k_bar);
    result.k_hat = result.bic->k_hat;
    result.segmentation = reconstruct(table, result.k_hat);
    result.loglik = table.best_value(result.k_hat);
    for (int l = 0; l <= k_bar && std::isfinite(table.best_value(l)); ++l) {
      result.per_l.push_back(reconstruct(table, l));
    }
  }
  result.timing.dp_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_dp).count();
  result.timing.total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start).count();
  return result;
}

}  // namespace nmcd
