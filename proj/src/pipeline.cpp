#include "nmcd/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace nmcd {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<int> full_grid(int n) {
  std::vector<int> grid(n + 1);
  std::iota(grid.begin(), grid.end(), 1);
  return grid;
}

void check_config(const DetectConfig& cfg) {
  if (cfg.window && *cfg.window < 2) throw std::invalid_argument("window must be at least 2");
  if (cfg.zeta && !(*cfg.zeta > 0.0)) throw std::invalid_argument("zeta must be positive");
  if (!(cfg.zeta_exponent > 0.0)) throw std::invalid_argument("zeta exponent must be positive");
  if (cfg.k_bar && *cfg.k_bar < 1) throw std::invalid_argument("k_bar must be at least 1");
  if (cfg.known_k && *cfg.known_k < 1) throw std::invalid_argument("known_k must be at least 1");
}

}  // namespace

DetectionResult detect(const std::vector<double>& values, const DetectConfig& config) {
  check_config(config);
  const auto t_start = Clock::now();
  const int n = static_cast<int>(values.size());
  if (config.screening && n < 8) throw std::invalid_argument("need at least 8 observations");
  if (!config.screening && n < 3) throw std::invalid_argument("need at least 3 observations");

  Sample sample = build_sample(values);
  DetectionResult result;

  if (config.screening) {
    const auto t_screen = Clock::now();
    const int n_i = config.window ? *config.window : default_window(n);
    result.candidates = scan(sample, n_i);
    result.timing.screen_ms = ms_since(t_screen);
    if (result.candidates->candidates.empty()) {
      result.warnings.push_back("screening found no candidates; fell back to the full grid");
      result.grid = full_grid(n);
    } else {
      result.grid.reserve(result.candidates->candidates.size() + 2);
      result.grid.push_back(1);
      for (int i : result.candidates->candidates) result.grid.push_back(i + 1);
      result.grid.push_back(n + 1);
    }
  } else {
    result.grid = full_grid(n);
  }

  const auto t_cost = Clock::now();
  const CostModel model(std::move(sample), config.weight, config.correction);
  const PairCosts costs = pair_costs(model, result.grid);
  result.timing.cost_ms = ms_since(t_cost);

  const int interior = costs.interior_count();
  const bool screened_grid = config.screening && result.warnings.empty();

  const auto t_dp = Clock::now();
  if (config.known_k) {
    const int k = *config.known_k;
    if (k > interior) throw std::invalid_argument("known_k exceeds grid capacity");
    const DpTable table = solve_dp(costs, k);
    result.k_hat = k;
    result.segmentation = reconstruct(table, k);
    result.loglik = table.best_value(k);
    result.per_l.reserve(k + 1);
    for (int l = 0; l <= k; ++l) result.per_l.push_back(reconstruct(table, l));
  } else {
    int k_bar = config.k_bar ? *config.k_bar
                             : (screened_grid ? static_cast<int>(result.candidates->candidates.size())
                                              : interior);
    if (k_bar > interior) {
      result.warnings.push_back("k_bar capped to the interior grid size");
      k_bar = interior;
    }
    const int l_min = config.allow_zero ? 0 : 1;
    const DpTable table = solve_dp(costs, k_bar);
    std::map<int, double> dp_values;
    for (int l = l_min; l <= k_bar; ++l) dp_values[l] = table.best_value(l);
    const double zeta =
        config.zeta ? *config.zeta : default_zeta(n, config.zeta_exponent);
    result.bic = select_bic(dp_values, zeta, l_min, k_bar);
    result.k_hat = result.bic->k_hat;
    result.segmentation = reconstruct(table, result.k_hat);
    result.loglik = table.best_value(result.k_hat);
    result.per_l.reserve(k_bar + 1);
    for (int l = 0; l <= k_bar; ++l) result.per_l.push_back(reconstruct(table, l));
  }
  result.timing.dp_ms = ms_since(t_dp);
  result.timing.total_ms = ms_since(t_start);
  return result;
}

}  // namespace nmcd
