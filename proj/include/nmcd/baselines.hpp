#pragma once

#include <optional>
#include <vector>

#include "nmcd/pipeline.hpp"

namespace nmcd {

enum class PlCriterion { Mean, MeanVar };

// Sum of squared deviations from the segment mean over [i, j).
double ls_mean_cost(const Sample& sample, int i, int j);

// m * log of the segment's mean squared deviation over [i, j).
// Returns +infinity when m < 2 or the variance vanishes (infeasible).
double ls_var_cost(const Sample& sample, int i, int j);

struct PlConfig {
  PlCriterion criterion = PlCriterion::Mean;
  std::optional<int> known_k;
  std::optional<int> k_bar;    // default min(30, feasible maximum)
  std::optional<double> zeta;  // default log n
  bool allow_zero = false;
};

// Parametric least-squares baseline: the negated mean or mean-variance cost
// maximized by the shared dynamic program over the full grid, with BIC
// selection unless known_k is given. Same result shape as detect();
// candidates stay empty. Requires n >= 3.
DetectionResult pl_detect(const std::vector<double>& values, const PlConfig& config = {});

}  // namespace nmcd
