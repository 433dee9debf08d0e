#pragma once

#include <cstdint>
#include <vector>

#include "nmcd/dp.hpp"

namespace nmcd {

// Blocks1:     eleven mean shifts at fixed fractions of n
// MeanScale2:  two mean shifts and two noise-scale changes
// Shape3:      distribution changes with constant mean and variance
//              (sigma and error are ignored)
// Diverging1:  ceil(0.4*sqrt(n)) alternating mean shifts at uniform positions
// Diverging2:  ceil(0.2*sqrt(n)) alternating noise-scale changes
enum class SimModel { Blocks1, MeanScale2, Shape3, Diverging1, Diverging2 };

enum class ErrorDist { Normal, T3, ChiSq1 };

struct SimSpec {
  SimModel model = SimModel::Blocks1;
  int n = 1000;
  double sigma = 1.0;
  ErrorDist error = ErrorDist::Normal;
  std::uint64_t seed = 1;
};

struct SimData {
  std::vector<double> values;
  Segmentation truth;
};

// Deterministic for a given spec. Draw order: change-point positions (where
// random), then jump/scale parameters, then noise in index order. Requires
// n >= 20 and sigma > 0 (except Shape3).
SimData generate(const SimSpec& spec);

// Smallest gap between consecutive boundaries of (1, truth..., n+1).
int segment_spacing(const Segmentation& truth);

}  // namespace nmcd
