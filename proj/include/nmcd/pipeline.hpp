#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nmcd/dp.hpp"
#include "nmcd/modelselect.hpp"
#include "nmcd/screen.hpp"

namespace nmcd {

struct DetectConfig {
  WeightVariant weight = WeightVariant::Zhang;
  bool correction = true;
  bool screening = true;
  std::optional<int> window;    // prescreen window, default ceil((log n)^1.5 / 2)
  std::optional<double> zeta;   // penalty, default (log n)^zeta_exponent / 2
  double zeta_exponent = 2.1;
  std::optional<int> k_bar;     // largest L tried; default: candidate count
  std::optional<int> known_k;   // skip selection and fit exactly this many
  bool allow_zero = false;      // let selection return zero change points
};

struct DetectTiming {
  double screen_ms = 0.0;
  double cost_ms = 0.0;
  double dp_ms = 0.0;
  double total_ms = 0.0;
};

struct DetectionResult {
  Segmentation segmentation;
  int k_hat = 0;
  double loglik = 0.0;                   // objective at the returned segmentation
  std::optional<BicTrace> bic;           // absent in known-k mode
  std::optional<CandidateSet> candidates;
  std::vector<int> grid;                 // boundary grid the solver ran on
  std::vector<Segmentation> per_l;       // best segmentation for each L <= solved max
  std::vector<std::string> warnings;
  DetectTiming timing;
};

// Full detection pass: optional prescreen to a candidate grid, pair costs,
// exact dynamic program, then penalized selection (or a fixed known_k fit).
// An empty candidate set falls back to the full grid with a warning.
// Requires n >= 8 with screening on, n >= 3 otherwise.
DetectionResult detect(const std::vector<double>& values, const DetectConfig& config = {});

}  // namespace nmcd
