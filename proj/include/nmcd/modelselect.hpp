#pragma once

#include <map>
#include <vector>

namespace nmcd {

struct BicEntry {
  int l = 0;
  double max_loglik = 0.0;
  double bic = 0.0;
};

struct BicTrace {
  double zeta = 0.0;
  int l_min = 0;
  int k_bar = 0;
  std::vector<BicEntry> entries;  // one per L in [l_min, k_bar]
  int k_hat = 0;
};

// (log n)^exponent / 2, requires n >= 3 and exponent > 0
double default_zeta(int n, double exponent = 2.1);

// BIC over the exact-L maxima: bic(L) = -max_loglik(L) + L * zeta.
// k_hat is the smallest minimizing L. dp_values must contain every L in
// [l_min, k_bar]; l_min must be 0 or 1.
BicTrace select_bic(const std::map<int, double>& dp_values, double zeta, int l_min, int k_bar);

}  // namespace nmcd
