#pragma once

#include <span>
#include <vector>

#include "nmcd/empirical.hpp"

namespace nmcd {

// Output of the candidate prescreen. gamma[i] is the two-sample statistic
// for the windows ending at i and starting at i+1; candidates holds the
// window positions i that are the argmax of gamma over (i - n_i, i + n_i],
// ties resolved to the smallest index. A candidate i proposes i+1 as the
// first index of a new segment.
struct CandidateSet {
  int n_i = 0;
  std::vector<double> gamma;    // 1-based, size n+1; zero outside the scan range
  std::vector<int> candidates;  // strictly increasing window positions
};

// Two-sample Cramer-von Mises statistic
//   (n1*n2 / N^2) * sum over the N pooled points of (F1 - F2)^2
// with the empirical CDFs evaluated at every pooled point (tied values
// enter as a group). Zero iff the two empirical CDFs agree everywhere.
double cvm_two_sample(std::span<const double> left, std::span<const double> right);

// Window scan over i in [n_i, n - n_i]; requires n_i >= 2 and 2*n_i <= n.
// `scan` parallelizes the statistic computation across window positions;
// `scan_serial` is the reference. Identical output.
CandidateSet scan(const Sample& sample, int n_i);
CandidateSet scan_serial(const Sample& sample, int n_i);

// ceil((log n)^1.5 / 2), requires n >= 8
int default_window(int n);

}  // namespace nmcd
