#include "nmcd/screen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nmcd {

namespace {

double cvm_sorted(std::span<const double> a, std::span<const double> b) {
  const std::size_t n1 = a.size(), n2 = b.size();
  std::size_t i = 0, j = 0;
  double c1 = 0.0, c2 = 0.0, acc = 0.0;
  while (i < n1 || j < n2) {
    const double z = (j >= n2 || (i < n1 && a[i] <= b[j])) ? a[i] : b[j];
    int k = 0;
    while (i < n1 && a[i] == z) ++i, ++k;
    while (j < n2 && b[j] == z) ++j, ++k;
    c1 = static_cast<double>(i);
    c2 = static_cast<double>(j);
    const double d = c1 / n1 - c2 / n2;
    acc += k * d * d;
  }
  const double total = static_cast<double>(n1 + n2);
  return (static_cast<double>(n1) * n2 / (total * total)) * acc;
}

double window_statistic(const std::vector<double>& values, int i, int n_i,
                        std::vector<double>& left, std::vector<double>& right) {
  left.assign(values.begin() + (i - n_i), values.begin() + i);
  right.assign(values.begin() + i, values.begin() + (i + n_i));
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return cvm_sorted(left, right);
}

void check_window(int n, int n_i) {
  if (n_i < 2 || 2 * n_i > n) throw std::invalid_argument("window must satisfy 2 <= n_i and 2*n_i <= n");
}

// argmax of gamma over (i - n_i, i + n_i], smallest index on ties
void select_candidates(CandidateSet& out, int n) {
  const int n_i = out.n_i;
  for (int i = n_i; i <= n - n_i; ++i) {
    int arg = i - n_i + 1;
    for (int j = arg + 1; j <= i + n_i; ++j) {
      if (out.gamma[j] > out.gamma[arg]) arg = j;
    }
    if (arg == i) out.candidates.push_back(i);
  }
}

}  // namespace

double cvm_two_sample(std::span<const double> left, std::span<const double> right) {
  if (left.empty() || right.empty()) throw std::invalid_argument("both samples must be nonempty");
  std::vector<double> a(left.begin(), left.end());
  std::vector<double> b(right.begin(), right.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return cvm_sorted(a, b);
}

CandidateSet scan(const Sample& sample, int n_i) {
  const int n = sample.n();
  check_window(n, n_i);
  CandidateSet out;
  out.n_i = n_i;
  out.gamma.assign(n + 1, 0.0);
  const std::vector<double>& values = sample.values();
#pragma omp parallel
  {
    std::vector<double> left, right;
#pragma omp for schedule(static)
    for (int i = n_i; i <= n - n_i; ++i) {
      out.gamma[i] = window_statistic(values, i, n_i, left, right);
    }
  }
  select_candidates(out, n);
  return out;
}

CandidateSet scan_serial(const Sample& sample, int n_i) {
  const int n = sample.n();
  check_window(n, n_i);
  CandidateSet out;
  out.n_i = n_i;
  out.gamma.assign(n + 1, 0.0);
  std::vector<double> left, right;
  for (int i = n_i; i <= n - n_i; ++i) {
    out.gamma[i] = window_statistic(sample.values(), i, n_i, left, right);
  }
  select_candidates(out, n);
  return out;
}

int default_window(int n) {
  if (n < 8) throw std::invalid_argument("default window needs n >= 8");
  return static_cast<int>(std::ceil(std::pow(std::log(n), 1.5) / 2.0));
}

}  // namespace nmcd
