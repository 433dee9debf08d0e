#include "nmcd/simgen.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "nmcd/rng.hpp"

namespace nmcd {

namespace {

constexpr double kBlocksQ[] = {0.1, 0.13, 0.15, 0.23, 0.25, 0.40, 0.44, 0.65, 0.76, 0.78, 0.81};
constexpr double kBlocksH[] = {2.01, -2.51, 1.51, -2.01, 2.51, -2.11, 1.05, 2.16, -1.56, 2.56, -2.11};

constexpr double kMeanScaleQ[] = {0.20, 0.40, 0.65, 0.85};
constexpr double kMeanScaleH[] = {3.0, 0.0, -2.0, 0.0};
constexpr double kMeanScaleV[] = {1.0, 5.0, 1.0, 0.25};

constexpr double kShapeQ[] = {0.20, 0.50, 0.75};

double draw_error(Rng& rng, ErrorDist error) {
  switch (error) {
    case ErrorDist::Normal: return rng.normal();
    case ErrorDist::T3: return rng.student_t3();
    case ErrorDist::ChiSq1: return rng.chisq_std(1);
  }
  throw std::invalid_argument("unknown error distribution");
}

std::vector<int> fixed_taus(int n, std::span<const double> q) {
  std::vector<int> taus(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    taus[j] = static_cast<int>(std::lround(n * q[j]));
  }
  return taus;
}

// Sorted rounded uniform positions, redrawn until every gap (including the
// gaps to 1 and n+1) is at least 2.
std::vector<int> draw_taus(Rng& rng, int n, int k) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<double> u(k);
    for (double& v : u) v = rng.uniform01();
    std::sort(u.begin(), u.end());
    std::vector<int> taus(k);
    for (int j = 0; j < k; ++j) taus[j] = static_cast<int>(std::lround(n * u[j]));
    bool ok = taus.front() >= 3 && taus.back() <= n - 1;
    for (int j = 1; ok && j < k; ++j) ok = taus[j] - taus[j - 1] >= 2;
    if (ok) return taus;
  }
  throw std::runtime_error("could not draw admissible change-point positions");
}

// mean shifts h[j] at taus[j] plus sigma-scaled noise
std::vector<double> mean_shift_series(Rng& rng, const SimSpec& spec, const std::vector<int>& taus,
                                      std::span<const double> h) {
  std::vector<double> x(spec.n);
  double mean = 0.0;
  std::size_t next = 0;
  for (int i = 1; i <= spec.n; ++i) {
    while (next < taus.size() && i >= taus[next]) mean += h[next++];
    x[i - 1] = mean + spec.sigma * draw_error(rng, spec.error);
  }
  return x;
}

// mean shifts h[j] and cumulative noise-scale factors v[j]
std::vector<double> mean_scale_series(Rng& rng, const SimSpec& spec, const std::vector<int>& taus,
                                      std::span<const double> h, std::span<const double> v) {
  std::vector<double> x(spec.n);
  double mean = 0.0, scale = 1.0;
  std::size_t next = 0;
  for (int i = 1; i <= spec.n; ++i) {
    while (next < taus.size() && i >= taus[next]) {
      mean += h[next];
      scale *= v[next];
      ++next;
    }
    x[i - 1] = mean + spec.sigma * scale * draw_error(rng, spec.error);
  }
  return x;
}

std::vector<double> shape_series(Rng& rng, int n, const std::vector<int>& taus) {
  std::vector<double> x(n);
  std::size_t next = 0;
  int segment = 0;
  for (int i = 1; i <= n; ++i) {
    while (next < taus.size() && i >= taus[next]) ++next, ++segment;
    switch (segment) {
      case 0: x[i - 1] = rng.normal(); break;
      case 1: x[i - 1] = rng.chisq_std(3); break;
      case 2: x[i - 1] = rng.chisq_std(1); break;
      default: x[i - 1] = rng.normal(); break;
    }
  }
  return x;
}

}  // namespace

SimData generate(const SimSpec& spec) {
  if (spec.n < 20) throw std::invalid_argument("simulation needs n >= 20");
  if (spec.model != SimModel::Shape3 && !(spec.sigma > 0.0)) {
    throw std::invalid_argument("sigma must be positive");
  }
  Rng rng(spec.seed);

  std::vector<int> taus;
  std::vector<double> x;
  switch (spec.model) {
    case SimModel::Blocks1:
      taus = fixed_taus(spec.n, kBlocksQ);
      x = mean_shift_series(rng, spec, taus, kBlocksH);
      break;
    case SimModel::MeanScale2:
      taus = fixed_taus(spec.n, kMeanScaleQ);
      x = mean_scale_series(rng, spec, taus, kMeanScaleH, kMeanScaleV);
      break;
    case SimModel::Shape3:
      taus = fixed_taus(spec.n, kShapeQ);
      x = shape_series(rng, spec.n, taus);
      break;
    case SimModel::Diverging1: {
      const int k = static_cast<int>(std::ceil(0.4 * std::sqrt(static_cast<double>(spec.n))));
      taus = draw_taus(rng, spec.n, k);
      std::vector<double> h(k);
      for (int j = 0; j < k; ++j) {
        h[j] = (j % 2 == 0 ? -1.5 : 1.5) + 0.2 * rng.normal();
      }
      x = mean_shift_series(rng, spec, taus, h);
      break;
    }
    case SimModel::Diverging2: {
      const int k = static_cast<int>(std::ceil(0.2 * std::sqrt(static_cast<double>(spec.n))));
      taus = draw_taus(rng, spec.n, k);
      std::vector<double> h(k, 0.0), v(k);
      for (int j = 0; j < k; ++j) {
        const double nu = 0.2 * rng.normal();
        v[j] = j % 2 == 0 ? 1.0 / (5.0 + nu) : 5.0 + nu;
      }
      x = mean_scale_series(rng, spec, taus, h, v);
      break;
    }
  }
  return {std::move(x), Segmentation{spec.n, std::move(taus)}};
}

int segment_spacing(const Segmentation& truth) {
  const std::vector<int> b = truth.boundaries();
  int spacing = truth.n;
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    spacing = std::min(spacing, b[k + 1] - b[k]);
  }
  return spacing;
}

}  // namespace nmcd
