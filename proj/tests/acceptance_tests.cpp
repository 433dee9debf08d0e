// Acceptance gate: every release-blocking behavior in one binary, one
// PASS/FAIL line each, exit nonzero if anything fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nmcd/baselines.hpp"
#include "nmcd/metrics.hpp"
#include "nmcd/pipeline.hpp"
#include "nmcd/rng.hpp"
#include "nmcd/simgen.hpp"

using namespace nmcd;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double sec() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::vector<int> full_grid(int n) {
  std::vector<int> grid(n + 1);
  std::iota(grid.begin(), grid.end(), 1);
  return grid;
}

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

// ---------------------------------------------------------------------------

void criterion_1() {
  Timer t;
  Rng rng(101);
  int checked = 0;
  bool ok = true;
  for (int inst = 0; inst < 500 && ok; ++inst) {
    const int n = 4 + static_cast<int>(rng.next_u64() % 11);
    std::vector<double> x(n);
    for (double& v : x) v = rng.normal();
    if (inst % 3 == 0) {
      for (int i = n / 2; i < n; ++i) x[i] += 2.0;
    }
    const std::vector<int> grid = full_grid(n);

    const CostModel model(build_sample(x),
                          inst % 2 ? WeightVariant::Uniform : WeightVariant::Zhang,
                          inst % 4 < 2);
    const PairCosts rank_costs = pair_costs(model, grid);
    const Sample s = build_sample(x);
    const PairCosts ls_costs =
        compute_pair_costs(grid, n, [&](int a, int b) { return -ls_mean_cost(s, a, b); });

    for (const PairCosts* costs : {&rank_costs, &ls_costs}) {
      const int l_max = std::min(3, costs->interior_count());
      const DpTable table = solve_dp(*costs, l_max);
      for (int L = 0; L <= l_max; ++L) {
        const auto [bv, bs] = brute_force_dp(*costs, L);
        if (table.best_value(L) != bv || !(reconstruct(table, L) == bs)) {
          ok = false;
          break;
        }
        ++checked;
      }
      if (!ok) break;
    }
  }
  const double sec = t.sec();
  report("criterion 1 (dynamic program matches exhaustive search)", ok && sec < 10.0,
         fmt("500 instances, %d solve/brute pairs bitwise-identical, %.1f s (budget 10)",
             checked, sec));
}

void criterion_2() {
  Timer t;
  bool ok = true;
  for (int rep = 0; rep < 100 && ok; ++rep) {
    const SimModel model = rep % 3 == 0   ? SimModel::Blocks1
                           : rep % 3 == 1 ? SimModel::MeanScale2
                                          : SimModel::Shape3;
    const SimData d = generate({model, 200, 0.5, ErrorDist::Normal, substream_seed(2, rep)});
    std::vector<double> expd(d.values.size()), affine(d.values.size());
    std::transform(d.values.begin(), d.values.end(), expd.begin(),
                   [](double v) { return std::exp(v); });
    std::transform(d.values.begin(), d.values.end(), affine.begin(),
                   [](double v) { return 2.0 * v + 7.0; });
    const DetectionResult base = detect(d.values);
    for (const auto& alt : {expd, affine}) {
      const DetectionResult r = detect(alt);
      if (!(r.segmentation == base.segmentation) || r.k_hat != base.k_hat) ok = false;
    }
  }
  const double sec = t.sec();
  report("criterion 2 (detection is invariant to monotone transforms)", ok && sec < 30.0,
         fmt("100 datasets of 200 points, exp and affine transforms identical, %.1f s (budget 30)",
             sec));
}

void criterion_3() {
  bool ok = true;
  Rng rng(303);
  for (int rep = 0; rep < 100 && ok; ++rep) {
    std::vector<double> x(100);
    for (double& v : x) v = rng.normal();
    if (rep % 2 == 0) {
      for (int i = 50; i < 100; ++i) x[i] += 1.5;
    }
    const CostModel model(build_sample(x), WeightVariant::Zhang, /*correction=*/false);
    const PairCosts costs = pair_costs(model, full_grid(100));
    const DpTable table = solve_dp(costs, 20);
    for (int L = 1; L <= 20; ++L) {
      if (table.best_value(L) < table.best_value(L - 1)) ok = false;
    }
  }
  report("criterion 3 (uncorrected objective is nondecreasing in the split count)", ok,
         "100 datasets of 100 points, best value nondecreasing for L up to 20");
}

void criterion_4() {
  Timer t;
  std::vector<double> xi_rank, xi_ls;
  for (int rep = 0; rep < 200; ++rep) {
    const SimData d = generate({SimModel::Blocks1, 1000, 0.5, ErrorDist::Normal,
                                substream_seed(4, rep)});
    DetectConfig cfg;
    cfg.screening = false;
    cfg.known_k = 11;
    const DetectionResult r = detect(d.values, cfg);
    xi_rank.push_back(xi(r.segmentation.change_points, d.truth.change_points));

    PlConfig pl;
    pl.known_k = 11;
    const DetectionResult p = pl_detect(d.values, pl);
    xi_ls.push_back(xi(p.segmentation.change_points, d.truth.change_points));
  }
  const double mr = mean_of(xi_rank), ml = mean_of(xi_ls);
  const bool ok = mr >= 0.4 && mr <= 2.0 && ml >= 0.4 && ml <= 2.0;
  report("criterion 4 (known-count accuracy on the eleven-shift benchmark)", ok,
         fmt("200 reps, mean distance to truth: rank %.3f, least-squares %.3f "
             "(both within [0.4, 2.0]), %.0f s",
             mr, ml, t.sec()));
}

void criterion_5() {
  Timer t;
  const ErrorDist dists[] = {ErrorDist::Normal, ErrorDist::ChiSq1, ErrorDist::T3};
  const double bounds[] = {0.05, 0.15, 0.8};
  double means[3] = {0, 0, 0};
  double pl_t3_mean = 0.0;
  bool ok = true;
  for (int di = 0; di < 3; ++di) {
    std::vector<double> dk, dk_pl;
    for (int rep = 0; rep < 200; ++rep) {
      const SimData d = generate({SimModel::Blocks1, 1000, 0.5, dists[di],
                                  substream_seed(51 + di, rep)});
      const DetectionResult r = detect(d.values);
      dk.push_back(std::abs(r.k_hat - 11));
      if (dists[di] == ErrorDist::T3) {
        const DetectionResult p = pl_detect(d.values);
        dk_pl.push_back(std::abs(p.k_hat - 11));
      }
    }
    means[di] = mean_of(dk);
    if (means[di] > bounds[di]) ok = false;
    if (!dk_pl.empty()) pl_t3_mean = mean_of(dk_pl);
  }
  const bool gap_ok = pl_t3_mean - means[2] >= 3.0;
  report("criterion 5 (estimated counts across error distributions)", ok && gap_ok,
         fmt("200 reps each, mean |k error|: normal %.3f (<=0.05), chi-square %.3f (<=0.15), "
             "heavy-tail %.3f (<=0.8); least-squares heavy-tail %.2f exceeds by %.2f (>=3), %.0f s",
             means[0], means[1], means[2], pl_t3_mean, pl_t3_mean - means[2], t.sec()));
}

void criterion_6() {
  Timer t;
  std::vector<double> dk, rnd;
  for (int rep = 0; rep < 200; ++rep) {
    const SimData d = generate({SimModel::Shape3, 500, 1.0, ErrorDist::Normal,
                                substream_seed(6, rep)});
    DetectConfig cfg;
    cfg.correction = false;
    cfg.zeta_exponent = 2.0;
    const DetectionResult r = detect(d.values, cfg);
    dk.push_back(std::abs(r.k_hat - 3));
    rnd.push_back(rand_index(r.segmentation, d.truth));
  }
  const double mk = mean_of(dk), mr = mean_of(rnd);
  report("criterion 6 (distribution-shape benchmark quality)", mk <= 1.0 && mr >= 0.85,
         fmt("200 reps, mean |k error| %.3f (<=1.0), mean rand index %.3f (>=0.85), %.0f s",
             mk, mr, t.sec()));
}

void criterion_7() {
  Timer t;
  int covered_reps = 0;
  double total_candidates = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const SimData d = generate({SimModel::Blocks1, 1000, 0.5, ErrorDist::Normal,
                                substream_seed(77, rep)});
    const CandidateSet cand = scan(build_sample(d.values), 10);
    total_candidates += static_cast<double>(cand.candidates.size());
    bool all = true;
    for (int tau : d.truth.change_points) {
      int best = 1 << 30;
      for (int c : cand.candidates) best = std::min(best, std::abs(c + 1 - tau));
      if (best > 7) all = false;
    }
    if (all) ++covered_reps;
  }
  const double mean_o = total_candidates / 200.0;
  report("criterion 7 (screening covers the true changes)",
         covered_reps >= 190 && mean_o < 60.0,
         fmt("200 reps, all eleven changes within 7 of a candidate in %d/200 (>=190), "
             "mean candidate count %.1f (<60), %.0f s",
             covered_reps, mean_o, t.sec()));
}

void criterion_8() {
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
#endif
  const SimData d = generate({SimModel::Blocks1, 8811, 0.5, ErrorDist::Normal, 1});
  Timer t;
  const DetectionResult r = detect(d.values);
  const double sec = t.sec();
#ifdef _OPENMP
  omp_set_num_threads(saved);
#endif
  const int n_cand =
      r.candidates ? static_cast<int>(r.candidates->candidates.size()) : 0;
  report("criterion 8 (single-core scale run)",
         sec < 60.0 && n_cand >= 50 && n_cand <= 600,
         fmt("8811 points on one thread in %.1f s (<60), %d candidates (in [50, 600]), "
             "k_hat %d",
             sec, n_cand, r.k_hat));
}

void criterion_9() {
  Timer t;
  std::vector<double> xi_tail, xi_flat;
  for (int rep = 0; rep < 200; ++rep) {
    const SimData d = generate({SimModel::Blocks1, 500, 0.5, ErrorDist::Normal,
                                substream_seed(9, rep)});
    DetectConfig cfg;
    cfg.screening = false;
    cfg.known_k = 11;
    const DetectionResult a = detect(d.values, cfg);
    cfg.weight = WeightVariant::Uniform;
    const DetectionResult b = detect(d.values, cfg);
    xi_tail.push_back(xi(a.segmentation.change_points, d.truth.change_points));
    xi_flat.push_back(xi(b.segmentation.change_points, d.truth.change_points));
  }
  const double mt = mean_of(xi_tail), mf = mean_of(xi_flat);
  report("criterion 9 (tail-emphasizing weights beat uniform weights)", mt <= mf,
         fmt("200 reps known-count, mean distance: tail-weighted %.3f <= uniform %.3f, %.0f s",
             mt, mf, t.sec()));
}

void criterion_10() {
  int bad = 0, total = 0;
  const auto expect = [&](bool cond) {
    ++total;
    if (!cond) ++bad;
  };
  const auto near = [](double a, double b) { return std::abs(a - b) < 1e-12; };

  expect(bernoulli_entropy(0.5) == std::log(0.5));
  expect(bernoulli_entropy(0.0) == 0.0);
  expect(bernoulli_entropy(1.0) == 0.0);
  expect(bernoulli_entropy(0.25) == 0.25 * std::log(0.25) + 0.75 * std::log(0.75));

  expect(corrected_fraction(2, 3) == 0.5);
  expect(corrected_fraction(0, 5) == 0.0);
  expect(corrected_fraction(5, 5) == 0.9);
  expect(corrected_fraction(2, 3, false) == 2.0 / 3.0);
  expect(corrected_fraction(3, 4, false) == 0.75);

  const WeightTable z4 = build_weight_table(4, WeightVariant::Zhang);
  expect(z4.point_weight(1) == 0.0);
  expect(z4.point_weight(2) == 1.0);
  expect(z4.point_weight(3) == 4.0 / 3.0);
  expect(z4.point_weight(4) == 0.0);
  expect(build_weight_table(3, WeightVariant::Zhang).point_weight(2) == 1.5);
  const WeightTable u4 = build_weight_table(4, WeightVariant::Uniform);
  expect(u4.point_weight(1) == 0.25 && u4.point_weight(3) == 0.25 &&
         u4.point_weight(4) == 0.0);

  expect(default_window(1000) == 10);
  expect(default_window(500) == 8);
  expect(default_window(8811) == 14);
  expect(default_window(200) == 7);
  expect(default_window(8) == 2);

  expect(near(default_zeta(1000, 2.1), 28.945268701526796));
  expect(near(default_zeta(500, 2.1), 23.181357907714148));
  expect(near(default_zeta(500, 2.0), 19.31067690848734));
  expect(near(default_zeta(200, 2.1), 16.58287162660452));
  const double z8811 = default_zeta(8811, 2.0);
  expect(z8811 > 41.0 && z8811 < 41.5 && near(z8811, 41.25731353098376));

  expect(xi({10, 20}, {12}) == 2);
  expect(xi({12}, {10, 20}) == 8);
  expect(xi_sum({10, 20}, {12}) == 10);

  expect(near(rand_index(Segmentation{4, {3}}, Segmentation{4, {}}), 1.0 / 3.0));
  expect(rand_index(Segmentation{4, {3}}, Segmentation{4, {3}}) == 1.0);

  expect(cvm_two_sample(std::vector<double>{1.0, 2.0}, std::vector<double>{3.0, 4.0}) == 0.375);
  expect(cvm_two_sample(std::vector<double>{1.0}, std::vector<double>{2.0}) == 0.25);

  const CostModel whole(build_sample({1.0, 2.0, 3.0}), WeightVariant::Zhang, true);
  expect(near(whole.segment_cost(1, 4), -3.119162312519754));

  const Sample v = build_sample({0.0, 2.0, 4.0});
  expect(near(ls_var_cost(v, 1, 4), 2.9424877590351786));

  expect(segment_spacing(generate({SimModel::Blocks1, 1000, 0.5, ErrorDist::Normal, 1}).truth) ==
         20);

  const std::vector<double> six = {1.0, 2.0, 3.0, 101.0, 102.0, 103.0};
  DetectConfig cfg;
  cfg.screening = false;
  cfg.known_k = 1;
  expect(detect(six, cfg).segmentation.change_points == std::vector<int>{5});
  cfg.correction = false;
  expect(detect(six, cfg).segmentation.change_points == std::vector<int>{4});

  report("criterion 10 (formula anchor suite)", bad == 0,
         fmt("%d anchor checks, %d failed", total, bad));
}

void example_noise_floor() {
  Timer t;
  int zeros = 0;
  for (int rep = 0; rep < 200; ++rep) {
    Rng rng(substream_seed(11, rep));
    std::vector<double> x(200);
    for (double& v : x) v = rng.normal();
    DetectConfig cfg;
    cfg.allow_zero = true;
    if (detect(x, cfg).k_hat == 0) ++zeros;
  }
  report("example A (pure noise yields zero changes)", zeros >= 180,
         fmt("k_hat = 0 in %d/200 reps (>=180), %.0f s", zeros, t.sec()));
}

void example_exact_count() {
  Timer t;
  int exact = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const SimData d = generate({SimModel::Blocks1, 1000, 0.5, ErrorDist::Normal,
                                substream_seed(12, rep)});
    if (detect(d.values).k_hat == 11) ++exact;
  }
  report("example B (eleven shifts recovered exactly)", exact >= 190,
         fmt("k_hat = 11 in %d/200 reps (>=190), %.0f s", exact, t.sec()));
}

}  // namespace

int main() {
  const Timer total;
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  example_noise_floor();
  example_exact_count();
  std::printf("%s: %d failure(s), %.0f s total\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
              g_failures, total.sec());
  return g_failures == 0 ? 0 : 1;
}
