#include "nmcd/dp.hpp"

#include <limits>
#include <stdexcept>

namespace nmcd {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

bool operator==(const Segmentation& a, const Segmentation& b) {
  return a.n == b.n && a.change_points == b.change_points;
}

DpTable::DpTable(std::vector<int> boundaries, int l_max)
    : boundaries_(std::move(boundaries)), l_max_(l_max) {
  const std::size_t cells = static_cast<std::size_t>(l_max_ + 1) * boundaries_.size();
  best_.assign(cells, kNegInf);
  arg_.assign(cells, -1);
}

double DpTable::best_value(int L) const {
  if (L < 0 || L > l_max_) throw std::invalid_argument("L outside solved range");
  return value(L, static_cast<int>(boundaries_.size()) - 1);
}

namespace {

void check_l_max(const PairCosts& costs, int l_max) {
  if (l_max < 0 || l_max > costs.interior_count()) {
    throw std::invalid_argument("l_max exceeds interior boundary count");
  }
}

inline void fill_cell(const PairCosts& costs, DpTable& t, int L, int j) {
  double best = kNegInf;
  int arg = -1;
  for (int k = L; k < j; ++k) {
    const double v = t.value(L - 1, k) + costs.at(k, j);
    if (v > best) {
      best = v;
      arg = k;
    }
  }
  t.set(L, j, best, arg);
}

}  // namespace

DpTable solve_dp(const PairCosts& costs, int l_max) {
  check_l_max(costs, l_max);
  DpTable t(costs.boundaries(), l_max);
  const int last = costs.last_index();
  for (int j = 1; j <= last; ++j) t.set(0, j, costs.at(0, j), 0);
  for (int L = 1; L <= l_max; ++L) {
#pragma omp parallel for schedule(static) if (last > 96)
    for (int j = L + 1; j <= last; ++j) fill_cell(costs, t, L, j);
  }
  return t;
}

DpTable solve_dp_serial(const PairCosts& costs, int l_max) {
  check_l_max(costs, l_max);
  DpTable t(costs.boundaries(), l_max);
  const int last = costs.last_index();
  for (int j = 1; j <= last; ++j) t.set(0, j, costs.at(0, j), 0);
  for (int L = 1; L <= l_max; ++L) {
    for (int j = L + 1; j <= last; ++j) fill_cell(costs, t, L, j);
  }
  return t;
}

Segmentation reconstruct(const DpTable& table, int L) {
  if (L < 0 || L > table.l_max()) throw std::invalid_argument("L outside solved range");
  const std::vector<int>& b = table.boundaries();
  const int n = b.back() - 1;
  Segmentation seg{n, std::vector<int>(L)};
  int j = static_cast<int>(b.size()) - 1;
  for (int l = L; l >= 1; --l) {
    const int k = table.arg(l, j);
    if (k < 0) throw std::invalid_argument("no feasible segmentation at this L");
    seg.change_points[l - 1] = b[k];
    j = k;
  }
  return seg;
}

namespace {

// candidate better than incumbent if larger, or equal and reverse-
// lexicographically smaller (smallest rightmost change point, recursively)
bool revlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t t = a.size(); t-- > 0;) {
    if (a[t] != b[t]) return a[t] < b[t];
  }
  return false;
}

}  // namespace

std::pair<double, Segmentation> brute_force_dp(const PairCosts& costs, int L) {
  check_l_max(costs, L);
  const std::vector<int>& b = costs.boundaries();
  const int p = costs.interior_count();
  const int last = costs.last_index();
  const int n = b.back() - 1;

  double combos = 1.0;
  for (int t = 0; t < L; ++t) combos = combos * (p - t) / (t + 1);
  if (combos > 1e6) throw std::invalid_argument("instance too large for brute force");

  if (L == 0) return {costs.at(0, last), Segmentation{n, {}}};

  std::vector<int> pick(L);
  for (int t = 0; t < L; ++t) pick[t] = t + 1;  // grid indices of the L change points

  double best = kNegInf;
  std::vector<int> best_pick;
  for (;;) {
    double v = costs.at(0, pick[0]);
    for (int t = 1; t < L; ++t) v += costs.at(pick[t - 1], pick[t]);
    v += costs.at(pick[L - 1], last);
    if (v > best || (v == best && (best_pick.empty() || revlex_less(pick, best_pick)))) {
      best = v;
      best_pick = pick;
    }
    // next combination
    int t = L - 1;
    while (t >= 0 && pick[t] == p - (L - 1 - t)) --t;
    if (t < 0) break;
    ++pick[t];
    for (int s = t + 1; s < L; ++s) pick[s] = pick[s - 1] + 1;
  }

  Segmentation seg{n, std::vector<int>(L)};
  for (int t = 0; t < L; ++t) seg.change_points[t] = b[best_pick[t]];
  return {best, seg};
}

}  // namespace nmcd
